#pragma once

#include <nlohmann/json.hpp>

#include "toeplitz/lattice.hpp"
#include "toeplitz/oracle.hpp"

namespace toeplitz {

// Machine-readable decision document. `uv` and `decomposition` are null when
// not supplied.
nlohmann::json decision_json(const Decision& decision, const UvSplit* uv = nullptr,
                             const QtdDecomposition* qtd = nullptr);

nlohmann::json uv_json(const UvSplit& uv);
nlohmann::json qtd_json(const QtdDecomposition& qtd);

// Decision document plus outcome, rejected_at, compared_depth,
// extracted_generator, pass and explanation.
nlohmann::json report_json(const CrossCheckReport& report);

} // namespace toeplitz
