#include "toeplitz/serialize.hpp"

namespace toeplitz {

using nlohmann::json;

json uv_json(const UvSplit& uv) { return {{"U", uv.u.str()}, {"V", uv.v.str()}, {"s", uv.s}}; }

json qtd_json(const QtdDecomposition& qtd) {
    return {{"Q", qtd.q_part.str()}, {"T", qtd.t_part.str()}, {"D", qtd.d_part.str()},
            {"d", qtd.d},           {"q1", qtd.q1},         {"m1", qtd.m1},
            {"t", qtd.t}};
}

json decision_json(const Decision& decision, const UvSplit* uv, const QtdDecomposition* qtd) {
    json out;
    out["verdict"] = to_string(decision.verdict);
    out["reduction"] = {{"k", decision.reduction.k}, {"h", decision.reduction.h}, {"p", decision.reduction.p}};
    out["reason"] = nullptr;
    out["witness"] = nullptr;
    if (decision.rejection) {
        out["reason"] = to_string(decision.rejection->reason);
        if (decision.rejection->witness) {
            out["witness"] = {{"index", *decision.rejection->witness},
                              {"checked_prefix_length", *decision.rejection->checked_prefix_length}};
        }
    }
    out["generator"] = decision.generator ? json(decision.generator->str()) : json(nullptr);
    out["constant_shortcut"] = decision.constant_shortcut;
    out["decomposition"] = qtd ? qtd_json(*qtd) : json(nullptr);
    out["uv"] = uv ? uv_json(*uv) : json(nullptr);
    return out;
}

json report_json(const CrossCheckReport& report) {
    json out = decision_json(report.decision);
    out["outcome"] = to_string(report.oracle.outcome);
    out["rejected_at"] = report.oracle.rejected_at ? json(*report.oracle.rejected_at) : json(nullptr);
    out["compared_depth"] = report.oracle.compared_depth;
    out["extracted_generator"] = report.oracle.extracted_generator.str();
    out["pass"] = report.passed;
    out["explanation"] = report.explanation;
    return out;
}

} // namespace toeplitz
