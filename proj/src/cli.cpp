#include "toeplitz/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toeplitz/errors.hpp"
#include "toeplitz/lattice.hpp"
#include "toeplitz/oracle.hpp"
#include "toeplitz/serialize.hpp"

namespace toeplitz::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
    bool json = false;
    Index m = 0;
    std::string word;
    Index q = 0;
    Index index = 0;
    std::size_t length = 0;
    std::optional<Index> depth;
    std::vector<std::string> operands;
};

Index resolve_depth(const Options& opt) {
    if (opt.depth) return *opt.depth;
    if (const char* env = std::getenv("TOEPLITZ_DEPTH"); env != nullptr && *env != '\0') {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || env[used] != '\0' || env[0] == '-') {
            throw ValidationError("TOEPLITZ_DEPTH must be a positive decimal integer");
        }
        return value;
    }
    return default_depth(opt.m, opt.q);
}

void print_decision(std::ostream& out, const Decision& d) {
    const auto& r = d.reduction;
    out << "verdict: " << to_string(d.verdict) << '\n';
    out << "reduction: q=" << r.q << " = m^" << r.k << " * " << r.h << " * " << r.p << " (k=" << r.k
        << ", h=" << r.h << ", p=" << r.p << ")\n";
    if (d.generator) out << "generator: " << d.generator->str() << '\n';
    if (d.constant_shortcut) out << "constant_shortcut: yes\n";
    if (d.rejection) {
        out << "reason: " << to_string(d.rejection->reason) << '\n';
        if (d.rejection->witness) {
            out << "witness: j=" << *d.rejection->witness << " in X(1.." << *d.rejection->checked_prefix_length
                << ")\n";
        }
    }
}

int cmd_generate(const Options& opt, std::ostream& out) {
    const ToeplitzSpec spec(opt.m, opt.word);
    const Word prefix = fixed_prefix(spec, opt.length);
    if (opt.json) {
        out << json{{"m", opt.m}, {"word", opt.word}, {"length", opt.length}, {"prefix", prefix.str()}}.dump() << '\n';
    } else {
        out << prefix.str() << '\n';
    }
    return kOk;
}

int cmd_access(const Options& opt, std::ostream& out) {
    const ToeplitzSpec spec(opt.m, opt.word);
    const char letter = access(spec, opt.index);
    if (opt.json) {
        out << json{{"index", opt.index}, {"letter", std::string(1, letter)}}.dump() << '\n';
    } else {
        out << letter << '\n';
    }
    return kOk;
}

int cmd_decide(const Options& opt, std::ostream& out) {
    const ToeplitzSpec spec(opt.m, opt.word);
    const Decision d = decide(spec, opt.q);
    if (opt.json) {
        out << decision_json(d).dump() << '\n';
    } else {
        print_decision(out, d);
    }
    return d.member() ? kOk : kNegative;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
    const ToeplitzSpec spec(opt.m, opt.word);
    const auto rows = enumerate(spec);
    if (opt.json) {
        json list = json::array();
        for (const auto& [p, d] : rows) {
            json row = decision_json(d);
            row["p"] = p;
            list.push_back(std::move(row));
        }
        out << json{{"m", opt.m}, {"word", opt.word}, {"rows", list}}.dump() << '\n';
        return kOk;
    }
    out << "p\tverdict\tgenerator/reason\n";
    for (const auto& [p, d] : rows) {
        out << p << '\t' << to_string(d.verdict) << '\t';
        if (d.generator) {
            out << d.generator->str();
        } else if (d.rejection) {
            out << to_string(d.rejection->reason);
            if (d.rejection->witness) out << " (j=" << *d.rejection->witness << ")";
        }
        out << '\n';
    }
    return kOk;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
    const ToeplitzSpec spec(opt.m, opt.word);
    const Decision d = decide(spec, opt.q);

    std::optional<UvSplit> uv;
    std::optional<QtdDecomposition> qtd;
    std::string uv_note = "X(qN) is not a modulo-m fixed point";
    std::string qtd_note = uv_note;
    if (d.member()) {
        try {
            uv = split_uv(spec, opt.q);
        } catch (const PreconditionError& e) {
            uv_note = e.what();
        }
        try {
            qtd = decompose_qtd(spec, opt.q);
        } catch (const QtdError& e) {
            qtd_note = e.what();
        }
    }

    if (opt.json) {
        out << decision_json(d, uv ? &*uv : nullptr, qtd ? &*qtd : nullptr).dump() << '\n';
    } else {
        print_decision(out, d);
        if (uv) {
            out << "U: " << uv->u.str() << "\nV: " << uv->v.str() << "\ns: " << uv->s << '\n';
        } else {
            out << "U o V split: not applicable (" << uv_note << ")\n";
        }
        if (qtd) {
            out << "Q: " << qtd->q_part.str() << "\nT: " << qtd->t_part.str() << "\nD: " << qtd->d_part.str()
                << "\nd=" << qtd->d << " q1=" << qtd->q1 << " m1=" << qtd->m1 << " t=" << qtd->t << '\n';
        } else {
            out << "Q o T o D: not applicable (" << qtd_note << ")\n";
        }
    }
    return d.member() ? kOk : kNegative;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const ToeplitzSpec spec(opt.m, opt.word);
    const Index depth = resolve_depth(opt);
    const CrossCheckReport report = cross_check(spec, opt.q, decide(spec, opt.q), depth);
    if (opt.json) {
        out << report_json(report).dump() << '\n';
    } else {
        print_decision(out, report.decision);
        out << "oracle: " << to_string(report.oracle.outcome);
        if (report.oracle.rejected_at) {
            out << " j=" << *report.oracle.rejected_at;
        } else {
            out << " depth=" << report.oracle.compared_depth << " (bounded evidence)";
        }
        out << "\nextracted_generator: " << report.oracle.extracted_generator.str() << '\n';
        out << (report.passed ? "pass" : "FAIL: " + report.explanation) << '\n';
    }
    return report.passed ? kOk : kNegative;
}

int cmd_compose(const Options& opt, std::ostream& out) {
    PartialWord acc = PartialWord::parse(opt.operands.front());
    for (std::size_t i = 1; i < opt.operands.size(); ++i) acc = compose(acc, PartialWord::parse(opt.operands[i]));
    if (opt.json) {
        out << json{{"result", acc.str()}}.dump() << '\n';
    } else {
        out << acc.str() << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Toeplitz fixed points and their lattice subsequences", "toeplitz"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Emit one JSON document instead of text");

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--m", opt.m, "Modulus m >= 2")->required();
        sub->add_option("--word", opt.word, "Generator word of length m-1")->required();
    };

    auto* generate = app.add_subcommand("generate", "Print X(1..L)");
    add_spec(generate);
    generate->add_option("--length", opt.length, "Prefix length L")->required();

    auto* access_cmd = app.add_subcommand("access", "Print X(N)");
    add_spec(access_cmd);
    access_cmd->add_option("--index", opt.index, "1-based index N")->required();

    auto* decide_cmd = app.add_subcommand("decide", "Is X(qN) a modulo-m fixed point?");
    add_spec(decide_cmd);
    decide_cmd->add_option("--q", opt.q, "Lattice step q >= 1")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Classify every divisor p of m^2 with m not dividing p");
    add_spec(enumerate_cmd);

    auto* decompose = app.add_subcommand("decompose", "Print the U o V split and Q o T o D decomposition");
    add_spec(decompose);
    decompose->add_option("--q", opt.q, "Lattice step q >= 1")->required();

    auto* verify = app.add_subcommand("verify", "Cross-check decide against the brute-force oracle");
    add_spec(verify);
    verify->add_option("--q", opt.q, "Lattice step q >= 1")->required();
    verify->add_option("--depth", opt.depth, "Oracle depth (default max(m^4, 4096, m*m^s/p) or $TOEPLITZ_DEPTH)");

    auto* compose_cmd = app.add_subcommand("compose", "Left-associated product of hole-terminated words");
    compose_cmd->add_option("words", opt.operands, "Partial words such as 'aa?' (a trailing '.' also works)")
        ->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*generate) return cmd_generate(opt, out);
        if (*access_cmd) return cmd_access(opt, out);
        if (*decide_cmd) return cmd_decide(opt, out);
        if (*enumerate_cmd) return cmd_enumerate(opt, out);
        if (*decompose) return cmd_decompose(opt, out);
        if (*verify) return cmd_verify(opt, out);
        if (*compose_cmd) return cmd_compose(opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        if (opt.json) out << json{{"error", e.what()}}.dump() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace toeplitz::cli
