#include "insdel/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "insdel/codefile.hpp"

namespace insdel {

using nlohmann::ordered_json;

std::optional<std::pair<int, int>> rm_block_params_from_label(const std::string& label) {
    // exact-match only: permuted/derived codes carry suffixes and lose the tag
    if (label.rfind("rm(u=", 0) != 0) return std::nullopt;
    int u = 0, m = 0;
    char tail[32] = {0};
    if (std::sscanf(label.c_str(), "rm(u=%d,m=%d,order=%31[^)])", &u, &m, tail) != 3)
        return std::nullopt;
    if (std::string(tail) != "block") return std::nullopt;
    std::ostringstream rebuilt;
    rebuilt << "rm(u=" << u << ",m=" << m << ",order=block)";
    if (rebuilt.str() != label) return std::nullopt;
    return std::make_pair(u, m);
}

AnalysisReport analyze_code(const LinearCode& c, const AnalyzeOptions& opts) {
    AnalysisReport rep;
    rep.label = c.label;
    rep.p = c.field.p();
    rep.m = c.field.m();
    rep.q = c.field.q();
    rep.poly_desc.assign(c.field.modulus().rbegin(), c.field.modulus().rend());
    rep.n = c.n;
    rep.k = c.k;
    rep.environment = {kToolVersion, opts.max_codewords, opts.max_subspaces, opts.seed};

    if (opts.with_exact) rep.exact = insdel_code_exact(c, opts.max_codewords, opts.threads);
    if (opts.with_exact || opts.with_ghw || opts.with_bounds) {
        try {
            rep.d_hamming = min_hamming_distance(c, opts.max_codewords);
        } catch (const guard_error&) {
            // bounds degrade gracefully without d_H
        }
    }
    if (opts.with_ghw) rep.ghw = ghw_profile(c, opts.max_subspaces);
    if (opts.with_bounds) {
        BoundOptions bopts;
        bopts.max_codewords = opts.max_codewords;
        bopts.max_subspaces = opts.max_subspaces;
        bopts.rm_params = rm_block_params_from_label(c.label);
        rep.bounds = all_bounds(c, bopts);
    }
    verify_report_soundness(rep);
    return rep;
}

AnalysisReport apply_and_report(const LinearCode& c, const std::vector<int>& perm0,
                                const AnalyzeOptions& opts) {
    const LinearCode pc = permute_coordinates(c, perm0);
    AnalysisReport rep = analyze_code(pc, opts);
    if (pc.label != c.label) {  // non-identity permutation
        rep.notes.push_back("applied " + serialize_permutation(perm0));
        rep.notes.push_back(
            "ordering-free results (c23, half_singleton, c24_exact, c24_plotkin, direct_2dH, "
            "singleton_2nk1, cz21_2nk, p41, d_H, ghw) are invariant under any coordinate "
            "permutation; t21_search, c21, c22, t31_rm and the exact insdel distance depend on "
            "the ordering");
    }
    return rep;
}

void verify_report_soundness(const AnalysisReport& rep) {
    if (!rep.exact) return;
    for (const BoundResult& b : rep.bounds)
        if (b.applicable && b.value < rep.exact->distance)
            throw soundness_error("bound " + b.name + " = " + std::to_string(b.value) +
                                  " fell below the exact insdel distance " +
                                  std::to_string(rep.exact->distance));
}

namespace {

ordered_json bound_to_json(const BoundResult& b) {
    ordered_json j;
    j["name"] = b.name;
    j["applicable"] = b.applicable;
    j["value"] = b.value;
    if (!b.reason.empty()) j["reason"] = b.reason;
    if (!b.params.empty()) {
        ordered_json p;
        for (const auto& [k, v] : b.params) p[k] = v;
        j["params"] = p;
    }
    if (b.witness) {
        j["witness"] = ordered_json{{"a", b.witness->first}, {"b", b.witness->second}};
    }
    if (b.witness_codeword) j["witness_codeword"] = *b.witness_codeword;
    return j;
}

BoundResult bound_from_json(const ordered_json& j) {
    BoundResult b;
    b.name = j.at("name").get<std::string>();
    b.applicable = j.at("applicable").get<bool>();
    b.value = j.at("value").get<long>();
    if (j.contains("reason")) b.reason = j.at("reason").get<std::string>();
    if (j.contains("params"))
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            b.params.emplace_back(it.key(), it.value().get<long>());
    if (j.contains("witness"))
        b.witness = std::make_pair(j.at("witness").at("a").get<Word>(),
                                   j.at("witness").at("b").get<Word>());
    if (j.contains("witness_codeword")) b.witness_codeword = j.at("witness_codeword").get<Word>();
    return b;
}

}  // namespace

ordered_json report_to_json(const AnalysisReport& rep) {
    verify_report_soundness(rep);
    ordered_json j;
    j["schema"] = 1;
    j["tool"] = ordered_json{{"name", kToolName}, {"version", rep.environment.version}};
    ordered_json code;
    code["label"] = rep.label;
    code["p"] = rep.p;
    code["m"] = rep.m;
    code["q"] = rep.q;
    if (!rep.poly_desc.empty()) code["poly"] = rep.poly_desc;
    code["n"] = rep.n;
    code["k"] = rep.k;
    j["code"] = code;
    if (rep.d_hamming) j["d_hamming"] = *rep.d_hamming;
    if (rep.ghw) j["ghw"] = *rep.ghw;
    if (rep.exact) {
        const CodeInsdel& e = *rep.exact;
        j["exact"] = ordered_json{{"distance", e.distance},
                                  {"lcs", e.lcs},
                                  {"message_index_a", e.message_index_a},
                                  {"message_index_b", e.message_index_b},
                                  {"witness_a", e.witness_a},
                                  {"witness_b", e.witness_b},
                                  {"common", e.common}};
    }
    ordered_json bounds = ordered_json::array();
    for (const BoundResult& b : rep.bounds) bounds.push_back(bound_to_json(b));
    j["bounds"] = bounds;
    j["notes"] = rep.notes;
    j["environment"] = ordered_json{{"version", rep.environment.version},
                                    {"max_codewords", rep.environment.max_codewords},
                                    {"max_subspaces", rep.environment.max_subspaces},
                                    {"seed", rep.environment.seed}};
    return j;
}

AnalysisReport report_from_json(const ordered_json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw input_error("unsupported report schema");
    AnalysisReport rep;
    const auto& code = j.at("code");
    rep.label = code.at("label").get<std::string>();
    rep.p = code.at("p").get<int>();
    rep.m = code.at("m").get<int>();
    rep.q = code.at("q").get<long>();
    if (code.contains("poly")) rep.poly_desc = code.at("poly").get<std::vector<int>>();
    rep.n = code.at("n").get<int>();
    rep.k = code.at("k").get<int>();
    if (j.contains("d_hamming")) rep.d_hamming = j.at("d_hamming").get<long>();
    if (j.contains("ghw")) rep.ghw = j.at("ghw").get<std::vector<long>>();
    if (j.contains("exact")) {
        const auto& e = j.at("exact");
        CodeInsdel ci;
        ci.distance = e.at("distance").get<int>();
        ci.lcs = e.at("lcs").get<int>();
        ci.message_index_a = e.at("message_index_a").get<std::uint64_t>();
        ci.message_index_b = e.at("message_index_b").get<std::uint64_t>();
        ci.witness_a = e.at("witness_a").get<Word>();
        ci.witness_b = e.at("witness_b").get<Word>();
        ci.common = e.at("common").get<Word>();
        rep.exact = std::move(ci);
    }
    for (const auto& b : j.at("bounds")) rep.bounds.push_back(bound_from_json(b));
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    const auto& env = j.at("environment");
    rep.environment.version = env.at("version").get<std::string>();
    rep.environment.max_codewords = env.at("max_codewords").get<long>();
    rep.environment.max_subspaces = env.at("max_subspaces").get<long>();
    rep.environment.seed = env.at("seed").get<std::uint64_t>();
    return rep;
}

namespace {

void print_word(std::ostream& os, const Word& w) {
    for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
}

}  // namespace

void print_report(std::ostream& os, const AnalysisReport& rep) {
    os << "code: " << (rep.label.empty() ? "(unlabeled)" : rep.label) << "  [" << rep.n << ","
       << rep.k << "] over F_" << rep.q << "\n";
    if (rep.m > 1) {
        os << "  elements are integers 0..q-1 (base-p digits = polynomial coefficients)";
        if (rep.q == 4 && rep.poly_desc == std::vector<int>{1, 1, 1})
            os << "; legend: 2 = w, 3 = w^2 with w^2+w+1 = 0";
        os << "\n";
    }
    if (rep.d_hamming) os << "d_H = " << *rep.d_hamming << "\n";
    if (rep.ghw) {
        os << "ghw:";
        for (size_t r = 0; r < rep.ghw->size(); ++r)
            os << " d_" << r + 1 << "=" << (*rep.ghw)[r];
        os << "\n";
    }
    if (rep.exact) {
        os << "exact insdel distance = " << rep.exact->distance << "  (lcs " << rep.exact->lcs
           << ")\n";
        os << "  witness a (message " << rep.exact->message_index_a << "): ";
        print_word(os, rep.exact->witness_a);
        os << "\n  witness b (message " << rep.exact->message_index_b << "): ";
        print_word(os, rep.exact->witness_b);
        os << "\n  common subsequence: ";
        print_word(os, rep.exact->common);
        os << "\n";
    }
    if (!rep.bounds.empty()) {
        os << "bounds (upper bounds on the insdel distance):\n";
        for (const BoundResult& b : rep.bounds) {
            os << "  " << b.name;
            for (size_t pad = b.name.size(); pad < 16; ++pad) os << ' ';
            if (b.applicable) {
                os << b.value;
                if (b.witness) os << "  [witness pair attached]";
            } else {
                os << "n/a  (" << b.reason << ")";
            }
            os << "\n";
        }
    }
    for (const std::string& note : rep.notes) os << "note: " << note << "\n";
}

}  // namespace insdel
