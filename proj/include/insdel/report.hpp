#pragma once

#include <iosfwd>
#include <optional>

#include "json.hpp"

#include "insdel/bounds.hpp"

namespace insdel {

struct ReportEnvironment {
    std::string version;
    long max_codewords = kDefaultMaxCodewords;
    long max_subspaces = kDefaultMaxSubspaces;
    std::uint64_t seed = 0;
    bool operator==(const ReportEnvironment&) const = default;
};

/// Aggregate of exact metrics and all bound results for one code.
struct AnalysisReport {
    std::string label;
    int p = 0;
    int m = 1;
    long q = 0;
    std::vector<int> poly_desc;  // modulus degree-descending; empty for m == 1
    int n = 0;
    int k = 0;
    std::optional<long> d_hamming;
    std::optional<std::vector<long>> ghw;
    std::optional<CodeInsdel> exact;
    std::vector<BoundResult> bounds;
    std::vector<std::string> notes;
    ReportEnvironment environment;
    bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
    bool with_exact = false;
    bool with_ghw = false;
    bool with_bounds = false;
    long max_codewords = kDefaultMaxCodewords;
    long max_subspaces = kDefaultMaxSubspaces;
    int threads = 1;
    std::uint64_t seed = 0;
};

/// (u, m) when the label says the code is a Reed-Muller construction whose
/// point order keeps the monomial blocks consecutive ("order=block").
std::optional<std::pair<int, int>> rm_block_params_from_label(const std::string& label);

AnalysisReport analyze_code(const LinearCode& c, const AnalyzeOptions& opts);

/// Permute, analyze, and annotate which results are ordering-free.
AnalysisReport apply_and_report(const LinearCode& c, const std::vector<int>& perm0,
                                const AnalyzeOptions& opts);

/// Soundness tripwire: every applicable bound must be >= the exact distance
/// whenever both are present. Throws soundness_error on violation.
void verify_report_soundness(const AnalysisReport& rep);

nlohmann::ordered_json report_to_json(const AnalysisReport& rep);
/// Inverse of report_to_json. Parse with nlohmann::ordered_json so that the
/// params tables keep their order.
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

void print_report(std::ostream& os, const AnalysisReport& rep);

}  // namespace insdel
