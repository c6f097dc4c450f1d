#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ktheta/dualpair.hpp"
#include "ktheta/fock.hpp"
#include "ktheta/ktype.hpp"

namespace ktheta {

// Executable property suites tying the catalog formulas to the oracle,
// plus the user-facing constant-parity predicate on K-type sets.

struct VerificationReport {
    std::string suite;
    std::string scope;  // textual config / compact group / family
    int member = -1;    // -1 when not applicable
    int d_max = -1;     // -1 when not applicable
    std::string status; // "pass" | "fail" | "skip"
    long long checked = 0;
    std::optional<std::string> counterexample;
    std::optional<std::string> skip_reason;

    bool passed() const { return status == "pass"; }
    bool failed() const { return status == "fail"; }
};

std::string report_to_json(const VerificationReport& r);

// Constant-parity predicate on a user-supplied K-type set (the set stands
// for the K-spectrum of an irreducible module).  Fails with the
// lexicographically first mismatched pair in canonical order.
VerificationReport check_parity_uniform(const MaxCompactDesc& k,
                                        const std::vector<KTypeParam>& types);

// No K-type may occur at degrees of both parities up to d_max.
VerificationReport check_disjointness(const DualPairConfig& cfg, int member, int d_max,
                                      const OracleLimits& limits = {});

// Oracle min_degree must equal the closed-form degree for every type that
// occurs within d_max.  Throws SplitRequired when no realization exists.
VerificationReport check_degree_table(const DualPairConfig& cfg, int member, int d_max,
                                      const OracleLimits& limits = {});

// Under the alignment condition, every type occurring at degree d has
// parity d mod 2 (hence min_degree = parity mod 2).  Throws
// Condition3Violated when the precondition fails.
VerificationReport check_parity_degree(const DualPairConfig& cfg, int member, int d_max,
                                       const OracleLimits& limits = {});

// select_companion must satisfy the stable-range/type-II, splitting and
// alignment conditions over a whole rank grid.
VerificationReport check_companion_pipeline(Family family, int max_total_rank);

// Runs a suite case, converting SplitRequired / Condition3Violated into a
// skip report with the reason recorded.
VerificationReport run_suite_case(const std::string& suite, const std::string& scope,
                                  int member, int d_max,
                                  const std::function<VerificationReport()>& body);

// Small-ranks working set: compact factors of rank <= 3, blocks with at
// most 4 columns, N <= 12.  Every family row of the degree table appears.
std::vector<std::pair<DualPairConfig, int>> small_ranks_preset();

// Additional rank-4/5 orthogonal instances used by the conformance tests;
// heavier than the preset but still desk-scale.
std::vector<std::pair<DualPairConfig, int>> conformance_extras();

// All groups of a family with total rank in [1, max_total_rank];
// two-parameter families enumerate every signature including rank-0 parts.
std::vector<GroupDesc> rank_grid(Family family, int max_total_rank);

extern const std::vector<Family> kAllFamilies;

} // namespace ktheta
