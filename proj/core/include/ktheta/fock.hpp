#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktheta/dualpair.hpp"
#include "ktheta/ktype.hpp"

namespace ktheta {

// Brute-force ground truth for occurrence degrees: realize the polynomial
// model of a dual pair with its explicit linear compact-group action,
// decompose each homogeneous degree into K-types by exact linear algebra
// on highest-weight-vector spaces, and read off occurrence degrees
// independently of the closed-form degree table.

// One block of variables: the standard (or dual) module of one compact
// factor, taken with some multiplicity.  rows is the complex dimension of
// the factor's module (k for U(k)/O(k), 2k for Sp(k)).
struct VariableBlock {
    int factor = 0;
    int rows = 0;
    int cols = 0;
    bool dual = false;
};

// Per-factor normalization from raw torus weights to the K-type labels the
// degree table is written in: an additive shift on U-factor labels, a
// det-relabel flag on O-factors, nothing on Sp-factors.
struct FactorShift {
    long u_shift = 0;
    bool o_sign_twist = false;
};

struct FockRealization {
    MaxCompactDesc compact;
    std::vector<VariableBlock> blocks;
    long var_count = 0; // N; always ambient_dim / 2 of the source pair
    std::vector<FactorShift> shifts;
};

struct OracleLimits {
    long monomial_cap = 2'000'000;
    int jobs = 1;
    bool force_exact = false; // route every rank through Bareiss
};

// Exact multiset of K-types of one homogeneous degree.
struct SpectrumTable {
    int d = 0;
    std::map<KTypeParam, long> entries;
};

// The K-module structure of the polynomial model for one member of a pair.
// Requires the cover to split over that member.
FockRealization build_realization(const DualPairConfig& cfg, int member);

// Decomposes degree d.  Monomials are graded by torus weight; per dominant
// weight the highest-weight-vector space is cut out as the joint kernel of
// the simple raising operators, O-factor signs are resolved by central /
// reflection involutions, and labels are normalized by the realization's
// shifts.  The result is certified against the dimension-sum identity
// (InternalRankError on failure, after an exact recomputation).
SpectrumTable spectrum(const FockRealization& r, int d, const OracleLimits& limits = {});

// Least d <= d_max at which t occurs, or absent if none is found (absence
// up to d_max proves nothing beyond d_max).
std::optional<int> min_degree(const FockRealization& r, const KTypeParam& t, int d_max,
                              const OracleLimits& limits = {});

// All d <= d_max with positive multiplicity, ascending.
std::vector<int> occurrence_degrees(const FockRealization& r, const KTypeParam& t,
                                    int d_max, const OracleLimits& limits = {});

// Golden-file line: {"d":2,"entries":[{"ktype":"O2[2;+]","mult":1},...]}
// sorted by the canonical K-type order; integers only, bit-exact across
// platforms.
std::string spectrum_to_jsonl(const SpectrumTable& t);
SpectrumTable spectrum_from_jsonl(const std::string& line);

// Canonical description of a realization; cache key material.
std::string realization_key(const FockRealization& r);

} // namespace ktheta
