#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktheta/errors.hpp"
#include "ktheta/ktype.hpp"

namespace ktheta {

// Catalog of irreducible real reductive dual pairs: classification,
// stable-range and splitting conditions, closed-form occurrence degrees,
// and companion selection.

enum class Family {
    GL_R,  // GL_m(R)
    GL_C,  // GL_m(C)
    GL_H,  // GL_m(H)
    O_C,   // O_p(C)
    Sp_C,  // Sp_{2n}(C)
    O_pq,  // O(p,q)
    Sp_R,  // Sp_{2n}(R)
    Sp_pq, // Sp(p,q)
    Ostar, // O*(2n)
    U_pq,  // U(p,q)
};

// A member group of an irreducible pair.  Single-parameter families store
// their rank in p; two-parameter families use (p,q).  Total rank must be
// positive.
struct GroupDesc {
    Family family;
    int p = 0;
    int q = 0;
};

bool operator==(const GroupDesc& a, const GroupDesc& b);

// One factor of a maximal compact subgroup.
enum class GroupTag { U, Sp, O };

struct CompactFactor {
    GroupTag tag;
    int rank;
};

using MaxCompactDesc = std::vector<CompactFactor>;

bool operator==(const CompactFactor& a, const CompactFactor& b);

// An irreducible real reductive dual pair with the size 2N of its ambient
// Sp_{2N}(R).
struct DualPairConfig {
    GroupDesc g1;
    GroupDesc g2;
    long ambient_dim = 0; // 2N

    const GroupDesc& member(int idx) const { return idx == 0 ? g1 : g2; }
    const GroupDesc& other(int idx) const { return idx == 0 ? g2 : g1; }
};

// Validates that (g1, g2) is a row of the classification table (in either
// order) and fills in the ambient symplectic size.  Throws ParseError on a
// non-row combination and MalformedWeight on bad rank parameters.
DualPairConfig make_pair(const GroupDesc& g1, const GroupDesc& g2);

// The maximal compact subgroup of g, as a list of classical factors.
MaxCompactDesc maximal_compact(const GroupDesc& g);

bool is_type2(const DualPairConfig& cfg);

// Stable-range test with the designated member as the smaller one.  For
// type-II pairs the analogous non-vanishing condition n >= m is returned
// unless strict_type1 is set, in which case NotTypeI is thrown.
bool is_stable_range_smaller(const DualPairConfig& cfg, int smaller,
                             bool strict_type1 = false);

// True iff the splitting table's sufficient condition holds for the
// metaplectic cover over the given member.  The table is treated as the
// definition; nothing is extrapolated beyond its cells.
bool cover_splits(const DualPairConfig& cfg, int member);

// Occurrence-degree label shift of a U-factor of the given member's
// compact group: the formulas read sum |a_i - shift|.  Zero for O/Sp
// factors.  Throws SplitRequired when the shift would be half-integral.
long u_factor_shift(const DualPairConfig& cfg, int member, int factor);

// Closed-form occurrence degree of a K-type for the Fock model of the
// pair, per family row.  Requires cover_splits(cfg, member); the type must
// be canonical and shaped for maximal_compact(member).
long degree_formula(const DualPairConfig& cfg, int member, const KTypeParam& t);

// Chooses the minimal companion making g the smaller member of a pair that
// satisfies the stable-range/type-II condition, the splitting condition,
// and the degree/parity alignment condition.  Scan order: a single free
// rank takes the smallest valid value; a free (p,q) minimizes p+q with
// p = q preferred, then smallest p.
DualPairConfig select_companion(const GroupDesc& g);

// Arithmetic alignment condition: deg(sigma) = parity(sigma) mod 2 for
// every type occurring in the Fock model.  Blank table cells are
// unconditionally true.
bool condition3_predicate(const DualPairConfig& cfg, int member);

// Checks that a canonical K-type matches a compact group factor-by-factor.
bool shaped_for(const KTypeParam& t, const MaxCompactDesc& k);

// Text syntax: Sp4R, O(2,1), U(1,1), GL3H, O3C, Sp4C, Ostar6; pairs are
// "(Sp4R,O(4,2))".
std::string to_string(const GroupDesc& g);
std::string to_string(const DualPairConfig& cfg);
std::string to_string(const MaxCompactDesc& k);
GroupDesc parse_group(const std::string& text);
DualPairConfig parse_pair(const std::string& text);
MaxCompactDesc parse_compact(const std::string& text);

std::string group_to_json(const GroupDesc& g);

} // namespace ktheta
