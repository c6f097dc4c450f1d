#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ktheta/errors.hpp"

namespace ktheta {

// Parametrization, canonical forms, parity, dimension and the O(n) <-> U(n)
// correspondence for irreducible types of the compact classical groups
// U(n), Sp(n), O(n), and finite products of them.
//
// Weights are stored as explicit integer lists; ranks are desk-scale.

// U(n)-type: highest weight a_1 >= a_2 >= ... >= a_n, entries may be negative.
struct UWeight {
    int n = 0;
    std::vector<int> a;
    friend bool operator==(const UWeight&, const UWeight&) = default;
};

// Sp(n)-type: highest weight a_1 >= ... >= a_n >= 0.
struct SpWeight {
    int n = 0;
    std::vector<int> a;
    friend bool operator==(const SpWeight&, const SpWeight&) = default;
};

// O(n)-type: (a_1,...,a_[n/2]; eps) with a_1 >= ... >= a_[n/2] >= 0 and
// eps in {+1,-1}.  For even n with a_{n/2} > 0 the two signs name the same
// type; the canonical representative carries eps = +1.  O(0) and O(1) carry
// an empty weight list.
struct OWeight {
    int n = 0;
    std::vector<int> a;
    int eps = +1;
    friend bool operator==(const OWeight&, const OWeight&) = default;
};

struct KTypeParam;
using KTypeList = std::vector<KTypeParam>;

// Tagged parameter of a K-type: the universal currency of the toolkit.
// Product is flat (no nested Product) and non-empty in canonical form.
struct KTypeParam {
    std::variant<UWeight, SpWeight, OWeight, KTypeList> value;

    KTypeParam() : value(UWeight{}) {}
    KTypeParam(UWeight w) : value(std::move(w)) {}
    KTypeParam(SpWeight w) : value(std::move(w)) {}
    KTypeParam(OWeight w) : value(std::move(w)) {}
    KTypeParam(KTypeList fs) : value(std::move(fs)) {}

    bool is_product() const { return std::holds_alternative<KTypeList>(value); }
};

// Mod-2 invariant of a K-type.
class ParityBit {
public:
    ParityBit() = default;
    explicit ParityBit(long v) : bit_(static_cast<int>(((v % 2) + 2) % 2)) {}
    int value() const { return bit_; }
    friend ParityBit operator+(ParityBit a, ParityBit b) {
        return ParityBit(a.bit_ + b.bit_);
    }
    friend bool operator==(ParityBit a, ParityBit b) = default;

private:
    int bit_ = 0;
};

// Canonical representative of a K-type.  Validates the variant invariants
// (throws MalformedWeight / RankMismatch), normalizes the even-n sign
// coincidence for O-types to eps = +1, flattens products and unwraps
// singleton products.  Idempotent; equality of K-types is equality of
// canonical forms.
KTypeParam canonicalize(const KTypeParam& t);

// Parity per the classical tables: sum of entries mod 2 for U/Sp,
// sum + (1-eps)/2 * n for O(n), sum over factors for products.
// Expects a canonical input.
ParityBit parity(const KTypeParam& t);

// The U(n)-type generated by the highest weight vectors of an O(n)-type:
// (a_1,...,a_x, 1,...,1, 0,...,0) with (1-eps)/2 * (n-2x) ones, where x is
// the number of nonzero entries.  Expects a canonical input.
UWeight o_to_u(const OWeight& t);

// Inverse of o_to_u where defined.  Returns the unique O(n)-type whose
// image is t when t lies in the bijection's image (all entries >= 0 and,
// with r = #{entries >= 2}, s = #{entries = 1}, 2r+s <= n); absent
// otherwise.
std::optional<OWeight> u_to_o(const UWeight& t);

// Dimension of the irreducible module (Weyl dimension formula; type A for
// U(n), type C for Sp(n), types B/D for O(n) with the doubling rule for
// even n and full support).  Multiplicative over products.
mpz_class dim(const KTypeParam& t);

// Total ordering on canonical K-types: lexicographic on
// (group tag, rank, weight list, sign); products compare factor-wise.
// Used for deterministic spectrum output.
std::strong_ordering compare(const KTypeParam& lhs, const KTypeParam& rhs);

inline bool operator==(const KTypeParam& a, const KTypeParam& b) {
    return compare(a, b) == std::strong_ordering::equal;
}
inline bool operator<(const KTypeParam& a, const KTypeParam& b) {
    return compare(a, b) == std::strong_ordering::less;
}

// Canonical text syntax: U3[3,1,0], Sp2[2,0], O4[2,1;+], products joined
// by '*'.  parse_ktype throws ParseError on malformed input.
std::string to_string(const KTypeParam& t);
std::string to_string(const UWeight& w);
std::string to_string(const SpWeight& w);
std::string to_string(const OWeight& w);
KTypeParam parse_ktype(const std::string& text);

// JSON form: {"group":"O","n":4,"a":[2,1],"eps":1}; products use
// {"group":"Product","factors":[...]}.
std::string ktype_to_json(const KTypeParam& t);
KTypeParam ktype_from_json(const std::string& json_text);

} // namespace ktheta
