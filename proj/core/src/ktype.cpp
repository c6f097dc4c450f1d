#include "ktheta/ktype.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace ktheta {

namespace {

void check_weakly_decreasing(const std::vector<int>& a, const char* what) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i - 1] < a[i]) {
            throw MalformedWeight(std::string(what) + ": entries not weakly decreasing");
        }
    }
}

void validate(const UWeight& w) {
    if (w.n < 0 || static_cast<int>(w.a.size()) != w.n) {
        throw RankMismatch("U-weight: list length disagrees with rank");
    }
    check_weakly_decreasing(w.a, "U-weight");
}

void validate(const SpWeight& w) {
    if (w.n < 0 || static_cast<int>(w.a.size()) != w.n) {
        throw RankMismatch("Sp-weight: list length disagrees with rank");
    }
    check_weakly_decreasing(w.a, "Sp-weight");
    if (!w.a.empty() && w.a.back() < 0) {
        throw MalformedWeight("Sp-weight: last entry negative");
    }
}

void validate(const OWeight& w) {
    if (w.n < 0 || static_cast<int>(w.a.size()) != w.n / 2) {
        throw RankMismatch("O-weight: list length disagrees with floor(n/2)");
    }
    check_weakly_decreasing(w.a, "O-weight");
    if (!w.a.empty() && w.a.back() < 0) {
        throw MalformedWeight("O-weight: negative entry");
    }
    if (w.eps != 1 && w.eps != -1) {
        throw MalformedWeight("O-weight: sign must be +1 or -1");
    }
}

OWeight canonical_o(OWeight w) {
    validate(w);
    // Even rank with full support: the two signs name the same type.
    if (w.n > 0 && w.n % 2 == 0 && !w.a.empty() && w.a.back() > 0) {
        w.eps = +1;
    }
    if (w.n == 0) {
        w.eps = +1; // O(0) is trivial; a single type.
    }
    return w;
}

int tag_rank(const KTypeParam& t) {
    return std::visit(
        [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, KTypeList>) {
                return 0;
            } else {
                return v.n;
            }
        },
        t.value);
}

int tag_order(const KTypeParam& t) {
    return static_cast<int>(t.value.index()); // U=0, Sp=1, O=2, Product=3
}

// Type-A Weyl dimension: prod_{i<j} (a_i - a_j + j - i) / (j - i).
mpz_class dim_type_a(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    mpz_class num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= a[i] - a[j] + j - i;
            den *= j - i;
        }
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

// Type-C Weyl dimension for Sp(n), weight a_1 >= ... >= a_n >= 0.
mpz_class dim_type_c(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<long> l(n), r(n);
    for (int i = 0; i < n; ++i) {
        l[i] = a[i] + n - i;     // a_i + rho_i with rho_i = n - i (1-based: n-i+1)
        r[i] = n - i;
    }
    mpz_class num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= l[i];
        den *= r[i];
        for (int j = i + 1; j < n; ++j) {
            num *= (l[i] - l[j]) * (l[i] + l[j]);
            den *= (r[i] - r[j]) * (r[i] + r[j]);
        }
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

// Type-B Weyl dimension for SO(2l+1), integral weight of length l.
// Doubled coordinates keep everything integral: L_i = 2a_i + 2(l-i) + 1.
mpz_class dim_type_b(const std::vector<int>& a) {
    const int l = static_cast<int>(a.size());
    std::vector<long> L(l), P(l);
    for (int i = 0; i < l; ++i) {
        L[i] = 2L * a[i] + 2L * (l - 1 - i) + 1;
        P[i] = 2L * (l - 1 - i) + 1;
    }
    mpz_class num = 1, den = 1;
    for (int i = 0; i < l; ++i) {
        num *= L[i];
        den *= P[i];
        for (int j = i + 1; j < l; ++j) {
            num *= (L[i] - L[j]) * (L[i] + L[j]);
            den *= (P[i] - P[j]) * (P[i] + P[j]);
        }
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

// Type-D Weyl dimension for SO(2l), integral weight of length l (a_l >= 0
// here; the formula is even in a_l).
mpz_class dim_type_d(const std::vector<int>& a) {
    const int l = static_cast<int>(a.size());
    if (l <= 1) return 1;
    std::vector<long> L(l), P(l);
    for (int i = 0; i < l; ++i) {
        L[i] = a[i] + (l - 1 - i);
        P[i] = l - 1 - i;
    }
    mpz_class num = 1, den = 1;
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            num *= (L[i] - L[j]) * (L[i] + L[j]);
            den *= (P[i] - P[j]) * (P[i] + P[j]);
        }
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

mpz_class dim_o(const OWeight& w) {
    if (w.n <= 1) return 1;
    if (w.n % 2 == 1) return dim_type_b(w.a);
    const bool full_support = !w.a.empty() && w.a.back() > 0;
    mpz_class d = dim_type_d(w.a);
    return full_support ? mpz_class(2 * d) : d;
}

} // namespace

KTypeParam canonicalize(const KTypeParam& t) {
    return std::visit(
        [](const auto& v) -> KTypeParam {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UWeight>) {
                validate(v);
                return KTypeParam(v);
            } else if constexpr (std::is_same_v<T, SpWeight>) {
                validate(v);
                return KTypeParam(v);
            } else if constexpr (std::is_same_v<T, OWeight>) {
                return KTypeParam(canonical_o(v));
            } else {
                if (v.empty()) {
                    throw MalformedWeight("product K-type must be non-empty");
                }
                KTypeList flat;
                for (const KTypeParam& f : v) {
                    KTypeParam cf = canonicalize(f);
                    if (cf.is_product()) {
                        const auto& inner = std::get<KTypeList>(cf.value);
                        flat.insert(flat.end(), inner.begin(), inner.end());
                    } else {
                        flat.push_back(std::move(cf));
                    }
                }
                if (flat.size() == 1) return flat.front();
                return KTypeParam(std::move(flat));
            }
        },
        t.value);
}

ParityBit parity(const KTypeParam& t) {
    return std::visit(
        [](const auto& v) -> ParityBit {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UWeight> || std::is_same_v<T, SpWeight>) {
                long s = 0;
                for (int x : v.a) s += x;
                return ParityBit(s);
            } else if constexpr (std::is_same_v<T, OWeight>) {
                long s = 0;
                for (int x : v.a) s += x;
                s += static_cast<long>((1 - v.eps) / 2) * v.n;
                return ParityBit(s);
            } else {
                ParityBit acc;
                for (const KTypeParam& f : v) acc = acc + parity(f);
                return acc;
            }
        },
        t.value);
}

UWeight o_to_u(const OWeight& t) {
    OWeight c = canonical_o(t);
    if (c.eps != t.eps) {
        throw MalformedWeight("o_to_u expects a canonical O-weight");
    }
    int x = 0;
    for (int v : c.a) {
        if (v > 0) ++x;
    }
    const int ones = (1 - c.eps) / 2 * (c.n - 2 * x);
    UWeight out;
    out.n = c.n;
    out.a.reserve(c.n);
    for (int i = 0; i < x; ++i) out.a.push_back(c.a[i]);
    for (int i = 0; i < ones; ++i) out.a.push_back(1);
    while (static_cast<int>(out.a.size()) < c.n) out.a.push_back(0);
    return out;
}

std::optional<OWeight> u_to_o(const UWeight& t) {
    validate(t);
    const int n = t.n;
    int r = 0, s = 0;
    for (int v : t.a) {
        if (v < 0) return std::nullopt;
        if (v >= 2) ++r;
        if (v == 1) ++s;
    }
    if (2 * r + s > n) return std::nullopt;
    const int l = n / 2;
    OWeight out;
    out.n = n;
    if (r + s <= l) {
        out.eps = +1;
        for (int i = 0; i < r + s; ++i) out.a.push_back(t.a[i]);
    } else {
        // Second branch of the parametrization: the 1-run absorbs n-2x ones.
        out.eps = -1;
        const int extra_ones = n - 2 * r - s; // #{a_i = 1} in the O-weight
        for (int i = 0; i < r; ++i) out.a.push_back(t.a[i]);
        for (int i = 0; i < extra_ones; ++i) out.a.push_back(1);
    }
    while (static_cast<int>(out.a.size()) < l) out.a.push_back(0);
    return canonical_o(out);
}

mpz_class dim(const KTypeParam& t) {
    return std::visit(
        [](const auto& v) -> mpz_class {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, UWeight>) {
                validate(v);
                return dim_type_a(v.a);
            } else if constexpr (std::is_same_v<T, SpWeight>) {
                validate(v);
                return dim_type_c(v.a);
            } else if constexpr (std::is_same_v<T, OWeight>) {
                return dim_o(canonical_o(v));
            } else {
                mpz_class d = 1;
                for (const KTypeParam& f : v) d *= dim(f);
                return d;
            }
        },
        t.value);
}

std::strong_ordering compare(const KTypeParam& lhs, const KTypeParam& rhs) {
    if (int c = tag_order(lhs) - tag_order(rhs); c != 0) {
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (lhs.is_product()) {
        const auto& a = std::get<KTypeList>(lhs.value);
        const auto& b = std::get<KTypeList>(rhs.value);
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
            if (auto c = compare(a[i], b[i]); c != std::strong_ordering::equal) return c;
        }
        return a.size() <=> b.size();
    }
    if (auto c = tag_rank(lhs) <=> tag_rank(rhs); c != std::strong_ordering::equal) return c;
    const std::vector<int>* wa = nullptr;
    const std::vector<int>* wb = nullptr;
    std::visit([&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (!std::is_same_v<T, KTypeList>) wa = &v.a;
    }, lhs.value);
    std::visit([&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (!std::is_same_v<T, KTypeList>) wb = &v.a;
    }, rhs.value);
    for (std::size_t i = 0; i < std::min(wa->size(), wb->size()); ++i) {
        if (auto c = (*wa)[i] <=> (*wb)[i]; c != std::strong_ordering::equal) return c;
    }
    if (auto c = wa->size() <=> wb->size(); c != std::strong_ordering::equal) return c;
    if (std::holds_alternative<OWeight>(lhs.value)) {
        // +1 sorts before -1.
        const int ea = std::get<OWeight>(lhs.value).eps;
        const int eb = std::get<OWeight>(rhs.value).eps;
        return eb <=> ea;
    }
    return std::strong_ordering::equal;
}

namespace {

void append_list(std::ostringstream& os, const std::vector<int>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
}

} // namespace

std::string to_string(const UWeight& w) {
    std::ostringstream os;
    os << 'U' << w.n << '[';
    append_list(os, w.a);
    os << ']';
    return os.str();
}

std::string to_string(const SpWeight& w) {
    std::ostringstream os;
    os << "Sp" << w.n << '[';
    append_list(os, w.a);
    os << ']';
    return os.str();
}

std::string to_string(const OWeight& w) {
    std::ostringstream os;
    os << 'O' << w.n << '[';
    append_list(os, w.a);
    os << ';' << (w.eps > 0 ? '+' : '-') << ']';
    return os.str();
}

std::string to_string(const KTypeParam& t) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, KTypeList>) {
                std::string out;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += '*';
                    out += to_string(v[i]);
                }
                return out;
            } else {
                return to_string(v);
            }
        },
        t.value);
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    char take() { return s[pos++]; }
    void expect(char c) {
        if (eof() || s[pos] != c) {
            throw ParseError("expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos) + " in \"" + s + "\"");
        }
        ++pos;
    }
};

int parse_int(Cursor& c) {
    std::size_t start = c.pos;
    if (c.peek() == '-' || c.peek() == '+') ++c.pos;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start || (c.pos == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start])))) {
        throw ParseError("expected integer at position " + std::to_string(start) +
                         " in \"" + c.s + "\"");
    }
    return std::stoi(c.s.substr(start, c.pos - start));
}

std::vector<int> parse_int_list(Cursor& c, char stop1, char stop2) {
    std::vector<int> out;
    if (c.peek() == stop1 || c.peek() == stop2) return out;
    out.push_back(parse_int(c));
    while (c.peek() == ',') {
        c.take();
        out.push_back(parse_int(c));
    }
    return out;
}

KTypeParam parse_factor(Cursor& c) {
    int kind; // 0 = U, 1 = Sp, 2 = O
    if (c.peek() == 'U') {
        c.take();
        kind = 0;
    } else if (c.peek() == 'S') {
        c.take();
        c.expect('p');
        kind = 1;
    } else if (c.peek() == 'O') {
        c.take();
        kind = 2;
    } else {
        throw ParseError("expected group tag U/Sp/O in \"" + c.s + "\"");
    }
    const int n = parse_int(c);
    c.expect('[');
    std::vector<int> a = parse_int_list(c, ';', ']');
    if (kind == 2) {
        c.expect(';');
        int eps;
        if (c.peek() == '+') {
            eps = +1;
        } else if (c.peek() == '-') {
            eps = -1;
        } else {
            throw ParseError("expected sign '+' or '-' in \"" + c.s + "\"");
        }
        c.take();
        c.expect(']');
        return KTypeParam(OWeight{n, std::move(a), eps});
    }
    c.expect(']');
    if (kind == 0) return KTypeParam(UWeight{n, std::move(a)});
    return KTypeParam(SpWeight{n, std::move(a)});
}

} // namespace

KTypeParam parse_ktype(const std::string& text) {
    Cursor c{text};
    KTypeList factors;
    factors.push_back(parse_factor(c));
    while (c.peek() == '*') {
        c.take();
        factors.push_back(parse_factor(c));
    }
    if (!c.eof()) {
        throw ParseError("trailing characters in K-type \"" + text + "\"");
    }
    if (factors.size() == 1) return canonicalize(factors.front());
    return canonicalize(KTypeParam(std::move(factors)));
}

namespace {

nlohmann::ordered_json ktype_json(const KTypeParam& t) {
    using nlohmann::ordered_json;
    return std::visit(
        [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            ordered_json j;
            if constexpr (std::is_same_v<T, UWeight>) {
                j["group"] = "U";
                j["n"] = v.n;
                j["a"] = v.a;
            } else if constexpr (std::is_same_v<T, SpWeight>) {
                j["group"] = "Sp";
                j["n"] = v.n;
                j["a"] = v.a;
            } else if constexpr (std::is_same_v<T, OWeight>) {
                j["group"] = "O";
                j["n"] = v.n;
                j["a"] = v.a;
                j["eps"] = v.eps;
            } else {
                j["group"] = "Product";
                j["factors"] = ordered_json::array();
                for (const KTypeParam& f : v) j["factors"].push_back(ktype_json(f));
            }
            return j;
        },
        t.value);
}

KTypeParam ktype_unjson(const nlohmann::json& j) {
    const std::string group = j.at("group").get<std::string>();
    if (group == "Product") {
        KTypeList fs;
        for (const auto& f : j.at("factors")) fs.push_back(ktype_unjson(f));
        return KTypeParam(std::move(fs));
    }
    const int n = j.at("n").get<int>();
    std::vector<int> a = j.at("a").get<std::vector<int>>();
    if (group == "U") return KTypeParam(UWeight{n, std::move(a)});
    if (group == "Sp") return KTypeParam(SpWeight{n, std::move(a)});
    if (group == "O") return KTypeParam(OWeight{n, std::move(a), j.at("eps").get<int>()});
    throw ParseError("unknown group tag \"" + group + "\" in K-type JSON");
}

} // namespace

std::string ktype_to_json(const KTypeParam& t) { return ktype_json(t).dump(); }

KTypeParam ktype_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad K-type JSON: ") + e.what());
    }
    return canonicalize(ktype_unjson(j));
}

} // namespace ktheta
