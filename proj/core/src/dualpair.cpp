#include "ktheta/dualpair.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace ktheta {

namespace {

bool two_param(Family f) {
    return f == Family::O_pq || f == Family::Sp_pq || f == Family::U_pq;
}

void validate_group(const GroupDesc& g) {
    if (g.p < 0 || g.q < 0) {
        throw MalformedWeight("group rank parameters must be nonnegative");
    }
    if (two_param(g.family)) {
        if (g.p + g.q <= 0) throw MalformedWeight("group must have positive total rank");
    } else {
        if (g.p <= 0) throw MalformedWeight("group must have positive rank");
        if (g.q != 0) throw MalformedWeight("single-parameter family carries no second rank");
    }
}

// Unordered classification rows.  Returns the ambient 2N, or -1 if the
// combination is not a row.
long ambient_for(const GroupDesc& a, const GroupDesc& b) {
    const Family fa = a.family, fb = b.family;
    auto match = [&](Family x, Family y) {
        return (fa == x && fb == y) || (fa == y && fb == x);
    };
    if (match(Family::O_pq, Family::Sp_R)) {
        const GroupDesc& o = fa == Family::O_pq ? a : b;
        const GroupDesc& s = fa == Family::Sp_R ? a : b;
        return 2L * s.p * (o.p + o.q);
    }
    if (match(Family::O_C, Family::Sp_C)) {
        const GroupDesc& o = fa == Family::O_C ? a : b;
        const GroupDesc& s = fa == Family::Sp_C ? a : b;
        return 4L * o.p * s.p;
    }
    if (match(Family::Sp_pq, Family::Ostar)) {
        const GroupDesc& sp = fa == Family::Sp_pq ? a : b;
        const GroupDesc& os = fa == Family::Ostar ? a : b;
        return 4L * os.p * (sp.p + sp.q);
    }
    if (fa == Family::U_pq && fb == Family::U_pq) {
        return 2L * (a.p + a.q) * (b.p + b.q);
    }
    if (fa == Family::GL_R && fb == Family::GL_R) return 2L * a.p * b.p;
    if (fa == Family::GL_C && fb == Family::GL_C) return 4L * a.p * b.p;
    if (fa == Family::GL_H && fb == Family::GL_H) return 8L * a.p * b.p;
    return -1;
}

} // namespace

bool operator==(const GroupDesc& a, const GroupDesc& b) {
    return a.family == b.family && a.p == b.p && a.q == b.q;
}

bool operator==(const CompactFactor& a, const CompactFactor& b) {
    return a.tag == b.tag && a.rank == b.rank;
}

DualPairConfig make_pair(const GroupDesc& g1, const GroupDesc& g2) {
    validate_group(g1);
    validate_group(g2);
    const long dim = ambient_for(g1, g2);
    if (dim < 0) {
        throw ParseError("(" + to_string(g1) + "," + to_string(g2) +
                         ") is not a classified irreducible dual pair");
    }
    return DualPairConfig{g1, g2, dim};
}

MaxCompactDesc maximal_compact(const GroupDesc& g) {
    validate_group(g);
    switch (g.family) {
        case Family::GL_R: return {{GroupTag::O, g.p}};
        case Family::GL_C: return {{GroupTag::U, g.p}};
        case Family::GL_H: return {{GroupTag::Sp, g.p}};
        case Family::O_C: return {{GroupTag::O, g.p}};
        case Family::Sp_C: return {{GroupTag::Sp, g.p}};
        case Family::O_pq: return {{GroupTag::O, g.p}, {GroupTag::O, g.q}};
        case Family::Sp_R: return {{GroupTag::U, g.p}};
        case Family::Sp_pq: return {{GroupTag::Sp, g.p}, {GroupTag::Sp, g.q}};
        case Family::Ostar: return {{GroupTag::U, g.p}};
        case Family::U_pq: return {{GroupTag::U, g.p}, {GroupTag::U, g.q}};
    }
    throw Error("unreachable family tag");
}

bool is_type2(const DualPairConfig& cfg) {
    const Family f = cfg.g1.family;
    return f == Family::GL_R || f == Family::GL_C || f == Family::GL_H;
}

bool is_stable_range_smaller(const DualPairConfig& cfg, int smaller, bool strict_type1) {
    const GroupDesc& s = cfg.member(smaller);
    const GroupDesc& o = cfg.other(smaller);
    if (is_type2(cfg)) {
        if (strict_type1) {
            throw NotTypeI("stable range with strict type-I semantics requested on (" +
                           to_string(cfg.g1) + "," + to_string(cfg.g2) + ")");
        }
        return o.p >= s.p; // non-vanishing condition n >= m for GL pairs
    }
    switch (s.family) {
        case Family::O_C: return o.p >= s.p;           // n >= p
        case Family::Sp_C: return o.p >= 4 * s.p;      // p >= 4n
        case Family::O_pq: return o.p >= s.p + s.q;    // n >= p+q
        case Family::Sp_R: return o.p >= 2 * s.p && o.q >= 2 * s.p; // p,q >= 2n
        case Family::Sp_pq: return o.p >= 2 * (s.p + s.q);          // n >= 2(p+q)
        case Family::Ostar: return o.p >= s.p && o.q >= s.p;        // p,q >= n
        case Family::U_pq: return o.p >= s.p + s.q && o.q >= s.p + s.q; // r,s >= p+q
        default: break;
    }
    throw Error("unreachable stable-range row");
}

bool cover_splits(const DualPairConfig& cfg, int member) {
    const GroupDesc& m = cfg.member(member);
    const GroupDesc& o = cfg.other(member);
    switch (m.family) {
        case Family::O_C:
        case Family::Sp_C:
        case Family::Sp_pq:
        case Family::Ostar:
        case Family::GL_C:
        case Family::GL_H:
            return true;
        case Family::O_pq: return o.p % 2 == 0;            // n even
        case Family::Sp_R: return (o.p + o.q) % 2 == 0;    // p+q even
        case Family::U_pq: return (o.p + o.q) % 2 == 0;    // other signature even
        case Family::GL_R: return o.p % 2 == 0;            // n even
    }
    throw Error("unreachable splitting row");
}

long u_factor_shift(const DualPairConfig& cfg, int member, int factor) {
    const GroupDesc& m = cfg.member(member);
    const GroupDesc& o = cfg.other(member);
    switch (m.family) {
        case Family::Sp_R: {
            if ((o.p - o.q) % 2 != 0) {
                throw SplitRequired("label shift (p-q)/2 is half-integral: p+q must be even");
            }
            return (o.p - o.q) / 2;
        }
        case Family::Ostar:
            return o.p - o.q;
        case Family::U_pq: {
            if ((o.p - o.q) % 2 != 0) {
                throw SplitRequired("label shift (r-s)/2 is half-integral: r+s must be even");
            }
            return factor == 0 ? (o.p - o.q) / 2 : -(o.p - o.q) / 2;
        }
        default:
            return 0;
    }
}

bool shaped_for(const KTypeParam& t, const MaxCompactDesc& k) {
    std::vector<const KTypeParam*> factors;
    if (t.is_product()) {
        for (const KTypeParam& f : std::get<KTypeList>(t.value)) factors.push_back(&f);
    } else {
        factors.push_back(&t);
    }
    if (factors.size() != k.size()) return false;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const KTypeParam& f = *factors[i];
        switch (k[i].tag) {
            case GroupTag::U:
                if (!std::holds_alternative<UWeight>(f.value) ||
                    std::get<UWeight>(f.value).n != k[i].rank)
                    return false;
                break;
            case GroupTag::Sp:
                if (!std::holds_alternative<SpWeight>(f.value) ||
                    std::get<SpWeight>(f.value).n != k[i].rank)
                    return false;
                break;
            case GroupTag::O:
                if (!std::holds_alternative<OWeight>(f.value) ||
                    std::get<OWeight>(f.value).n != k[i].rank)
                    return false;
                break;
        }
    }
    return true;
}

namespace {

long o_factor_degree(const OWeight& w) {
    long s = 0;
    int nonzero = 0;
    for (int v : w.a) {
        s += v;
        if (v > 0) ++nonzero;
    }
    return s + static_cast<long>((1 - w.eps) / 2) * (w.n - 2 * nonzero);
}

long factor_degree(const KTypeParam& f, long shift) {
    if (const auto* u = std::get_if<UWeight>(&f.value)) {
        long s = 0;
        for (int v : u->a) s += std::labs(v - shift);
        return s;
    }
    if (const auto* sp = std::get_if<SpWeight>(&f.value)) {
        long s = 0;
        for (int v : sp->a) s += v;
        return s;
    }
    return o_factor_degree(std::get<OWeight>(f.value));
}

} // namespace

long degree_formula(const DualPairConfig& cfg, int member, const KTypeParam& t) {
    if (!cover_splits(cfg, member)) {
        throw SplitRequired("degree formula requires the cover to split over member " +
                            to_string(cfg.member(member)));
    }
    const KTypeParam ct = canonicalize(t);
    const MaxCompactDesc k = maximal_compact(cfg.member(member));
    if (!shaped_for(ct, k)) {
        throw ShapeMismatch("K-type " + to_string(ct) + " is not shaped for " + to_string(k));
    }
    std::vector<const KTypeParam*> factors;
    if (ct.is_product()) {
        for (const KTypeParam& f : std::get<KTypeList>(ct.value)) factors.push_back(&f);
    } else {
        factors.push_back(&ct);
    }
    long total = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        total += factor_degree(*factors[i], u_factor_shift(cfg, member, static_cast<int>(i)));
    }
    return total;
}

namespace {

int round_up_even(int v) { return v % 2 == 0 ? v : v + 1; }

} // namespace

DualPairConfig select_companion(const GroupDesc& g) {
    validate_group(g);
    GroupDesc c;
    switch (g.family) {
        case Family::O_C: c = {Family::Sp_C, g.p, 0}; break;           // n >= p
        case Family::Sp_C: c = {Family::O_C, 4 * g.p, 0}; break;       // p >= 4n
        case Family::O_pq: c = {Family::Sp_R, round_up_even(g.p + g.q), 0}; break;
        case Family::Sp_R: c = {Family::O_pq, 2 * g.p, 2 * g.p}; break; // p = q = 2n
        case Family::Sp_pq: c = {Family::Ostar, 2 * (g.p + g.q), 0}; break;
        case Family::Ostar: c = {Family::Sp_pq, g.p, g.p}; break;      // p = q = n
        case Family::U_pq: c = {Family::U_pq, g.p + g.q, g.p + g.q}; break;
        case Family::GL_R: c = {Family::GL_R, round_up_even(g.p), 0}; break;
        case Family::GL_C: c = {Family::GL_C, g.p, 0}; break;
        case Family::GL_H: c = {Family::GL_H, g.p, 0}; break;
    }
    DualPairConfig cfg = make_pair(g, c);
    if (!is_stable_range_smaller(cfg, 0) || !cover_splits(cfg, 0)) {
        throw Error("companion postcondition failed for " + to_string(g));
    }
    return cfg;
}

bool condition3_predicate(const DualPairConfig& cfg, int member) {
    const GroupDesc& m = cfg.member(member);
    const GroupDesc& o = cfg.other(member);
    switch (m.family) {
        case Family::Sp_R: return (o.p - o.q) % 4 == 0;                  // 4 | p-q
        case Family::Ostar: return (o.p - o.q) % 2 == 0;                 // 2 | p-q
        case Family::U_pq: return (o.p - o.q) % 4 == 0;                  // 4 | r-s
        default: return true;
    }
}

std::string to_string(const GroupDesc& g) {
    std::ostringstream os;
    switch (g.family) {
        case Family::GL_R: os << "GL" << g.p << 'R'; break;
        case Family::GL_C: os << "GL" << g.p << 'C'; break;
        case Family::GL_H: os << "GL" << g.p << 'H'; break;
        case Family::O_C: os << 'O' << g.p << 'C'; break;
        case Family::Sp_C: os << "Sp" << 2 * g.p << 'C'; break;
        case Family::O_pq: os << "O(" << g.p << ',' << g.q << ')'; break;
        case Family::Sp_R: os << "Sp" << 2 * g.p << 'R'; break;
        case Family::Sp_pq: os << "Sp(" << g.p << ',' << g.q << ')'; break;
        case Family::Ostar: os << "Ostar" << 2 * g.p; break;
        case Family::U_pq: os << "U(" << g.p << ',' << g.q << ')'; break;
    }
    return os.str();
}

std::string to_string(const DualPairConfig& cfg) {
    return "(" + to_string(cfg.g1) + "," + to_string(cfg.g2) + ")";
}

std::string to_string(const MaxCompactDesc& k) {
    std::string out;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += '*';
        switch (k[i].tag) {
            case GroupTag::U: out += 'U'; break;
            case GroupTag::Sp: out += "Sp"; break;
            case GroupTag::O: out += 'O'; break;
        }
        out += std::to_string(k[i].rank);
    }
    return out;
}

namespace {

int read_uint(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected rank digits in group \"" + s + "\"");
    return std::stoi(s.substr(start, pos - start));
}

std::pair<int, int> read_pq(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '(') throw ParseError("expected '(' in group \"" + s + "\"");
    ++pos;
    int p = read_uint(s, pos);
    if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ',' in group \"" + s + "\"");
    ++pos;
    int q = read_uint(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')' in group \"" + s + "\"");
    ++pos;
    return {p, q};
}

int half_of_even(int v, const std::string& text) {
    if (v % 2 != 0) {
        throw ParseError("rank of " + text + " must be even (the group is indexed by 2n)");
    }
    return v / 2;
}

GroupDesc parse_group_at(const std::string& s, std::size_t& pos) {
    auto starts = [&](const char* prefix) {
        return s.compare(pos, std::string(prefix).size(), prefix) == 0;
    };
    if (starts("GL")) {
        pos += 2;
        int m = read_uint(s, pos);
        if (pos >= s.size()) throw ParseError("missing field tag in group \"" + s + "\"");
        char f = s[pos++];
        if (f == 'R') return {Family::GL_R, m, 0};
        if (f == 'C') return {Family::GL_C, m, 0};
        if (f == 'H') return {Family::GL_H, m, 0};
        throw ParseError("unknown field tag in group \"" + s + "\"");
    }
    if (starts("Ostar")) {
        pos += 5;
        return {Family::Ostar, half_of_even(read_uint(s, pos), s), 0};
    }
    if (starts("Sp(")) {
        pos += 2;
        auto [p, q] = read_pq(s, pos);
        return {Family::Sp_pq, p, q};
    }
    if (starts("Sp")) {
        pos += 2;
        int two_n = read_uint(s, pos);
        if (pos >= s.size()) throw ParseError("missing field tag in group \"" + s + "\"");
        char f = s[pos++];
        if (f == 'R') return {Family::Sp_R, half_of_even(two_n, s), 0};
        if (f == 'C') return {Family::Sp_C, half_of_even(two_n, s), 0};
        throw ParseError("unknown field tag in group \"" + s + "\"");
    }
    if (starts("O(")) {
        pos += 1;
        auto [p, q] = read_pq(s, pos);
        return {Family::O_pq, p, q};
    }
    if (starts("O")) {
        pos += 1;
        int p = read_uint(s, pos);
        if (pos >= s.size() || s[pos] != 'C') throw ParseError("unknown group syntax \"" + s + "\"");
        ++pos;
        return {Family::O_C, p, 0};
    }
    if (starts("U(")) {
        pos += 1;
        auto [p, q] = read_pq(s, pos);
        return {Family::U_pq, p, q};
    }
    throw ParseError("unknown group syntax \"" + s + "\"");
}

} // namespace

GroupDesc parse_group(const std::string& text) {
    std::size_t pos = 0;
    GroupDesc g = parse_group_at(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in group \"" + text + "\"");
    validate_group(g);
    return g;
}

DualPairConfig parse_pair(const std::string& text) {
    if (text.empty() || text.front() != '(' || text.back() != ')') {
        throw ParseError("pair must be written as \"(G1,G2)\": " + text);
    }
    std::size_t pos = 1;
    GroupDesc g1 = parse_group_at(text, pos);
    if (pos >= text.size() || text[pos] != ',') {
        throw ParseError("expected ',' between pair members in \"" + text + "\"");
    }
    ++pos;
    GroupDesc g2 = parse_group_at(text, pos);
    if (pos != text.size() - 1) {
        throw ParseError("trailing characters in pair \"" + text + "\"");
    }
    return make_pair(g1, g2);
}

MaxCompactDesc parse_compact(const std::string& text) {
    MaxCompactDesc out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        GroupTag tag;
        if (text.compare(pos, 2, "Sp") == 0) {
            tag = GroupTag::Sp;
            pos += 2;
        } else if (text[pos] == 'U') {
            tag = GroupTag::U;
            pos += 1;
        } else if (text[pos] == 'O') {
            tag = GroupTag::O;
            pos += 1;
        } else {
            throw ParseError("unknown compact factor tag in \"" + text + "\"");
        }
        out.push_back({tag, read_uint(text, pos)});
        if (pos < text.size()) {
            if (text[pos] != '*') {
                throw ParseError("expected '*' between compact factors in \"" + text + "\"");
            }
            ++pos;
        }
    }
    if (out.empty()) throw ParseError("empty compact group description");
    return out;
}

std::string group_to_json(const GroupDesc& g) {
    nlohmann::ordered_json j;
    switch (g.family) {
        case Family::GL_R: j["family"] = "GL_R"; j["m"] = g.p; break;
        case Family::GL_C: j["family"] = "GL_C"; j["m"] = g.p; break;
        case Family::GL_H: j["family"] = "GL_H"; j["m"] = g.p; break;
        case Family::O_C: j["family"] = "O_C"; j["p"] = g.p; break;
        case Family::Sp_C: j["family"] = "Sp_C"; j["n"] = g.p; break;
        case Family::O_pq: j["family"] = "O_pq"; j["p"] = g.p; j["q"] = g.q; break;
        case Family::Sp_R: j["family"] = "Sp_R"; j["n"] = g.p; break;
        case Family::Sp_pq: j["family"] = "Sp_pq"; j["p"] = g.p; j["q"] = g.q; break;
        case Family::Ostar: j["family"] = "Ostar"; j["n"] = g.p; break;
        case Family::U_pq: j["family"] = "U_pq"; j["p"] = g.p; j["q"] = g.q; break;
    }
    return j.dump();
}

} // namespace ktheta
