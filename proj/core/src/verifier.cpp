#include "ktheta/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ktheta {

const std::vector<Family> kAllFamilies = {
    Family::GL_R, Family::GL_C, Family::GL_H, Family::O_C,   Family::Sp_C,
    Family::O_pq, Family::Sp_R, Family::Sp_pq, Family::Ostar, Family::U_pq,
};

std::string report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["cfg"] = r.scope;
    if (r.member >= 0) j["member"] = r.member;
    if (r.d_max >= 0) j["d_max"] = r.d_max;
    j["status"] = r.status;
    j["checked"] = r.checked;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    if (r.skip_reason) j["skip_reason"] = *r.skip_reason;
    return j.dump();
}

VerificationReport check_parity_uniform(const MaxCompactDesc& k,
                                        const std::vector<KTypeParam>& types) {
    VerificationReport rep;
    rep.suite = "uniform";
    rep.scope = to_string(k);
    std::vector<KTypeParam> canon;
    canon.reserve(types.size());
    for (const auto& t : types) {
        KTypeParam ct = canonicalize(t);
        if (!shaped_for(ct, k)) {
            throw ShapeMismatch("K-type " + to_string(ct) + " is not shaped for " +
                                to_string(k));
        }
        canon.push_back(std::move(ct));
    }
    std::sort(canon.begin(), canon.end());
    rep.checked = static_cast<long long>(canon.size());
    rep.status = "pass";
    if (canon.empty()) return rep;
    const ParityBit first = parity(canon.front());
    for (std::size_t i = 1; i < canon.size(); ++i) {
        if (!(parity(canon[i]) == first)) {
            rep.status = "fail";
            rep.counterexample =
                "(" + to_string(canon.front()) + "," + to_string(canon[i]) + ")";
            break;
        }
    }
    return rep;
}

namespace {

std::vector<SpectrumTable> all_spectra(const DualPairConfig& cfg, int member, int d_max,
                                       const OracleLimits& limits) {
    const FockRealization r = build_realization(cfg, member);
    std::vector<SpectrumTable> out;
    out.reserve(d_max + 1);
    for (int d = 0; d <= d_max; ++d) out.push_back(spectrum(r, d, limits));
    return out;
}

} // namespace

VerificationReport check_disjointness(const DualPairConfig& cfg, int member, int d_max,
                                      const OracleLimits& limits) {
    VerificationReport rep;
    rep.suite = "disjointness";
    rep.scope = to_string(cfg);
    rep.member = member;
    rep.d_max = d_max;
    rep.status = "pass";
    std::map<KTypeParam, std::pair<int, int>> first_seen; // parity -> first degree
    for (const auto& table : all_spectra(cfg, member, d_max, limits)) {
        for (const auto& [t, mult] : table.entries) {
            auto [it, inserted] = first_seen.emplace(t, std::make_pair(-1, -1));
            auto& slot = table.d % 2 == 0 ? it->second.first : it->second.second;
            if (slot < 0) slot = table.d;
        }
    }
    rep.checked = static_cast<long long>(first_seen.size());
    for (const auto& [t, degs] : first_seen) {
        if (degs.first >= 0 && degs.second >= 0) {
            rep.status = "fail";
            rep.counterexample = "(" + to_string(t) + ",d=" + std::to_string(degs.first) +
                                 ",d=" + std::to_string(degs.second) + ")";
            break;
        }
    }
    return rep;
}

VerificationReport check_degree_table(const DualPairConfig& cfg, int member, int d_max,
                                      const OracleLimits& limits) {
    VerificationReport rep;
    rep.suite = "degree_table";
    rep.scope = to_string(cfg);
    rep.member = member;
    rep.d_max = d_max;
    rep.status = "pass";
    if (!cover_splits(cfg, member)) {
        throw SplitRequired("degree table needs a split cover for " + to_string(cfg) +
                            " member " + std::to_string(member));
    }
    std::map<KTypeParam, int> min_deg;
    for (const auto& table : all_spectra(cfg, member, d_max, limits)) {
        for (const auto& [t, mult] : table.entries) min_deg.emplace(t, table.d);
    }
    rep.checked = static_cast<long long>(min_deg.size());
    for (const auto& [t, d] : min_deg) {
        const long expected = degree_formula(cfg, member, t);
        if (expected != d) {
            rep.status = "fail";
            rep.counterexample = "(" + to_string(t) + ",expected=" + std::to_string(expected) +
                                 ",actual=" + std::to_string(d) + ")";
            break;
        }
    }
    return rep;
}

VerificationReport check_parity_degree(const DualPairConfig& cfg, int member, int d_max,
                                       const OracleLimits& limits) {
    VerificationReport rep;
    rep.suite = "parity_degree";
    rep.scope = to_string(cfg);
    rep.member = member;
    rep.d_max = d_max;
    rep.status = "pass";
    if (!condition3_predicate(cfg, member)) {
        throw Condition3Violated("degree/parity alignment condition fails for " +
                                 to_string(cfg) + " member " + std::to_string(member));
    }
    for (const auto& table : all_spectra(cfg, member, d_max, limits)) {
        for (const auto& [t, mult] : table.entries) {
            ++rep.checked;
            if (!(parity(t) == ParityBit(table.d))) {
                rep.status = "fail";
                rep.counterexample = "(" + to_string(t) + ",d=" + std::to_string(table.d) +
                                     ",parity=" + std::to_string(parity(t).value()) + ")";
                return rep;
            }
        }
    }
    return rep;
}

VerificationReport check_companion_pipeline(Family family, int max_total_rank) {
    VerificationReport rep;
    rep.suite = "companion";
    rep.status = "pass";
    for (const GroupDesc& g : rank_grid(family, max_total_rank)) {
        if (rep.scope.empty()) {
            std::string name = to_string(g);
            rep.scope = "family:" + name.substr(0, name.find_first_of("0123456789("));
        }
        ++rep.checked;
        const DualPairConfig cfg = select_companion(g);
        const bool c1 = is_stable_range_smaller(cfg, 0);
        const bool c2 = cover_splits(cfg, 0);
        const bool c3 = condition3_predicate(cfg, 0);
        if (!c1 || !c2 || !c3) {
            rep.status = "fail";
            rep.counterexample = "(" + to_string(g) + "->" + to_string(cfg) + "," +
                                 (c1 ? "" : "cond1 ") + (c2 ? "" : "cond2 ") +
                                 (c3 ? "" : "cond3") + ")";
            break;
        }
    }
    return rep;
}

VerificationReport run_suite_case(const std::string& suite, const std::string& scope,
                                  int member, int d_max,
                                  const std::function<VerificationReport()>& body) {
    try {
        return body();
    } catch (const SplitRequired& e) {
        return VerificationReport{suite, scope, member, d_max, "skip", 0, std::nullopt,
                                  std::string(e.what())};
    } catch (const Condition3Violated& e) {
        return VerificationReport{suite, scope, member, d_max, "skip", 0, std::nullopt,
                                  std::string(e.what())};
    }
}

namespace {

std::pair<DualPairConfig, int> cfg0(const std::string& pair_text) {
    return {parse_pair(pair_text), 0};
}

} // namespace

std::vector<std::pair<DualPairConfig, int>> small_ranks_preset() {
    return {
        cfg0("(O2C,Sp2C)"),      cfg0("(O3C,Sp2C)"),      cfg0("(Sp2C,O2C)"),
        cfg0("(Sp4C,O2C)"),      cfg0("(O(2,2),Sp4R)"),   cfg0("(O(2,1),Sp4R)"),
        cfg0("(O(1,1),Sp4R)"),   cfg0("(O(1,0),Sp4R)"),   cfg0("(O(3,2),Sp4R)"),
        cfg0("(Sp2R,O(2,0))"),   cfg0("(Sp2R,O(2,2))"),   cfg0("(Sp2R,O(4,0))"),
        cfg0("(Sp2R,O(3,1))"),   cfg0("(Sp4R,O(4,2))"),   cfg0("(Sp(1,1),Ostar4)"),
        cfg0("(Sp(1,0),Ostar2)"), cfg0("(Ostar4,Sp(1,1))"), cfg0("(Ostar2,Sp(2,1))"),
        cfg0("(Ostar2,Sp(1,1))"), cfg0("(U(1,1),U(2,0))"), cfg0("(U(1,0),U(1,1))"),
        cfg0("(U(1,1),U(2,2))"), cfg0("(U(2,1),U(2,2))"), cfg0("(GL1R,GL2R)"),
        cfg0("(GL2R,GL2R)"),     cfg0("(GL3R,GL2R)"),     cfg0("(GL2R,GL4R)"),
        cfg0("(GL1C,GL1C)"),     cfg0("(GL2C,GL2C)"),     cfg0("(GL1H,GL1H)"),
        cfg0("(GL2H,GL1H)"),
    };
}

std::vector<std::pair<DualPairConfig, int>> conformance_extras() {
    // Even/odd orthogonal factors above rank 3: the D_2 fork, the fused
    // full-support types and the B_2 ladder.
    return {
        cfg0("(O4C,Sp2C)"),
        cfg0("(O5C,Sp2C)"),
        cfg0("(O(4,2),Sp4R)"),
    };
}

std::vector<GroupDesc> rank_grid(Family family, int max_total_rank) {
    std::vector<GroupDesc> out;
    const bool two = family == Family::O_pq || family == Family::Sp_pq ||
                     family == Family::U_pq;
    if (two) {
        for (int total = 1; total <= max_total_rank; ++total) {
            for (int p = 0; p <= total; ++p) out.push_back({family, p, total - p});
        }
    } else {
        for (int m = 1; m <= max_total_rank; ++m) out.push_back({family, m, 0});
    }
    return out;
}

} // namespace ktheta
