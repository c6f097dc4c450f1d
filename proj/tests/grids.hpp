#pragma once

// Exhaustive weight grids shared by the unit and acceptance suites.

#include <vector>

#include "ktheta/dualpair.hpp"
#include "ktheta/ktype.hpp"

namespace ktheta::testgrid {

// All weakly decreasing integer lists of the given length with entries in
// [lo, hi].
inline void weakly_decreasing_rec(int len, int lo, int hi,
                                  std::vector<int>& cur,
                                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    const int top = cur.empty() ? hi : cur.back();
    for (int v = top; v >= lo; --v) {
        cur.push_back(v);
        weakly_decreasing_rec(len, lo, hi, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> weakly_decreasing_lists(int len, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    weakly_decreasing_rec(len, lo, hi, cur, out);
    return out;
}

// Canonical O(n)-types for n in [1, max_n] with entries bounded by max_entry.
inline std::vector<OWeight> o_grid(int max_n, int max_entry) {
    std::vector<OWeight> out;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& a : weakly_decreasing_lists(n / 2, 0, max_entry)) {
            for (int eps : {+1, -1}) {
                OWeight w{n, a, eps};
                if (n % 2 == 0 && !a.empty() && a.back() > 0 && eps == -1) {
                    continue; // non-canonical sign
                }
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

inline std::vector<UWeight> u_grid(int max_n, int max_abs) {
    std::vector<UWeight> out;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& a : weakly_decreasing_lists(n, -max_abs, max_abs)) {
            out.push_back(UWeight{n, a});
        }
    }
    return out;
}

inline std::vector<SpWeight> sp_grid(int max_n, int max_entry) {
    std::vector<SpWeight> out;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& a : weakly_decreasing_lists(n, 0, max_entry)) {
            out.push_back(SpWeight{n, a});
        }
    }
    return out;
}

// Canonical types of one compact factor with entries bounded by max_entry
// (absolute value for U-factors, which also range over negatives).
inline std::vector<KTypeParam> factor_grid(const CompactFactor& f, int max_entry) {
    std::vector<KTypeParam> out;
    const int rank = f.tag == GroupTag::O ? f.rank / 2 : f.rank;
    const int lo = f.tag == GroupTag::U ? -max_entry : 0;
    for (const auto& a : weakly_decreasing_lists(rank, lo, max_entry)) {
        switch (f.tag) {
            case GroupTag::U:
                out.push_back(KTypeParam(UWeight{f.rank, a}));
                break;
            case GroupTag::Sp:
                out.push_back(KTypeParam(SpWeight{f.rank, a}));
                break;
            case GroupTag::O:
                for (int eps : {+1, -1}) {
                    if (f.rank > 0 && f.rank % 2 == 0 && !a.empty() && a.back() > 0 &&
                        eps == -1) {
                        continue;
                    }
                    if (f.rank == 0 && eps == -1) continue;
                    out.push_back(KTypeParam(OWeight{f.rank, a, eps}));
                }
                break;
        }
    }
    return out;
}

// Canonical K-types shaped for a compact group, one entry per factor
// combination.
inline std::vector<KTypeParam> shaped_grid(const MaxCompactDesc& k, int max_entry) {
    std::vector<std::vector<KTypeParam>> per_factor;
    for (const auto& f : k) per_factor.push_back(factor_grid(f, max_entry));
    std::vector<KTypeParam> out;
    std::vector<std::size_t> idx(k.size(), 0);
    for (;;) {
        KTypeList fs;
        for (std::size_t i = 0; i < k.size(); ++i) fs.push_back(per_factor[i][idx[i]]);
        out.push_back(fs.size() == 1 ? fs.front() : KTypeParam(std::move(fs)));
        std::size_t pos = 0;
        while (pos < k.size()) {
            if (++idx[pos] < per_factor[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k.size()) break;
    }
    return out;
}

} // namespace ktheta::testgrid
