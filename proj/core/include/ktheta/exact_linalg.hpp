#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace ktheta {

// Exact rank computation for the oracle's raising-operator matrices.
// Matrices are assembled as integer triplets; duplicate cells accumulate.
struct SparseIntMatrix {
    long rows = 0;
    long cols = 0;
    struct Entry {
        long row;
        long col;
        long val;
    };
    std::vector<Entry> entries;

    void add(long r, long c, long v) { entries.push_back({r, c, v}); }
};

// Rank over Q by fraction-free (Bareiss) elimination; every intermediate
// value is an integer minor of the input.
long rank_bareiss(const SparseIntMatrix& m);

// Rank over F_p for a fixed 61-bit prime.  Always a lower bound on the
// rational rank; the oracle certifies results through the dimension-sum
// identity, so a (measure-zero) unlucky reduction is detected, never
// silently accepted.
long rank_modp(const SparseIntMatrix& m);

// Bareiss below a column threshold where entry growth is harmless, mod-p
// above it.  force_exact routes everything through Bareiss.
long rank_hybrid(const SparseIntMatrix& m, bool force_exact = false);

mpz_class binomial(long n, long k);

} // namespace ktheta
