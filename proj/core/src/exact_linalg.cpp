#include "ktheta/exact_linalg.hpp"

#include <algorithm>

namespace ktheta {

namespace {

constexpr unsigned long long kPrime = 2305843009213693951ULL; // 2^61 - 1
constexpr long kBareissColLimit = 72;

inline unsigned long long mul_mod(unsigned long long a, unsigned long long b) {
    return static_cast<unsigned long long>(
        (static_cast<unsigned __int128>(a) * b) % kPrime);
}

unsigned long long pow_mod(unsigned long long base, unsigned long long exp) {
    unsigned long long acc = 1;
    while (exp) {
        if (exp & 1ULL) acc = mul_mod(acc, base);
        base = mul_mod(base, base);
        exp >>= 1;
    }
    return acc;
}

inline unsigned long long inv_mod(unsigned long long a) {
    return pow_mod(a, kPrime - 2);
}

inline unsigned long long to_field(long v) {
    long r = v % static_cast<long>(kPrime);
    if (r < 0) r += static_cast<long>(kPrime);
    return static_cast<unsigned long long>(r);
}

} // namespace

long rank_bareiss(const SparseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<mpz_class>> a(m.rows, std::vector<mpz_class>(m.cols, 0));
    for (const auto& e : m.entries) a[e.row][e.col] += e.val;

    long rank = 0;
    mpz_class prev = 1;
    for (long col = 0; col < m.cols && rank < m.rows; ++col) {
        long pivot = -1;
        for (long r = rank; r < m.rows; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // One-step Bareiss update: every entry below stays an integer minor
        // of the input, so the division is exact.
        for (long r = rank + 1; r < m.rows; ++r) {
            for (long c = col + 1; c < m.cols; ++c) {
                mpz_class t = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

long rank_modp(const SparseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<unsigned long long>> a(
        m.rows, std::vector<unsigned long long>(m.cols, 0));
    for (const auto& e : m.entries) {
        auto& cell = a[e.row][e.col];
        cell = (cell + to_field(e.val)) % kPrime;
    }

    long rank = 0;
    for (long col = 0; col < m.cols && rank < m.rows; ++col) {
        long pivot = -1;
        for (long r = rank; r < m.rows; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const unsigned long long inv = inv_mod(a[rank][col]);
        for (long r = rank + 1; r < m.rows; ++r) {
            if (a[r][col] == 0) continue;
            const unsigned long long f = mul_mod(a[r][col], inv);
            for (long c = col; c < m.cols; ++c) {
                if (a[rank][c] == 0) continue;
                unsigned long long sub = mul_mod(f, a[rank][c]);
                a[r][c] = (a[r][c] + kPrime - sub) % kPrime;
            }
        }
        ++rank;
    }
    return rank;
}

long rank_hybrid(const SparseIntMatrix& m, bool force_exact) {
    if (force_exact || m.cols <= kBareissColLimit) return rank_bareiss(m);
    return rank_modp(m);
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

} // namespace ktheta
