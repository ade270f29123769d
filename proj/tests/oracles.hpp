#pragma once

// Independent reference computations. Nothing here calls the library's
// series or decomposition code; they share only plain integer types.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int phi(Int n) {
    Int k = 0;
    for (Int i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1) ++k;
    return k;
}

inline std::vector<Int> divisors(Int n) {
    std::vector<Int> out;
    for (Int k = 1; k <= n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

// Number of exponent vectors e >= 0 with sum e_i w_i = v, for v = 0..top.
inline std::vector<Int> monomial_counts(const std::vector<Int>& w, Int top) {
    std::vector<Int> cnt(static_cast<std::size_t>(top) + 1, 0);
    cnt[0] = 1;
    for (Int a : w)
        for (Int v = a; v <= top; ++v) cnt[static_cast<std::size_t>(v)] += cnt[static_cast<std::size_t>(v - a)];
    return cnt;
}

/// dim R^k by inclusion-exclusion over the regular sequence of partials:
/// sum over subsets S of (-1)^|S| * #{monomials of degree k - sum_{i in S}(d - a_i)}.
inline Int jacobian_dim(Int d, const std::vector<Int>& w, Int k) {
    if (k < 0) return 0;
    auto cnt = monomial_counts(w, k);
    const std::size_t n = w.size();
    Int total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Int shift = 0;
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) { shift += d - w[i]; sign = -sign; }
        if (shift <= k) total += sign * cnt[static_cast<std::size_t>(k - shift)];
    }
    return total;
}

/// For a Fermat type: monomials with sum e_i a_i = k and e_i <= d/a_i - 2, by direct enumeration.
inline Int fermat_monomials(Int d, const std::vector<Int>& w, Int k) {
    Int count = 0;
    std::vector<Int> e(w.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
        if (i == w.size()) {
            if (left == 0) ++count;
            return;
        }
        for (Int x = 0; x <= d / w[i] - 2 && x * w[i] <= left; ++x) self(self, i + 1, left - x * w[i]);
    };
    rec(rec, 0, k);
    return count;
}

/// Fermat symmetric type s^m + x0^{2c} + x1^{2c/a} + x2^{2c/b} - x3^2:
/// h21 of the rho^e eigenspace from the monomial basis s^j x0^i x1^k x2^l of degree 2c, with e = j+1.
inline std::vector<Int> fermat_eigen_h21(Int A, Int a, Int b, Int c) {
    const Int two_c = 2 * c, m = two_c / A;
    std::vector<Int> out(static_cast<std::size_t>(m), 0);
    for (Int j = 0; j <= m - 2; ++j)
        for (Int k = 0; k <= two_c / a - 2; ++k)
            for (Int l = 0; l <= two_c / b - 2; ++l) {
                Int i = two_c - A * j - a * k - b * l;
                if (i >= 0 && i <= two_c - 2) ++out[static_cast<std::size_t>((j + 1) % m)];
            }
    return out;
}

// sum of 1/x_i == 1 by exact integer cross-multiplication (128-bit).
inline bool unit_fraction_sum_is_one(const std::vector<Int>& xs) {
    __int128 num = 0, den = 1;
    for (Int x : xs) { // num/den + 1/x, unreduced; five small denominators fit easily
        num = num * x + den;
        den = den * x;
    }
    return num == den;
}

} // namespace oracle
