#pragma once

// Exact elementary number theory and dense truncated series arithmetic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "symcy/error.hpp"

namespace symcy {

using Int = std::int64_t;

namespace detail {

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticError("integer overflow in multiplication");
    return r;
}

} // namespace detail

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int gcd(const std::vector<Int>& values) {
    Int g = 0;
    for (Int v : values) g = std::gcd(g, v);
    return g;
}

// Ascending list of positive divisors.
inline std::vector<Int> divisors(Int n) {
    if (n < 1) throw ArgumentError("divisors: n must be positive");
    std::vector<Int> small, large;
    for (Int k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline Int euler_phi(Int n) {
    if (n < 1) throw ArgumentError("euler_phi: n must be positive");
    Int result = n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Dense integer polynomial in one variable, coefficient i at degree i.
///
/// Equality ignores trailing zeros. Coefficients are signed so that
/// numerators like (1 - t^k) can be represented; the Poincare series built
/// from them are nonnegative.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

    static IntPolynomial constant(Int c) { return IntPolynomial({c}); }

    // 1 - t^k (k >= 1)
    static IntPolynomial one_minus_power(Int k) {
        if (k < 1) throw ArgumentError("one_minus_power: exponent must be positive");
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, 0);
        c.front() = 1;
        c.back() = -1;
        return IntPolynomial(std::move(c));
    }

    // Degree of the highest nonzero coefficient; -1 for the zero polynomial.
    Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Int operator[](Int k) const {
        if (k < 0 || k > degree()) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool nonnegative() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c >= 0; });
    }

    IntPolynomial truncated(Int cap) const {
        if (cap < 0) return {};
        auto n = std::min<std::size_t>(coeffs_.size(), static_cast<std::size_t>(cap) + 1);
        return IntPolynomial(std::vector<Int>(coeffs_.begin(), coeffs_.begin() + n));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            Int c = coeffs_[i];
            if (c == 0) continue;
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            Int a = c < 0 ? -c : c;
            if (i == 0 || a != 1) out += std::to_string(a);
            if (i >= 1) out += "t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

// Product truncated at degree cap.
inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q, Int cap) {
    if (cap < 0) throw ArgumentError("poly_mul: cap must be nonnegative");
    if (p.is_zero() || q.is_zero()) return {};
    Int top = std::min(cap, p.degree() + q.degree());
    std::vector<Int> out(static_cast<std::size_t>(top) + 1, 0);
    const auto& pc = p.coeffs();
    const auto& qc = q.coeffs();
    for (Int i = 0; i <= std::min(p.degree(), top); ++i) {
        Int a = pc[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (Int j = 0; j <= std::min(q.degree(), top - i); ++j) {
            Int b = qc[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            auto& slot = out[static_cast<std::size_t>(i + j)];
            slot = detail::checked_add(slot, detail::checked_mul(a, b));
        }
    }
    return IntPolynomial(std::move(out));
}

/// Exact polynomial quotient p / q, truncated at degree cap.
///
/// Runs full long division from the low end; the divisor's constant term
/// must be +1 or -1. Throws ArithmeticError when the remainder is nonzero,
/// i.e. when p / q is not a polynomial.
inline IntPolynomial poly_div_exact(const IntPolynomial& p, const IntPolynomial& q, Int cap) {
    if (cap < 0) throw ArgumentError("poly_div_exact: cap must be nonnegative");
    if (q.is_zero()) throw ArithmeticError("poly_div_exact: division by zero");
    Int lead = q[0];
    if (lead != 1 && lead != -1)
        throw ArithmeticError("poly_div_exact: divisor constant term must be a unit");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree())
        throw ArithmeticError("poly_div_exact: non-exact division (dividend degree below divisor)");

    std::vector<Int> rem = p.coeffs();
    const auto& qc = q.coeffs();
    Int qdeg = p.degree() - q.degree();
    std::vector<Int> quot(static_cast<std::size_t>(qdeg) + 1, 0);
    for (Int i = 0; i <= qdeg; ++i) {
        Int c = rem[static_cast<std::size_t>(i)] * lead;
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (Int j = 0; j <= q.degree(); ++j) {
            Int b = qc[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            auto& slot = rem[static_cast<std::size_t>(i + j)];
            slot = detail::checked_sub(slot, detail::checked_mul(c, b));
        }
    }
    for (Int r : rem)
        if (r != 0) throw ArithmeticError("poly_div_exact: non-exact division (nonzero remainder)");
    return IntPolynomial(std::move(quot)).truncated(cap);
}

/// Series in t refined by a residue class mod m: coefficient of t^k u^r.
///
/// Stored densely as (max_degree + 1) x m.
class BigradedPolynomial {
public:
    BigradedPolynomial(Int modulus, Int max_degree) : modulus_(modulus) {
        if (modulus < 2) throw ArgumentError("BigradedPolynomial: modulus must be >= 2");
        if (max_degree < 0) throw ArgumentError("BigradedPolynomial: negative degree bound");
        rows_ = max_degree + 1;
        data_.assign(static_cast<std::size_t>(rows_ * modulus_), 0);
    }

    // p placed entirely at residue 0.
    static BigradedPolynomial lift(const IntPolynomial& p, Int modulus) {
        BigradedPolynomial out(modulus, std::max<Int>(p.degree(), 0));
        for (Int k = 0; k <= p.degree(); ++k) out.at(k, 0) = p[k];
        return out;
    }

    Int modulus() const { return modulus_; }
    Int max_degree() const { return rows_ - 1; }

    Int operator()(Int degree, Int residue) const {
        if (degree < 0 || degree >= rows_) return 0;
        return data_[index(degree, residue)];
    }

    Int& at(Int degree, Int residue) {
        if (degree < 0 || degree >= rows_)
            throw ArgumentError("BigradedPolynomial: degree out of range");
        return data_[index(degree, residue)];
    }

    // Sum over residues.
    IntPolynomial collapse() const {
        std::vector<Int> c(static_cast<std::size_t>(rows_), 0);
        for (Int k = 0; k < rows_; ++k)
            for (Int r = 0; r < modulus_; ++r)
                c[static_cast<std::size_t>(k)] =
                    detail::checked_add(c[static_cast<std::size_t>(k)], (*this)(k, r));
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const BigradedPolynomial& a, const BigradedPolynomial& b) {
        if (a.modulus_ != b.modulus_) return false;
        Int top = std::max(a.rows_, b.rows_);
        for (Int k = 0; k < top; ++k)
            for (Int r = 0; r < a.modulus_; ++r)
                if (a(k, r) != b(k, r)) return false;
        return true;
    }

private:
    std::size_t index(Int degree, Int residue) const {
        Int r = ((residue % modulus_) + modulus_) % modulus_;
        return static_cast<std::size_t>(degree * modulus_ + r);
    }

    Int modulus_;
    Int rows_ = 0;
    std::vector<Int> data_;
};

// Product with degree truncation at cap and residues added mod m.
inline BigradedPolynomial bigraded_mul(const BigradedPolynomial& p, const BigradedPolynomial& q, Int cap) {
    if (p.modulus() != q.modulus())
        throw ArithmeticError("bigraded_mul: modulus mismatch");
    if (cap < 0) throw ArgumentError("bigraded_mul: cap must be nonnegative");
    const Int m = p.modulus();
    const Int top = std::min(cap, p.max_degree() + q.max_degree());

    struct Term { Int deg, res, coeff; };
    auto terms = [&](const BigradedPolynomial& x) {
        std::vector<Term> out;
        for (Int k = 0; k <= std::min(x.max_degree(), top); ++k)
            for (Int r = 0; r < m; ++r)
                if (Int c = x(k, r); c != 0) out.push_back({k, r, c});
        return out;
    };
    const auto pt = terms(p);
    const auto qt = terms(q);

    BigradedPolynomial out(m, top);
    for (const auto& x : pt) {
        for (const auto& y : qt) {
            if (x.deg + y.deg > top) continue;
            Int& slot = out.at(x.deg + y.deg, (x.res + y.res) % m);
            slot = detail::checked_add(slot, detail::checked_mul(x.coeff, y.coeff));
        }
    }
    return out;
}

} // namespace symcy
