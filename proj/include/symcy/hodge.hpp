#pragma once

// Graded dimensions of Jacobian rings and the Hodge data read off from them.

#include <sstream>
#include <string>

#include "symcy/arith.hpp"
#include "symcy/error.hpp"
#include "symcy/wtypes.hpp"

namespace symcy {

struct HodgeVector {
    Int h30 = 0, h21 = 0, h12 = 0, h03 = 0;

    Int total() const { return h30 + h21 + h12 + h03; }
    bool is_zero() const { return total() == 0; }

    HodgeVector& operator+=(const HodgeVector& o) {
        h30 = detail::checked_add(h30, o.h30);
        h21 = detail::checked_add(h21, o.h21);
        h12 = detail::checked_add(h12, o.h12);
        h03 = detail::checked_add(h03, o.h03);
        return *this;
    }
    friend HodgeVector operator+(HodgeVector a, const HodgeVector& b) { return a += b; }
    friend bool operator==(const HodgeVector&, const HodgeVector&) = default;

    std::string str() const {
        std::ostringstream os;
        os << '(' << h30 << ',' << h21 << ',' << h12 << ',' << h03 << ')';
        return os.str();
    }
};

// Top nonzero degree of the Milnor algebra: sum of (d - 2 a_i).
inline Int socle_degree(const WeightedType& t) {
    Int s = 0;
    for (Int w : t.weights()) s = detail::checked_add(s, t.degree() - 2 * w);
    return s;
}

/// Poincare series prod_i (1 - t^{d-a_i}) / (1 - t^{a_i}), truncated at cap.
///
/// The full numerator is divided by the full denominator; individual
/// factors are not polynomials unless a_i | d - a_i.
inline IntPolynomial milnor_series(const WeightedType& t, Int cap) {
    if (cap < 0) throw ArgumentError("milnor_series: cap must be nonnegative");
    const Int d = t.degree();
    for (Int w : t.weights()) {
        if (w >= d) {
            std::ostringstream os;
            os << "weight " << w << " is not below the degree " << d << " in " << t.str();
            throw InvalidTypeError(InvalidTypeError::Kind::Series, os.str());
        }
    }
    IntPolynomial num = IntPolynomial::constant(1);
    IntPolynomial den = IntPolynomial::constant(1);
    Int num_deg = 0, den_deg = 0;
    for (Int w : t.weights()) {
        num_deg += d - w;
        den_deg += w;
        num = poly_mul(num, IntPolynomial::one_minus_power(d - w), num_deg);
        den = poly_mul(den, IntPolynomial::one_minus_power(w), den_deg);
    }
    try {
        return poly_div_exact(num, den, cap);
    } catch (const ArithmeticError& e) {
        throw InvalidTypeError(InvalidTypeError::Kind::Series,
                               t.str() + ": " + e.what());
    }
}

/// (h30, h21, h12, h03) = (dim R^0, dim R^d, dim R^2d, dim R^3d) for a
/// quasi-smooth Calabi-Yau threefold type.
inline HodgeVector hodge_numbers_cy3(const WeightedType& t) {
    if (t.size() != 5)
        throw InvalidTypeError(InvalidTypeError::Kind::Shape, "threefold type needs 5 weights: " + t.str());
    if (Int amp = amplitude(t); amp != 0) {
        std::ostringstream os;
        os << "weights of " << t.str() << " sum to " << t.weight_sum()
           << ", amplitude " << amp;
        throw InvalidTypeError(InvalidTypeError::Kind::CySum, os.str());
    }
    const Int d = t.degree();
    auto r = milnor_series(t, 3 * d);
    return {r[0], r[d], r[2 * d], r[3 * d]};
}

// dim R_H^alpha for a curve type (d,[w0,w1,w2]), alpha = d - sum(w).
inline Int genus(const WeightedType& t) {
    if (t.size() != 3)
        throw InvalidTypeError(InvalidTypeError::Kind::Shape, "curve type needs 3 weights: " + t.str());
    Int alpha = amplitude(t);
    if (alpha < 0) return 0;
    return milnor_series(t, alpha)[alpha];
}

// dim R_F^d, the tangent space to the Kuranishi family.
inline Int kuranishi_dim(const WeightedType& t) {
    return milnor_series(t, t.degree())[t.degree()];
}

} // namespace symcy
