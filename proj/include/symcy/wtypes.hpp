#pragma once

// Weighted hypersurface types (d,[a_0,...,a_n]) and symmetric Calabi-Yau data.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symcy/arith.hpp"
#include "symcy/error.hpp"

namespace symcy {

/// Hypersurface symbol (d,[a_0,...,a_n]); weight order is kept as given.
class WeightedType {
public:
    WeightedType(Int degree, std::vector<Int> weights) : degree_(degree), weights_(std::move(weights)) {
        if (degree_ < 1)
            throw InvalidTypeError(InvalidTypeError::Kind::Shape, "degree must be positive");
        if (weights_.empty())
            throw InvalidTypeError(InvalidTypeError::Kind::Shape, "at least one weight required");
        for (Int w : weights_)
            if (w < 1) throw InvalidTypeError(InvalidTypeError::Kind::Shape, "weights must be positive");
    }

    Int degree() const { return degree_; }
    const std::vector<Int>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

    Int weight_sum() const {
        Int s = 0;
        for (Int w : weights_) s = detail::checked_add(s, w);
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(' << degree_ << ",[";
        for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
        os << "])";
        return os.str();
    }

    friend bool operator==(const WeightedType&, const WeightedType&) = default;
    friend auto operator<=>(const WeightedType&, const WeightedType&) = default;

private:
    Int degree_;
    std::vector<Int> weights_;
};

inline WeightedType sorted_view(const WeightedType& t) {
    auto w = t.weights();
    std::sort(w.begin(), w.end());
    return {t.degree(), std::move(w)};
}

// d - sum of weights; 0 is Calabi-Yau, negative is Q-Fano.
inline Int amplitude(const WeightedType& t) { return t.degree() - t.weight_sum(); }

// Every n-subset of the n+1 weights is coprime.
inline bool well_formed_weights(const WeightedType& t) {
    const auto& w = t.weights();
    if (w.size() == 1) return w.front() == 1;
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != skip) g = gcd(g, w[i]);
        if (g != 1) return false;
    }
    return true;
}

// gcd(a_i, a_j) divides d for all i < j.
inline bool pairwise_gcd_divides_degree(const WeightedType& t) {
    const auto& w = t.weights();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (t.degree() % gcd(w[i], w[j]) != 0) return false;
    return true;
}

// For all i < j, the gcd of the weights left after deleting a_i and a_j divides d.
inline bool complementary_gcd_divides_degree(const WeightedType& t) {
    const auto& w = t.weights();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            Int g = 0;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (k != i && k != j) g = gcd(g, w[k]);
            if (g != 0 && t.degree() % g != 0) return false;
        }
    }
    return true;
}

/// Well-formed type: well-formed weights, and the transversal gcd h_ij of
/// the weights remaining after deleting a_i, a_j divides d.
///
/// The complementary clause is what rejects the curve (14,[1,2,3]); every
/// pairwise gcd there is 1.
inline bool well_formed_type(const WeightedType& t) {
    return well_formed_weights(t) && complementary_gcd_divides_degree(t);
}

inline bool is_fermat_type(const WeightedType& t) {
    return std::all_of(t.weights().begin(), t.weights().end(),
                       [&](Int w) { return t.degree() % w == 0; });
}

enum class QuasiSmoothStatus { QuasiSmooth, Inconclusive, NotQuasiSmoothGeneral };

enum class QuasiSmoothCriterion {
    None,
    Fermat,       // every weight divides d
    SingleCover,  // one non-divisor a_j, d = k a_j + a_l
    MonomialCover // every variable covered by x_j^k or x_j^k x_l, plus the subset condition
};

inline const char* to_string(QuasiSmoothStatus s) {
    switch (s) {
    case QuasiSmoothStatus::QuasiSmooth: return "QuasiSmooth";
    case QuasiSmoothStatus::Inconclusive: return "Inconclusive";
    case QuasiSmoothStatus::NotQuasiSmoothGeneral: return "NotQuasiSmoothGeneral";
    }
    return "?";
}

inline const char* to_string(QuasiSmoothCriterion c) {
    switch (c) {
    case QuasiSmoothCriterion::None: return "none";
    case QuasiSmoothCriterion::Fermat: return "F";
    case QuasiSmoothCriterion::SingleCover: return "S";
    case QuasiSmoothCriterion::MonomialCover: return "M";
    }
    return "?";
}

struct QuasiSmoothVerdict {
    QuasiSmoothStatus status = QuasiSmoothStatus::Inconclusive;
    QuasiSmoothCriterion criterion = QuasiSmoothCriterion::None;
    std::string witness;

    bool quasi_smooth() const { return status == QuasiSmoothStatus::QuasiSmooth; }
};

namespace detail {

// reachable[v] iff v is a nonnegative integer combination of ws, for v in 0..n.
inline std::vector<bool> representable(Int n, const std::vector<Int>& ws) {
    std::vector<bool> ok(static_cast<std::size_t>(n) + 1, false);
    ok[0] = true;
    for (Int w : ws)
        for (Int v = w; v <= n; ++v)
            if (ok[static_cast<std::size_t>(v - w)]) ok[static_cast<std::size_t>(v)] = true;
    return ok;
}

// Smallest l != j (by index) with (d - a_l) a positive multiple of a_j.
inline std::optional<std::pair<std::size_t, Int>> single_cover(const WeightedType& t, std::size_t j) {
    const auto& w = t.weights();
    for (std::size_t l = 0; l < w.size(); ++l) {
        if (l == j) continue;
        Int rest = t.degree() - w[l];
        if (rest >= w[j] && rest % w[j] == 0) return std::pair{l, rest / w[j]};
    }
    return std::nullopt;
}

// Every nonempty subset I of variables either carries a degree-d monomial in
// x_I alone, or admits |I| distinct outside variables x_e with a degree-d
// monomial x_I^M x_e.
inline std::optional<std::string> subset_condition_failure(const WeightedType& t) {
    const auto& w = t.weights();
    const std::size_t n = w.size();
    const Int d = t.degree();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Int> ws;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) ws.push_back(w[i]);
        auto ok = representable(d, ws);
        if (ok[static_cast<std::size_t>(d)]) continue;
        std::size_t outside = 0;
        for (std::size_t e = 0; e < n; ++e)
            if (!(mask & (1u << e)) && d - w[e] >= 0 && ok[static_cast<std::size_t>(d - w[e])]) ++outside;
        if (outside < ws.size()) {
            std::ostringstream os;
            os << "variable subset {";
            bool first = true;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) { os << (first ? "" : ",") << "x" << i; first = false; }
            os << "} lacks " << ws.size() << " distinct outside covers";
            return os.str();
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Sufficient/necessary checks for quasi-smoothness of the general member.
///
/// Criteria are tried in order F, S, M. A verdict of NotQuasiSmoothGeneral
/// means some variable appears in no degree-d monomial at all.
inline QuasiSmoothVerdict quasi_smooth_general(const WeightedType& t) {
    const auto& w = t.weights();
    const Int d = t.degree();

    if (is_fermat_type(t))
        return {QuasiSmoothStatus::QuasiSmooth, QuasiSmoothCriterion::Fermat, "all weights divide the degree"};

    std::vector<std::size_t> nondividing;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (d % w[j] != 0) nondividing.push_back(j);

    if (nondividing.size() == 1) {
        std::size_t j = nondividing.front();
        if (auto cover = detail::single_cover(t, j)) {
            std::ostringstream os;
            os << d << " = " << cover->second << "*" << w[j] << " + " << w[cover->first]
               << " (x" << j << "^" << cover->second << " x" << cover->first << ")";
            return {QuasiSmoothStatus::QuasiSmooth, QuasiSmoothCriterion::SingleCover, os.str()};
        }
    }

    auto all = detail::representable(d, w);
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (d - w[j] < 0 || !all[static_cast<std::size_t>(d - w[j])]) {
            std::ostringstream os;
            os << "no monomial of degree " << d << " involves x" << j;
            return {QuasiSmoothStatus::NotQuasiSmoothGeneral, QuasiSmoothCriterion::None, os.str()};
        }
    }

    std::ostringstream covers;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (d % w[j] == 0) continue;
        auto cover = detail::single_cover(t, j);
        if (!cover) {
            std::ostringstream os;
            os << "x" << j << " has no cover of the form x" << j << "^k or x" << j << "^k x_l";
            return {QuasiSmoothStatus::Inconclusive, QuasiSmoothCriterion::None, os.str()};
        }
        covers << (covers.tellp() > 0 ? "; " : "") << d << " = " << cover->second << "*" << w[j] << " + "
               << w[cover->first] << " (x" << j << "^" << cover->second << " x" << cover->first << ")";
    }
    if (auto failure = detail::subset_condition_failure(t))
        return {QuasiSmoothStatus::Inconclusive, QuasiSmoothCriterion::None, *failure};
    return {QuasiSmoothStatus::QuasiSmooth, QuasiSmoothCriterion::MonomialCover, covers.str()};
}

/// Validated symmetric Calabi-Yau datum (2c,[A,1,a,b,c]) with m = 2c/A even.
class SymmetricCYType {
public:
    Int A() const { return A_; }
    Int a() const { return a_; }
    Int b() const { return b_; }
    Int c() const { return c_; }
    Int degree() const { return 2 * c_; }
    Int order() const { return 2 * c_ / A_; }

    WeightedType weighted_type() const { return {degree(), {A_, 1, a_, b_, c_}}; }
    // The plane curve H = 0 in P(1,a,b).
    WeightedType curve_type() const { return {degree(), {1, a_, b_}}; }

    std::string str() const { return weighted_type().str(); }

    friend bool operator==(const SymmetricCYType&, const SymmetricCYType&) = default;
    friend auto operator<=>(const SymmetricCYType&, const SymmetricCYType&) = default;

private:
    friend SymmetricCYType make_symmetric_cy(Int A, Int a, Int b, Int c);
    SymmetricCYType(Int A, Int a, Int b, Int c) : A_(A), a_(a), b_(b), c_(c) {}

    Int A_, a_, b_, c_;
};

inline SymmetricCYType make_symmetric_cy(Int A, Int a, Int b, Int c) {
    using K = InvalidTypeError::Kind;
    if (A < 1 || a < 1 || b < 1 || c < 1)
        throw InvalidTypeError(K::Shape, "parameters must be positive");
    if (!(a <= b && b < c)) {
        std::ostringstream os;
        os << "need 1 <= a <= b < c, got a=" << a << " b=" << b << " c=" << c;
        throw InvalidTypeError(K::Ordering, os.str());
    }
    if (A != c - (1 + a + b)) {
        std::ostringstream os;
        os << "A=" << A << " but c-(1+a+b)=" << c - (1 + a + b);
        throw InvalidTypeError(K::CySum, os.str());
    }
    if ((2 * c) % A != 0) {
        std::ostringstream os;
        os << "A=" << A << " does not divide 2c=" << 2 * c;
        throw InvalidTypeError(K::Divisibility, os.str());
    }
    if ((2 * c / A) % 2 != 0) {
        std::ostringstream os;
        os << "m=2c/A=" << 2 * c / A << " is odd (A does not divide c)";
        throw InvalidTypeError(K::Parity, os.str());
    }
    return {A, a, b, c};
}

/// Type of the quotient Y_d = X / <g^{m/d}>: (2c,[A*m/d,1,a,b,c]).
inline WeightedType quotient_type(const SymmetricCYType& t, Int d) {
    const Int m = t.order();
    if (d < 1 || m % d != 0 || d >= m) {
        std::ostringstream os;
        os << "quotient order d=" << d << " must be a proper divisor of m=" << m;
        throw ArgumentError(os.str());
    }
    return {t.degree(), {t.A() * (m / d), 1, t.a(), t.b(), t.c()}};
}

} // namespace symcy
