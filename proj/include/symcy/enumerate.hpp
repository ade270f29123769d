#pragma once

// Bounded searches: five-term Egyptian fractions, Fermat-type symmetric
// Calabi-Yau threefolds, and the two non-Fermat cover families.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "symcy/arith.hpp"
#include "symcy/equivariant.hpp"
#include "symcy/hodge.hpp"
#include "symcy/wtypes.hpp"

namespace symcy {

// Every derived denominator in the non-Fermat searches stays at or below this.
inline constexpr Int kSearchBound = 1806;

struct EgyptianSolution {
    std::array<Int, 5> denoms{}; // nondecreasing

    Int first() const { return denoms[0]; }
    friend bool operator==(const EgyptianSolution&, const EgyptianSolution&) = default;
    friend auto operator<=>(const EgyptianSolution&, const EgyptianSolution&) = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < denoms.size(); ++i) os << (i ? "," : "") << denoms[i];
        os << ')';
        return os.str();
    }
};

struct EgyptianResult {
    std::vector<EgyptianSolution> solutions; // lexicographic
    std::map<Int, Int> counts_by_first;
};

namespace detail {

using Rational = boost::rational<Int>;

inline void egyptian_dfs(std::array<Int, 5>& cur, std::size_t pos, Int prev, Rational remaining,
                         std::vector<EgyptianSolution>& out) {
    const Int k = static_cast<Int>(cur.size() - pos);
    if (k == 1) {
        if (remaining.numerator() == 1 && remaining.denominator() >= prev) {
            cur[pos] = remaining.denominator();
            out.push_back({cur});
        }
        return;
    }
    // 1/x < remaining, and k/x >= remaining.
    const Int lo = std::max(prev, remaining.denominator() / remaining.numerator() + 1);
    const Int hi = k * remaining.denominator() / remaining.numerator();
    for (Int x = lo; x <= hi; ++x) {
        cur[pos] = x;
        egyptian_dfs(cur, pos + 1, x, remaining - Rational(1, x), out);
    }
}

} // namespace detail

/// All solutions of 1 = 1/n + 1/p + 1/q + 1/r + 1/s with n <= p <= q <= r <= s.
inline EgyptianResult egyptian_five() {
    EgyptianResult res;
    std::array<Int, 5> cur{};
    detail::egyptian_dfs(cur, 0, 1, detail::Rational(1), res.solutions);
    std::sort(res.solutions.begin(), res.solutions.end());
    for (const auto& s : res.solutions) ++res.counts_by_first[s.first()];
    return res;
}

// Shared Hodge-theoretic columns of a classified symmetric type.
struct TypeInvariants {
    HodgeVector hodge;
    Int h12 = 0;
    Int genus = 0;
    Int order = 0;
    IsotypicalDecomposition decomposition;
    std::string rep;
    bool cross_check = false;
};

inline TypeInvariants compute_invariants(const SymmetricCYType& cy) {
    TypeInvariants inv;
    inv.hodge = hodge_numbers_cy3(cy.weighted_type());
    inv.h12 = inv.hodge.h12;
    inv.genus = genus(cy.curve_type());
    inv.order = cy.order();
    inv.decomposition = isotypical_decomposition(cy);
    inv.rep = rep_string(inv.decomposition);
    inv.cross_check = cross_check_h12(cy);
    return inv;
}

struct FermatRow {
    std::array<Int, 4> quad{}; // (x, y, t, 2c)
    SymmetricCYType cy;
    TypeInvariants inv;

    std::string quad_str() const {
        std::ostringstream os;
        os << '(' << quad[0] << ',' << quad[1] << ',' << quad[2] << ',' << quad[3] << ')';
        return os.str();
    }
};

// Ascending 2c, then (A, a, b, c).
inline bool canonical_less(const SymmetricCYType& x, const SymmetricCYType& y) {
    return std::tuple(x.degree(), x.A(), x.a(), x.b(), x.c()) <
           std::tuple(y.degree(), y.A(), y.a(), y.b(), y.c());
}

/// Fermat-type symmetric CY threefolds from solutions 1/2 + 1/x + 1/y + 1/t + 1/(2c) = 1.
///
/// 2c is the largest remaining denominator, t (the order m) ranges over the
/// other three and must be even; b = 2c/x, a = 2c/y, A = 2c/t.
inline std::vector<FermatRow> classify_fermat() {
    std::set<std::array<Int, 4>> quads;
    for (const auto& sol : egyptian_five().solutions) {
        if (sol.first() != 2) continue;
        const Int two_c = sol.denoms[4];
        const std::array<Int, 3> rest{sol.denoms[1], sol.denoms[2], sol.denoms[3]};
        for (std::size_t ti = 0; ti < 3; ++ti) {
            Int t = rest[ti];
            std::vector<Int> xy;
            for (std::size_t i = 0; i < 3; ++i)
                if (i != ti) xy.push_back(rest[i]);
            std::sort(xy.begin(), xy.end());
            quads.insert({xy[0], xy[1], t, two_c});
        }
    }

    std::vector<FermatRow> rows;
    std::set<SymmetricCYType> seen;
    for (const auto& q : quads) {
        const auto [x, y, t, two_c] = q;
        if (t % 2 != 0 || two_c % 2 != 0) continue;
        if (two_c % x != 0 || two_c % y != 0 || two_c % t != 0) continue;
        const Int c = two_c / 2, b = two_c / x, a = two_c / y, A = two_c / t;
        if (!(a <= b && b < c)) continue;
        if (A != c - (1 + a + b))
            throw ArithmeticError("Fermat classification: CY sum identity failed for quad");
        if (c % A != 0) continue;
        auto cy = make_symmetric_cy(A, a, b, c);
        auto wt = cy.weighted_type();
        if (!well_formed_type(wt) || !quasi_smooth_general(wt).quasi_smooth()) continue;
        seen.insert(cy);
        rows.push_back({q, cy, compute_invariants(cy)});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const FermatRow& l, const FermatRow& r) { return canonical_less(l.cy, r.cy); });
    return rows;
}

struct NonFermatRow {
    std::array<Int, 5> weights{}; // (A, 1, a, d, c) as found: d is the covered weight
    int family = 1;               // 1: r d = 2c - 1, 2: a = 2 and r d = 2c - 2
    Int r = 0, d = 0;
    SymmetricCYType cy;           // with the two middle weights sorted
    TypeInvariants inv;
    Int assignments = 1;          // tuples in the same family sharing this weight multiset

    std::string weights_str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
        os << ')';
        return os.str();
    }
};

namespace detail {

inline std::array<Int, 5> sorted_weights(std::array<Int, 5> w) {
    std::sort(w.begin(), w.end());
    return w;
}

inline void finish_family(std::vector<NonFermatRow>& rows) {
    std::map<std::array<Int, 5>, Int> per_multiset;
    for (const auto& row : rows) ++per_multiset[sorted_weights(row.weights)];
    for (auto& row : rows) row.assignments = per_multiset[sorted_weights(row.weights)];
    std::stable_sort(rows.begin(), rows.end(), [](const NonFermatRow& l, const NonFermatRow& r) {
        return std::tuple(l.weights[4], l.weights[0], l.weights[2], l.weights[3]) <
               std::tuple(r.weights[4], r.weights[0], r.weights[2], r.weights[3]);
    });
}

inline std::optional<NonFermatRow> nonfermat_candidate(int family, Int A, Int a, Int d, Int c) {
    const Int two_c = 2 * c;
    WeightedType wt{two_c, {A, 1, a, d, c}};
    if (!well_formed_type(wt) || !quasi_smooth_general(wt).quasi_smooth()) return std::nullopt;
    const Int r = (two_c - family) / d;
    auto cy = make_symmetric_cy(A, std::min(a, d), std::max(a, d), c);
    return NonFermatRow{{A, 1, a, d, c}, family, r, d, cy, compute_invariants(cy), 1};
}

} // namespace detail

/// Types (2c,[A,1,a,d,c]) with A | c, a | 2c and r d = 2c - 1.
inline std::vector<NonFermatRow> search_case1(Int bound = kSearchBound) {
    std::vector<NonFermatRow> rows;
    for (Int two_c = 2; two_c <= bound; two_c += 2) {
        const Int c = two_c / 2;
        for (Int A : divisors(c)) {
            for (Int a : divisors(two_c)) {
                const Int d = c - 1 - A - a;
                if (d < 2 || (two_c - 1) % d != 0) continue;
                if (auto row = detail::nonfermat_candidate(1, A, a, d, c)) rows.push_back(std::move(*row));
            }
        }
    }
    detail::finish_family(rows);
    return rows;
}

/// Types (2c,[A,1,2,d,c]) with A | c, d not dividing 2c and r d = 2c - 2.
inline std::vector<NonFermatRow> search_case2(Int bound = kSearchBound) {
    std::vector<NonFermatRow> rows;
    for (Int two_c = 2; two_c <= bound; two_c += 2) {
        const Int c = two_c / 2;
        for (Int A : divisors(c)) {
            const Int d = c - 3 - A;
            if (d < 2 || (two_c - 2) % d != 0 || two_c % d == 0) continue;
            if (auto row = detail::nonfermat_candidate(2, A, 2, d, c)) rows.push_back(std::move(*row));
        }
    }
    detail::finish_family(rows);
    return rows;
}

// Number of distinct weight multisets among the rows.
inline std::size_t distinct_types(const std::vector<NonFermatRow>& rows) {
    std::set<std::array<Int, 5>> s;
    for (const auto& row : rows) s.insert(detail::sorted_weights(row.weights));
    return s.size();
}

struct VerificationReport {
    std::vector<Int> weights;
    Int degree = 0; // 2c, twice the last weight
    bool sum_ok = false;
    bool A_divides_2c = false;
    bool m_even = false;
    bool A_divides_c = false;
    bool well_formed = false;
    bool amplitude_zero = false;
    QuasiSmoothVerdict quasi_smooth;

    bool passes() const {
        return sum_ok && A_divides_2c && m_even && A_divides_c && well_formed && amplitude_zero;
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        if (!sum_ok) out.push_back("sum violation");
        if (!A_divides_2c) out.push_back("A does not divide 2c");
        if (!m_even) out.push_back("m not even");
        if (!A_divides_c) out.push_back("A does not divide c");
        if (!well_formed) out.push_back("not well formed");
        if (!amplitude_zero) out.push_back("amplitude nonzero");
        return out;
    }
};

/// Structural checks on a row (A,1,a,b,c), read with 2c = twice the last entry.
inline VerificationReport verify_row(const std::vector<Int>& weights) {
    if (weights.size() != 5) {
        std::ostringstream os;
        os << "row needs 5 weights, got " << weights.size();
        throw InvalidTypeError(InvalidTypeError::Kind::Shape, os.str());
    }
    VerificationReport rep;
    rep.weights = weights;
    const Int A = weights.front(), c = weights.back();
    rep.degree = 2 * c;
    WeightedType wt{rep.degree, weights};
    rep.sum_ok = wt.weight_sum() == rep.degree;
    rep.A_divides_2c = rep.degree % A == 0;
    rep.m_even = rep.A_divides_2c && (rep.degree / A) % 2 == 0;
    rep.A_divides_c = c % A == 0;
    rep.well_formed = well_formed_type(wt);
    rep.amplitude_zero = amplitude(wt) == 0;
    rep.quasi_smooth = quasi_smooth_general(wt);
    return rep;
}

} // namespace symcy
