#pragma once

// mu_m-eigenspaces of H^3 for symmetric Calabi-Yau threefolds and their
// rational isotypical decomposition.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "symcy/arith.hpp"
#include "symcy/hodge.hpp"
#include "symcy/wtypes.hpp"

namespace symcy {

/// Hodge vector of each rho_m^e-eigenspace, e = 0..m-1.
struct EigenspaceTable {
    Int m = 0;
    std::vector<HodgeVector> rows;

    const HodgeVector& row(Int e) const { return rows[static_cast<std::size_t>(((e % m) + m) % m)]; }

    HodgeVector total() const {
        HodgeVector s;
        for (const auto& r : rows) s += r;
        return s;
    }
};

struct IsotypicalComponent {
    Int multiplicity = 0; // copies of the phi(d)-dimensional irreducible
    HodgeVector hodge;

    friend bool operator==(const IsotypicalComponent&, const IsotypicalComponent&) = default;
};

struct IsotypicalDecomposition {
    Int m = 0;
    std::map<Int, IsotypicalComponent> components; // every divisor of m, ascending

    const IsotypicalComponent& at(Int d) const { return components.at(d); }

    // Sum of multiplicity * phi(d).
    Int total_dimension() const {
        Int s = 0;
        for (const auto& [d, comp] : components)
            s = detail::checked_add(s, detail::checked_mul(comp.multiplicity, euler_phi(d)));
        return s;
    }
};

namespace detail {

// Series of R_F for s^m + H(x0,x1,x2) - x3^2, with the s-exponent kept as a residue mod m.
inline BigradedPolynomial symmetric_series(const SymmetricCYType& t, Int cap) {
    const Int m = t.order();
    BigradedPolynomial s_part(m, t.A() * (m - 2));
    for (Int j = 0; j <= m - 2; ++j) s_part.at(t.A() * j, j) = 1;
    auto curve = BigradedPolynomial::lift(milnor_series(t.curve_type(), cap), m);
    return bigraded_mul(s_part, curve, cap);
}

// Eigenspace dimensions of s^j M Omega / F^q at pole order q: s^j carries rho^{j+1}.
inline std::vector<Int> eigen_counts(const BigradedPolynomial& series, Int degree) {
    const Int m = series.modulus();
    std::vector<Int> out(static_cast<std::size_t>(m), 0);
    for (Int j = 0; j < m; ++j) {
        auto& slot = out[static_cast<std::size_t>((j + 1) % m)];
        slot = checked_add(slot, series(degree, j));
    }
    return out;
}

} // namespace detail

inline EigenspaceTable eigenspace_table(const SymmetricCYType& t) {
    const Int m = t.order();
    const Int d = t.degree();
    auto series = detail::symmetric_series(t, d);
    auto h21 = detail::eigen_counts(series, d);

    EigenspaceTable table{m, std::vector<HodgeVector>(static_cast<std::size_t>(m))};
    for (Int e = 0; e < m; ++e) {
        auto& row = table.rows[static_cast<std::size_t>(e)];
        row.h30 = (e == 1 % m) ? 1 : 0;
        row.h21 = h21[static_cast<std::size_t>(e)];
        row.h12 = h21[static_cast<std::size_t>((m - e) % m)];
        row.h03 = (e == m - 1) ? 1 : 0;
    }
    return table;
}

/// Recomputes h12 per eigenspace from degree 2d (pole order 3) and compares
/// with the conjugation rule row(e).h12 = row(m-e).h21.
inline bool cross_check_h12(const SymmetricCYType& t) {
    const Int m = t.order();
    auto series = detail::symmetric_series(t, 2 * t.degree());
    auto h12 = detail::eigen_counts(series, 2 * t.degree());
    auto table = eigenspace_table(t);
    for (Int e = 0; e < m; ++e)
        if (h12[static_cast<std::size_t>(e)] != table.row(e).h12) return false;
    return true;
}

inline IsotypicalDecomposition isotypical_decomposition(const EigenspaceTable& table) {
    IsotypicalDecomposition dec{table.m, {}};
    for (Int d : divisors(table.m)) {
        HodgeVector hv;
        for (Int k = 1; k <= d; ++k)
            if (gcd(k, d) == 1) hv += table.row(k * (table.m / d));
        Int phi = euler_phi(d);
        if (hv.total() % phi != 0) {
            std::ostringstream os;
            os << "isotypical component d=" << d << " has dimension " << hv.total()
               << ", not a multiple of phi(d)=" << phi;
            throw ArithmeticError(os.str());
        }
        dec.components[d] = {hv.total() / phi, hv};
    }
    return dec;
}

inline IsotypicalDecomposition isotypical_decomposition(const SymmetricCYType& t) {
    return isotypical_decomposition(eigenspace_table(t));
}

// H^3 of Y_d = X / <g^{m/d}>: sum of components over e | d.
inline HodgeVector quotient_hodge(const IsotypicalDecomposition& dec, Int d) {
    if (d < 1 || dec.m % d != 0 || d >= dec.m) {
        std::ostringstream os;
        os << "quotient order d=" << d << " must be a proper divisor of m=" << dec.m;
        throw ArgumentError(os.str());
    }
    HodgeVector hv;
    for (Int e : divisors(d)) hv += dec.at(e).hodge;
    return hv;
}

inline HodgeVector quotient_hodge(const SymmetricCYType& t, Int d) {
    if (d < 1 || t.order() % d != 0 || d >= t.order()) {
        std::ostringstream os;
        os << "quotient order d=" << d << " must be a proper divisor of m=" << t.order();
        throw ArgumentError(os.str());
    }
    return quotient_hodge(isotypical_decomposition(t), d);
}

/// Grouped form "mu.(d1,d2,...)+...": divisors sharing a nonzero
/// multiplicity, listed descending; the group holding m leads, the rest
/// follow by descending multiplicity.
inline std::string rep_string(const IsotypicalDecomposition& dec) {
    std::map<Int, std::vector<Int>, std::greater<>> groups;
    for (auto it = dec.components.rbegin(); it != dec.components.rend(); ++it)
        if (it->second.multiplicity > 0) groups[it->second.multiplicity].push_back(it->first);

    std::vector<std::pair<Int, std::vector<Int>>> ordered(groups.begin(), groups.end());
    std::stable_partition(ordered.begin(), ordered.end(), [&](const auto& g) {
        return std::find(g.second.begin(), g.second.end(), dec.m) != g.second.end();
    });

    std::string out;
    for (const auto& [mu, ds] : ordered) {
        if (!out.empty()) out += "+";
        out += std::to_string(mu) + ".(";
        for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? "," : "") + std::to_string(ds[i]);
        out += ")";
    }
    return out;
}

// Inverse of rep_string: divisor -> multiplicity. Throws ArgumentError on malformed text.
inline std::map<Int, Int> parse_rep_string(const std::string& text) {
    std::map<Int, Int> out;
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw ArgumentError(std::string("malformed representation string '") + text + "': " + why);
    };
    auto number = [&]() {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
        Int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = detail::checked_add(detail::checked_mul(v, 10), text[i++] - '0');
        return v;
    };
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c) fail("unexpected character");
        ++i;
    };
    while (i < text.size()) {
        Int mu = number();
        expect('.');
        expect('(');
        while (true) {
            Int d = number();
            if (!out.emplace(d, mu).second) fail("divisor repeated");
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            break;
        }
        expect(')');
        if (i < text.size()) {
            expect('+');
            if (i == text.size()) fail("trailing '+'");
        }
    }
    return out;
}

} // namespace symcy
