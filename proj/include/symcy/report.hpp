#pragma once

// Serialization of results: JSON records, RFC 4180 CSV, aligned text tables.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "symcy/enumerate.hpp"
#include "symcy/equivariant.hpp"
#include "symcy/hodge.hpp"
#include "symcy/wtypes.hpp"

namespace symcy::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

inline Json to_json(const HodgeVector& h) { return Json::array({h.h30, h.h21, h.h12, h.h03}); }

inline Json to_json(const WeightedType& t) {
    return Json{{"degree", t.degree()}, {"weights", t.weights()}, {"symbol", t.str()}};
}

inline Json to_json(const QuasiSmoothVerdict& v) {
    return Json{{"status", to_string(v.status)}, {"criterion", to_string(v.criterion)}, {"witness", v.witness}};
}

inline Json components_json(const IsotypicalDecomposition& dec) {
    Json arr = Json::array();
    for (auto it = dec.components.rbegin(); it != dec.components.rend(); ++it) {
        arr.push_back(Json{{"divisor", it->first},
                           {"phi", euler_phi(it->first)},
                           {"multiplicity", it->second.multiplicity},
                           {"hodge", to_json(it->second.hodge)}});
    }
    return arr;
}

inline Json invariants_json(const SymmetricCYType& cy, const TypeInvariants& inv) {
    return Json{{"type", to_json(cy.weighted_type())},
                {"hodge", to_json(inv.hodge)},
                {"h12", inv.h12},
                {"genus", inv.genus},
                {"order", inv.order},
                {"rep", inv.rep},
                {"components", components_json(inv.decomposition)}};
}

inline Json to_json(const EgyptianSolution& s) {
    return Json{{"first", s.first()}, {"denominators", s.denoms}};
}

inline Json to_json(const FermatRow& row) {
    Json j{{"quad", row.quad}};
    j.update(invariants_json(row.cy, row.inv));
    return j;
}

inline Json to_json(const NonFermatRow& row) {
    Json j{{"tuple", row.weights}, {"family", row.family}, {"r", row.r}, {"d", row.d},
           {"assignments", row.assignments}};
    j.update(invariants_json(row.cy, row.inv));
    return j;
}

inline Json to_json(const VerificationReport& rep, Int line) {
    return Json{{"line", line},
                {"weights", rep.weights},
                {"degree", rep.degree},
                {"checks",
                 Json{{"sum", rep.sum_ok},
                      {"A_divides_2c", rep.A_divides_2c},
                      {"m_even", rep.m_even},
                      {"A_divides_c", rep.A_divides_c},
                      {"well_formed", rep.well_formed},
                      {"amplitude_zero", rep.amplitude_zero}}},
                {"quasi_smooth", to_json(rep.quasi_smooth)},
                {"passes", rep.passes()},
                {"failures", rep.failures()}};
}

inline Json envelope(const std::string& command, Json arguments, Json rows, Json summary) {
    return Json{{"command", command},
                {"arguments", std::move(arguments)},
                {"version", kVersion},
                {"rows", std::move(rows)},
                {"summary", std::move(summary)}};
}

// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
    os << "\n";
}

template <class Seq>
std::string tuple_str(const Seq& xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto x : xs) { os << (first ? "" : ",") << x; first = false; }
    os << ')';
    return os.str();
}

/// Left-aligned text table, columns separated by two spaces.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width(header_.size(), 0);
        auto measure = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
        };
        measure(header_);
        for (const auto& r : rows_) measure(r);
        auto emit = [&](const std::vector<std::string>& r) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
            }
            os << line << "\n";
        };
        emit(header_);
        for (const auto& r : rows_) emit(r);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace symcy::report
