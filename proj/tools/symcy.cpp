// symcy: command-line front end for the symmetric Calabi-Yau toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "symcy/report.hpp"
#include "symcy/symcy.hpp"

namespace {

using namespace symcy;
using report::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInvalidType = 3, kBadArgument = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string hv(const HodgeVector& h) { return h.str(); }

// ---- egyptian ----

int run_egyptian(Format fmt, std::optional<Int> min_first, std::optional<Int> first) {
    auto all = egyptian_five();
    std::vector<EgyptianSolution> rows;
    std::map<Int, Int> counts;
    for (const auto& s : all.solutions) {
        if (min_first && s.first() < *min_first) continue;
        if (first && s.first() != *first) continue;
        rows.push_back(s);
        ++counts[s.first()];
    }

    Json summary{{"total", rows.size()}, {"counts_by_first", Json::object()}};
    for (auto [n, k] : counts) summary["counts_by_first"][std::to_string(n)] = k;

    if (fmt == Format::Json) {
        Json args = Json::object();
        if (min_first) args["min_first_denominator"] = *min_first;
        if (first) args["first_denominator"] = *first;
        Json arr = Json::array();
        for (const auto& s : rows) arr.push_back(report::to_json(s));
        emit_json(report::envelope("egyptian", args, arr, summary));
    } else if (fmt == Format::Csv) {
        report::write_csv_row(std::cout, {"n", "p", "q", "r", "s"});
        for (const auto& s : rows) {
            std::vector<std::string> f;
            for (Int x : s.denoms) f.push_back(std::to_string(x));
            report::write_csv_row(std::cout, f);
        }
    } else {
        report::TextTable table({"n", "denominators"});
        for (const auto& s : rows) table.add({std::to_string(s.first()), s.str()});
        table.print(std::cout);
        std::cout << "counts:";
        for (auto [n, k] : counts) std::cout << " n=" << n << ":" << k;
        std::cout << "\ntotal: " << rows.size() << "\n";
    }
    return kOk;
}

// ---- classify ----

std::vector<std::string> fermat_cells(const FermatRow& r) {
    return {r.quad_str(),
            r.cy.str(),
            std::to_string(r.inv.h12),
            std::to_string(r.inv.genus),
            std::to_string(r.inv.order),
            r.inv.rep};
}

std::vector<std::string> nonfermat_cells(const NonFermatRow& r) {
    return {r.weights_str(),
            r.cy.str(),
            std::to_string(r.r),
            std::to_string(r.d),
            std::to_string(r.inv.h12),
            std::to_string(r.inv.genus),
            std::to_string(r.inv.order),
            std::to_string(r.assignments),
            r.inv.rep};
}

int run_classify(Format fmt, const std::string& mode) {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
    Json rows = Json::array();
    Json summary;

    if (mode == "fermat") {
        header = {"quad", "type", "h12", "g", "order", "rep"};
        auto res = classify_fermat();
        for (const auto& r : res) {
            cells.push_back(fermat_cells(r));
            rows.push_back(report::to_json(r));
        }
        summary = Json{{"rows", res.size()}};
    } else {
        header = {"tuple", "type", "r", "d", "h12", "g", "order", "assignments", "rep"};
        auto res = mode == "case1" ? search_case1() : search_case2();
        for (const auto& r : res) {
            cells.push_back(nonfermat_cells(r));
            rows.push_back(report::to_json(r));
        }
        summary = Json{{"rows", res.size()}, {"distinct_types", distinct_types(res)}, {"bound", kSearchBound}};
    }

    if (fmt == Format::Json) {
        emit_json(report::envelope("classify", Json{{"mode", mode}}, rows, summary));
    } else if (fmt == Format::Csv) {
        report::write_csv_row(std::cout, header);
        for (const auto& c : cells) report::write_csv_row(std::cout, c);
    } else {
        report::TextTable table(header);
        for (auto& c : cells) table.add(c);
        table.print(std::cout);
        std::cout << "rows: " << cells.size() << "\n";
        if (summary.contains("distinct_types"))
            std::cout << "distinct types: " << summary["distinct_types"].get<std::size_t>() << "\n";
    }
    return kOk;
}

// ---- hodge ----

void warn_if_inconclusive(const QuasiSmoothVerdict& v) {
    if (v.status == QuasiSmoothStatus::NotQuasiSmoothGeneral)
        throw InvalidTypeError(InvalidTypeError::Kind::NotQuasiSmooth, v.witness);
    if (v.status == QuasiSmoothStatus::Inconclusive)
        std::cerr << "warning: quasi-smoothness inconclusive (" << v.witness << ")\n";
}

int run_hodge(Format fmt, const std::vector<Int>& values) {
    if (values.size() < 2) throw UsageError("hodge needs a degree followed by weights");
    WeightedType t{values.front(), std::vector<Int>(values.begin() + 1, values.end())};
    if (t.size() != 3 && t.size() != 5)
        throw InvalidTypeError(InvalidTypeError::Kind::Shape, "hodge takes 3 or 5 weights, got " + std::to_string(t.size()));

    std::optional<HodgeVector> hodge;
    std::optional<Int> g;
    if (t.size() == 5) hodge = hodge_numbers_cy3(t); // CY-sum checked first
    auto qs = quasi_smooth_general(t);
    warn_if_inconclusive(qs);
    if (t.size() == 3) g = genus(t);
    Int kur = kuranishi_dim(t);

    Json row{{"type", report::to_json(t)}};
    if (hodge) row["hodge"] = report::to_json(*hodge);
    if (g) row["genus"] = *g;
    row["kuranishi_dim"] = kur;
    row["quasi_smooth"] = report::to_json(qs);

    if (fmt == Format::Json) {
        emit_json(report::envelope("hodge", Json{{"degree", t.degree()}, {"weights", t.weights()}},
                                   Json::array({row}), Json::object()));
    } else if (fmt == Format::Csv) {
        report::write_csv_row(std::cout, {"type", hodge ? "hodge" : "genus", "kuranishi_dim", "quasi_smooth", "criterion"});
        report::write_csv_row(std::cout, {t.str(), hodge ? hv(*hodge) : std::to_string(*g), std::to_string(kur),
                                          to_string(qs.status), to_string(qs.criterion)});
    } else {
        std::cout << "type: " << t.str() << "\n";
        if (hodge) std::cout << "hodge: " << hv(*hodge) << "\n";
        if (g) std::cout << "genus: " << *g << "\n";
        std::cout << "kuranishi_dim: " << kur << "\n";
        std::cout << "quasi_smooth: " << to_string(qs.status) << " [" << to_string(qs.criterion) << "] "
                  << qs.witness << "\n";
    }
    return kOk;
}

// ---- decompose ----

int run_decompose(Format fmt, const std::vector<Int>& params, std::optional<Int> quotient) {
    if (params.size() != 4) throw UsageError("decompose takes exactly four parameters: A a b c");
    auto cy = make_symmetric_cy(params[0], params[1], params[2], params[3]);
    warn_if_inconclusive(quasi_smooth_general(cy.weighted_type()));
    std::optional<WeightedType> qtype;
    if (quotient) qtype = quotient_type(cy, *quotient); // validates d before the heavy work

    auto dec = isotypical_decomposition(cy);
    auto rep = rep_string(dec);
    auto total = hodge_numbers_cy3(cy.weighted_type());
    std::optional<HodgeVector> qh;
    if (quotient) qh = quotient_hodge(dec, *quotient);

    if (fmt == Format::Json) {
        Json args{{"A", cy.A()}, {"a", cy.a()}, {"b", cy.b()}, {"c", cy.c()}};
        if (quotient) args["quotient"] = *quotient;
        Json summary{{"type", report::to_json(cy.weighted_type())},
                     {"order", cy.order()},
                     {"hodge", report::to_json(total)},
                     {"rep", rep}};
        if (quotient)
            summary["quotient"] = Json{{"d", *quotient}, {"type", report::to_json(*qtype)},
                                       {"amplitude", amplitude(*qtype)}, {"hodge", report::to_json(*qh)}};
        emit_json(report::envelope("decompose", args, report::components_json(dec), summary));
    } else if (fmt == Format::Csv) {
        report::write_csv_row(std::cout, {"divisor", "phi", "multiplicity", "hodge"});
        for (auto it = dec.components.rbegin(); it != dec.components.rend(); ++it)
            report::write_csv_row(std::cout, {std::to_string(it->first), std::to_string(euler_phi(it->first)),
                                              std::to_string(it->second.multiplicity), hv(it->second.hodge)});
    } else {
        std::cout << "type: " << cy.str() << "\norder: " << cy.order() << "\nhodge: " << hv(total) << "\n";
        report::TextTable table({"divisor", "phi", "multiplicity", "hodge"});
        for (auto it = dec.components.rbegin(); it != dec.components.rend(); ++it)
            table.add({std::to_string(it->first), std::to_string(euler_phi(it->first)),
                       std::to_string(it->second.multiplicity), hv(it->second.hodge)});
        table.print(std::cout);
        std::cout << "rep: " << rep << "\n";
        if (quotient)
            std::cout << "quotient d=" << *quotient << ": " << qtype->str() << " amplitude " << amplitude(*qtype)
                      << " hodge " << hv(*qh) << "\n";
    }
    return kOk;
}

// ---- verify ----

struct ParsedRow {
    Int line;
    std::vector<Int> weights;
};

std::vector<ParsedRow> parse_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    static const std::regex row_re(R"(^\s*\(?\s*(\d+(?:\s*[,\s]\s*\d+)*)\s*\)?\s*$)");
    static const std::regex num_re(R"(\d+)");
    std::vector<ParsedRow> rows;
    std::string line;
    Int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::smatch m;
        if (!std::regex_match(line, m, row_re))
            throw UsageError(path + ":" + std::to_string(lineno) + ": cannot parse row '" + line + "'");
        ParsedRow row{lineno, {}};
        std::string body = m[1];
        for (std::sregex_iterator it(body.begin(), body.end(), num_re), end; it != end; ++it)
            row.weights.push_back(std::stoll(it->str()));
        if (row.weights.size() != 5)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected 5 weights, got " +
                             std::to_string(row.weights.size()));
        for (Int w : row.weights)
            if (w < 1) throw UsageError(path + ":" + std::to_string(lineno) + ": weights must be positive");
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_verify(Format fmt, const std::string& path) {
    auto rows = parse_rows(path);
    std::vector<VerificationReport> reports;
    std::size_t passed = 0;
    for (const auto& r : rows) {
        reports.push_back(verify_row(r.weights));
        if (reports.back().passes()) ++passed;
    }

    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) arr.push_back(report::to_json(reports[i], rows[i].line));
        emit_json(report::envelope("verify", Json{{"file", path}}, arr,
                                   Json{{"rows", rows.size()}, {"passed", passed}}));
    } else {
        std::vector<std::string> header{"line", "weights", "2c", "result", "quasi_smooth", "criterion", "failures"};
        auto cells = [&](std::size_t i) {
            const auto& rep = reports[i];
            std::string failures;
            for (const auto& f : rep.failures()) failures += (failures.empty() ? "" : "; ") + f;
            return std::vector<std::string>{std::to_string(rows[i].line), report::tuple_str(rep.weights),
                                            std::to_string(rep.degree), rep.passes() ? "pass" : "FAIL",
                                            to_string(rep.quasi_smooth.status), to_string(rep.quasi_smooth.criterion),
                                            failures};
        };
        if (fmt == Format::Csv) {
            report::write_csv_row(std::cout, header);
            for (std::size_t i = 0; i < rows.size(); ++i) report::write_csv_row(std::cout, cells(i));
        } else {
            report::TextTable table(header);
            for (std::size_t i = 0; i < rows.size(); ++i) table.add(cells(i));
            table.print(std::cout);
            std::cout << "rows: " << rows.size() << "\npassed: " << passed << "\n";
        }
    }
    return passed == rows.size() ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric Calabi-Yau threefold hypersurfaces: classification and Hodge data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(report::kVersion));

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };

    auto* egy = app.add_subcommand("egyptian", "Five-term Egyptian fractions summing to 1");
    std::optional<Int> min_first, first;
    egy->add_option("--min-first-denominator", min_first, "Keep solutions whose smallest denominator is at least n");
    egy->add_option("--first-denominator", first, "Keep solutions whose smallest denominator is exactly n");
    add_format(egy);

    auto* cls = app.add_subcommand("classify", "Tabulate symmetric Calabi-Yau families");
    bool fermat = false, case1 = false, case2 = false;
    cls->add_flag("--fermat", fermat, "Fermat-type threefolds");
    cls->add_flag("--case1", case1, "Non-Fermat family r*d = 2c-1");
    cls->add_flag("--case2", case2, "Non-Fermat family a=2, r*d = 2c-2");
    add_format(cls);

    auto* hod = app.add_subcommand("hodge", "Hodge numbers (5 weights) or genus (3 weights) of a type");
    std::vector<Int> hodge_values;
    hod->add_option("values", hodge_values, "degree followed by weights")->required()->expected(2, 8);
    add_format(hod);

    auto* dec = app.add_subcommand("decompose", "Isotypical decomposition of H^3 for (2c,[A,1,a,b,c])");
    std::vector<Int> dec_values;
    std::optional<Int> quotient;
    dec->add_option("params", dec_values, "A a b c")->required()->expected(4);
    dec->add_option("--quotient", quotient, "Also report H^3 of the quotient by the order-(m/d) subgroup");
    add_format(dec);

    auto* ver = app.add_subcommand("verify", "Structural checks on rows (A,1,a,b,c) read from a file");
    std::string verify_path;
    ver->add_option("file", verify_path, "Input file, one row per line")->required();
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    try {
        if (egy->parsed()) return run_egyptian(fmt, min_first, first);
        if (cls->parsed()) {
            int modes = int(fermat) + int(case1) + int(case2);
            if (modes != 1) throw UsageError("classify needs exactly one of --fermat, --case1, --case2");
            return run_classify(fmt, fermat ? "fermat" : case1 ? "case1" : "case2");
        }
        if (hod->parsed()) return run_hodge(fmt, hodge_values);
        if (dec->parsed()) return run_decompose(fmt, dec_values, quotient);
        if (ver->parsed()) return run_verify(fmt, verify_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidType;
    } catch (const ArgumentError& e) {
        std::cerr << "error: invalid argument: " << e.what() << "\n";
        return kBadArgument;
    } catch (const ArithmeticError& e) {
        std::cerr << "error: arithmetic: " << e.what() << "\n";
        return kInvalidType;
    }
    return kUsage;
}
