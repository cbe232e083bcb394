#include "cpsurgery/reproduce.hpp"

#include "cpsurgery/errors.hpp"
#include "cpsurgery/forgetful.hpp"
#include "cpsurgery/kerj.hpp"
#include "cpsurgery/obstruction.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#ifndef CPSURGERY_GOLDEN_DEFAULT
#define CPSURGERY_GOLDEN_DEFAULT "data/golden"
#endif

namespace cpsurgery {

namespace fs = std::filesystem;

std::vector<int> available_tables()
{
    return {1, 2, 3, 4, 5, 6, 7};
}

fs::path default_golden_dir()
{
    if (const char* d = std::getenv("CPSURGERY_GOLDEN_DIR"); d && *d)
        return fs::path(d);
    return fs::path(CPSURGERY_GOLDEN_DEFAULT);
}

namespace {

void require_table(int table)
{
    auto t = available_tables();
    if (std::find(t.begin(), t.end(), table) == t.end())
        throw ValidationError("no such table: " + std::to_string(table) + " (available: 1-7)");
}

std::string rc(int l, int n)
{
    return "l=" + std::to_string(l) + ",n=" + std::to_string(n);
}

struct Differ {
    TableReport& rep;

    void cell(const std::string& row, const std::string& name, const std::string& expected, const std::string& actual)
    {
        ++rep.cells;
        if (expected != actual)
            rep.diffs.push_back({row, name, expected, actual});
    }
    void cell(const std::string& row, const std::string& name, const Integer& e, const Integer& a)
    {
        cell(row, name, e.get_str(), a.get_str());
    }
    void flag(const std::string& row, const std::string& name, bool ok)
    {
        cell(row, name, "true", ok ? "true" : "false");
    }
};

IntMatrix matrix_from_json(const json& j)
{
    IntMatrix m;
    for (const auto& r : j) {
        IntVector row;
        for (const auto& v : r)
            row.push_back(integer_from_json(v));
        m.push_back(std::move(row));
    }
    return m;
}

std::string shape(const IntMatrix& m)
{
    return std::to_string(m.size()) + "x" + std::to_string(m.empty() ? 0 : m[0].size());
}

void compare_matrix(Differ& d, const std::string& row, const std::string& name, const IntMatrix& expected,
                    const IntMatrix& actual)
{
    if (shape(expected) != shape(actual)) {
        d.cell(row, name + ".shape", shape(expected), shape(actual));
        return;
    }
    for (size_t i = 0; i < expected.size(); ++i)
        for (size_t j = 0; j < expected[i].size(); ++j)
            d.cell(row, name + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", expected[i][j],
                   actual[i][j]);
}

std::string tabular(const std::string& cols, const std::string& head, const std::string& body)
{
    return "\\begin{tabular}{" + cols + "}\n\\hline\n" + head + body + "\\end{tabular}\n";
}

// Footnote variables x, y, z, ... are m_1, m_2, ...; a is the sphere coordinate.
IntVector footnote_row(const json& fn, int l, size_t width)
{
    IntVector c(width);
    const size_t shift = (l % 2 == 0) ? 1 : 0;
    const std::string letters = "xyzwuv";
    auto vars = fn.at("vars");
    auto coeffs = fn.at("coeffs");
    for (size_t i = 0; i < vars.size(); ++i) {
        const std::string v = vars[i].get<std::string>();
        size_t pos;
        if (v == "a") {
            if (!shift)
                throw ValidationError("sphere variable in a footnote for odd l");
            pos = 0;
        } else {
            pos = letters.find(v);
            if (pos == std::string::npos)
                throw ValidationError("unknown footnote variable " + v);
            pos += shift;
        }
        if (pos >= width)
            throw ValidationError("footnote variable " + v + " out of range");
        c[pos] = integer_from_json(coeffs[i]);
    }
    return c;
}

TableReport table1(const json& g)
{
    TableReport rep{1, 0, {}, {}, {}};
    Differ d{rep};
    std::string body;
    for (const auto& c : g.at("cells")) {
        const int l = c.at("l").get<int>(), n = c.at("n").get<int>();
        const std::string row = rc(l, n);
        ForgetfulMatrix fm = matrix_bundle(n, l);
        compare_matrix(d, row, "a_prime", matrix_from_json(c.at("a_prime")), fm.a_prime);
        const int width = static_cast<int>(fm.columns.size());
        IntColumns pcols = columns_of(fm.p);
        if (c.contains("footnote")) {
            IntVector eq = footnote_row(c.at("footnote"), l, fm.columns.size());
            ObstructionForm top = obstruction_form(n, l);
            IntVector row_form = top.row();
            for (size_t i = 0; i < eq.size(); ++i)
                d.cell(row, "equation." + fm.columns[i], eq[i], i < row_form.size() ? row_form[i] : Integer(0));
            d.flag(row, "P.spans_roots", same_span(pcols, roots_of(eq).basis, width));
        } else if ((n + l) % 2 == 1) {
            d.flag(row, "P.identity", fm.p == identity_matrix(width));
        }
        if (c.contains("p_example")) {
            IntMatrix pe = matrix_from_json(c.at("p_example"));
            // printed rows are (m_1, ..., sphere); ours are (sphere, m_1, ...)
            if (l % 2 == 0 && !pe.empty())
                std::rotate(pe.begin(), pe.end() - 1, pe.end());
            d.flag(row, "p_example.spans_roots", same_span(columns_of(pe), pcols, width));
            compare_matrix(d, row, "a_example", matrix_from_json(c.at("a_example")), multiply(fm.a_prime, pe));
        }
        body += "% " + row + "\n" + render_forgetful(fm, Format::latex);
    }
    rep.latex = "% A'_{n,l} with P_{l,n}\n" + body;
    return rep;
}

TableReport table2(const json& g)
{
    TableReport rep{2, 0, {}, {}, {}};
    Differ d{rep};
    std::string body;
    for (const auto& m : g.at("rows")) {
        const int n = m.at("n").get<int>(), l = m.at("l").get<int>();
        const std::string row = m.at("manifold").get<std::string>();
        CongruenceSystem cs = congruences(n, l);
        const auto all = cs.all_rows();
        const auto& rows = m.at("rows");
        d.cell(row, "rows", std::to_string(rows.size()), std::to_string(all.size()));
        for (size_t r = 0; r < std::min(rows.size(), all.size()); ++r) {
            const auto& actual = all[r];
            RatVector expected(actual.coeffs.size());
            for (const auto& [key, val] : rows[r].at("coeffs").items()) {
                const int first = std::stoi(key);
                const int k = (first - cs.eps) / 2;
                if ((first - cs.eps) % 2 != 0 || k < 0 || k >= static_cast<int>(expected.size()))
                    throw ValidationError("golden table 2: bad invariant index " + key);
                expected[static_cast<size_t>(k)] = rational_from_json(val);
            }
            const std::string prefix = "row" + std::to_string(r + 1) + ".";
            for (size_t k = 0; k < expected.size(); ++k)
                d.cell(row, prefix + cs.invariants[k], expected[k].get_str(), actual.coeffs[k].get_str());
            d.cell(row, prefix + "modulus", integer_from_json(rows[r].at("modulus")), actual.modulus);
        }
        body += render_congruences(cs, Format::latex);
    }
    rep.latex = tabular("|c|c|", "Manifold & Congruences \\\\ \\hline\n", body);
    return rep;
}

void generator_rows(TableReport& rep, const json& g)
{
    Differ d{rep};
    std::string body;
    for (const auto& r : g.at("rows")) {
        const int n = r.at("n").get<int>(), l = r.at("l").get<int>();
        const std::string row = rc(l, n);
        IntColumns expected;
        for (const auto& gen : r.at("generators")) {
            IntVector v;
            for (const auto& x : gen)
                v.push_back(integer_from_json(x));
            expected.push_back(std::move(v));
        }
        if (l == 0) {
            GeneratorSet shown{n, 0, Provenance::direct, n, {}};
            for (size_t i = 0; i < expected.size(); ++i) {
                KOElement xi = KOElement::zero(n, 0);
                if (expected[i].size() != xi.coords.size()) {
                    d.cell(row, "xi" + std::to_string(i + 1) + ".size", std::to_string(xi.coords.size()),
                           std::to_string(expected[i].size()));
                    continue;
                }
                xi.coords = expected[i];
                d.flag(row, "xi" + std::to_string(i + 1) + ".member", membership_l0(xi, n).member);
                shown.generators.push_back(xi);
            }
            rep.notes.push_back(row + ": membership checked for each printed generator");
            body += render_kerj(shown, Format::latex);
            continue;
        }
        GeneratorSet gs = canonical_generators(n, l);
        d.cell(row, "count", std::to_string(expected.size()), std::to_string(gs.generators.size()));
        for (size_t i = 0; i < std::min(expected.size(), gs.generators.size()); ++i) {
            const auto& a = gs.generators[i].coords;
            if (a.size() != expected[i].size()) {
                d.cell(row, "xi" + std::to_string(i + 1) + ".size", std::to_string(expected[i].size()),
                       std::to_string(a.size()));
                continue;
            }
            for (size_t k = 0; k < a.size(); ++k)
                d.cell(row, "xi" + std::to_string(i + 1) + "[" + std::to_string(k + 1) + "]", expected[i][k], a[k]);
        }
        const int width = static_cast<int>(basis_descriptors(n, l).size());
        if (same_span(expected, gs.columns(), width))
            rep.notes.push_back(row + ": printed generators span the computed lattice");
        body += render_kerj(gs, Format::latex);
    }
    rep.latex = tabular("|c|c|", "", body);
}

std::map<int, IntVector> class_delta(const PontryaginClassList& full, const PontryaginClassList* base)
{
    std::map<int, IntVector> out = full.classes;
    if (base)
        for (const auto& [j, row] : base->classes) {
            auto& dst = out[j];
            dst.resize(std::max(dst.size(), row.size()));
            for (size_t i = 0; i < row.size(); ++i)
                dst[i] -= row[i];
        }
    for (auto it = out.begin(); it != out.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(), [](const Integer& z) { return z == 0; });
        it = zero ? out.erase(it) : std::next(it);
    }
    return out;
}

TableReport obstruction_table(int table, const json& g)
{
    TableReport rep{table, 0, {}, {}, {}};
    Differ d{rep};
    const int l = g.at("l").get<int>();
    std::string body;
    for (const auto& r : g.at("rows")) {
        const int n = r.at("n").get<int>();
        const std::string row = "n=" + std::to_string(n);
        GeneratorSet gs = canonical_generators(n, l);
        PontryaginClassList full = total_pontryagin(gs);
        std::optional<PontryaginClassList> base;
        if (!r.at("base").is_null())
            base = total_pontryagin(canonical_generators(r.at("base").get<int>(), l));
        auto delta = class_delta(full, base ? &*base : nullptr);

        std::map<int, std::map<int, Integer>> expected;
        for (const auto& term : r.at("terms")) {
            const int deg = term.at("deg").get<int>();
            for (const auto& [var, val] : term.at("coeffs").items())
                expected[deg][std::stoi(var.substr(1))] = integer_from_json(val);
        }
        std::set<std::pair<int, int>> keys;
        for (const auto& [deg, m] : expected)
            for (const auto& [i, v] : m)
                keys.insert({deg, i});
        for (const auto& [j, rowv] : delta)
            for (size_t i = 0; i < rowv.size(); ++i)
                if (rowv[i] != 0)
                    keys.insert({PontryaginClassList::printed_degree(j), static_cast<int>(i) + 1});
        for (const auto& [deg, i] : keys) {
            Integer e = 0, a = 0;
            if (auto it = expected.find(deg); it != expected.end())
                if (auto jt = it->second.find(i); jt != it->second.end())
                    e = jt->second;
            if (deg % 2 == 0)
                if (auto it = delta.find(deg / 2); it != delta.end() && static_cast<size_t>(i) <= it->second.size())
                    a = it->second[static_cast<size_t>(i) - 1];
            d.cell(row, "x^" + std::to_string(deg) + ".m" + std::to_string(i), e, a);
        }

        ObstructionForm form = obstruction_form(n, l, gs);
        const auto& fj = r.at("form");
        const auto& ec = fj.at("coeffs");
        d.cell(row, "form.size", std::to_string(ec.size()), std::to_string(form.coeffs.size()));
        for (size_t i = 0; i < std::min(ec.size(), form.coeffs.size()); ++i)
            d.cell(row, "form.m" + std::to_string(i + 1), integer_from_json(ec[i]), form.coeffs[i]);
        if (fj.contains("sphere") || form.sphere_coeff)
            d.cell(row, "form.y", fj.contains("sphere") ? integer_from_json(fj.at("sphere")).get_str() : "absent",
                   form.sphere_coeff ? form.sphere_coeff->get_str() : "absent");

        std::string lead = "1";
        if (base) {
            const int b = r.at("base").get<int>();
            lead = b < 10 ? "P_" + std::to_string(b) : "P_{" + std::to_string(b) + "}";
        }
        body += "$" + std::to_string(n) + "$ & \\thead{$" + lead
                + latex_class_terms(delta, variable_names(n, l, false)) + "$} & \\thead{$" + latex_form(form)
                + "$} \\\\ \\hline\n";
    }
    if (l % 2 == 0)
        rep.notes.push_back("classes compared on the m coordinates; the sphere term is listed only in the form");
    rep.latex = tabular("|c|c|c|", "$n$ & Total Pontryagin class & Surgery obstruction \\\\ \\hline\n", body);
    return rep;
}

}  // namespace

json load_golden(int table, const fs::path& dir)
{
    require_table(table);
    const fs::path p = dir / ("table" + std::to_string(table) + ".json");
    std::ifstream in(p);
    if (!in)
        throw ValidationError("cannot open golden file " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("malformed golden file " + p.string() + ": " + e.what());
    }
}

TableReport reproduce_table(int table, const json& golden)
{
    require_table(table);
    try {
        switch (table) {
        case 1:
            return table1(golden);
        case 2:
            return table2(golden);
        case 3:
        case 4: {
            TableReport rep{table, 0, {}, {}, {}};
            generator_rows(rep, golden);
            return rep;
        }
        default:
            return obstruction_table(table, golden);
        }
    } catch (const json::exception& e) {
        throw ValidationError("golden table " + std::to_string(table) + ": " + e.what());
    }
}

TableReport reproduce_table(int table, const fs::path& dir)
{
    return reproduce_table(table, load_golden(table, dir));
}

std::string render_reproduce(const std::vector<TableReport>& reports, Format f)
{
    std::ostringstream os;
    bool all = std::all_of(reports.begin(), reports.end(), [](const TableReport& r) { return r.pass(); });
    switch (f) {
    case Format::json: {
        json tables = json::array();
        for (const auto& r : reports) {
            json diffs = json::array();
            for (const auto& c : r.diffs)
                diffs.push_back(json{{"row", c.row}, {"cell", c.cell}, {"expected", c.expected}, {"actual", c.actual}});
            tables.push_back(json{{"table", r.table},
                                  {"pass", r.pass()},
                                  {"cells", r.cells},
                                  {"diffs", diffs},
                                  {"notes", r.notes}});
        }
        return dump(json{{"pass", all}, {"tables", tables}});
    }
    case Format::csv:
        os << "table,status,row,cell,expected,actual\n";
        for (const auto& r : reports) {
            if (r.pass())
                os << r.table << ",pass,,,,\n";
            for (const auto& c : r.diffs)
                os << r.table << ",diff," << c.row << "," << c.cell << "," << c.expected << "," << c.actual << "\n";
        }
        return os.str();
    case Format::latex:
        for (const auto& r : reports)
            os << "% Table " << r.table << "\n" << r.latex;
        return os.str();
    case Format::text:
        for (const auto& r : reports) {
            os << "Table " << r.table << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.cells << " cells, "
               << r.diffs.size() << " diffs)\n";
            for (const auto& c : r.diffs)
                os << "  [" << c.row << "] " << c.cell << ": expected " << c.expected << ", got " << c.actual << "\n";
        }
        os << (all ? "all tables pass" : "some tables differ") << "\n";
        return os.str();
    }
    return {};
}

}  // namespace cpsurgery
