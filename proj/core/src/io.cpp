#include "cpsurgery/io.hpp"

#include "cpsurgery/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cpsurgery {

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    if (s == "latex")
        return Format::latex;
    if (s == "text")
        return Format::text;
    throw ValidationError("unknown format '" + s + "' (json, csv, latex, text)");
}

std::string to_string(Format f)
{
    switch (f) {
    case Format::json:
        return "json";
    case Format::csv:
        return "csv";
    case Format::latex:
        return "latex";
    case Format::text:
        return "text";
    }
    return "?";
}

json integer_to_json(const Integer& z)
{
    if (mpz_fits_slong_p(z.get_mpz_t()))
        return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    throw ValidationError("expected an integer, got " + j.dump());
}

json to_json(const Rational& q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_object())
        return make_rational(parse_integer(j.at("num").get<std::string>()),
                             parse_integer(j.at("den").get<std::string>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    return Rational(integer_from_json(j));
}

json to_json(const TruncatedSeries& s)
{
    json c = json::array();
    for (const auto& q : s.coeffs())
        c.push_back(to_json(q));
    return json{{"offset", s.offset()}, {"coeffs", c}};
}

TruncatedSeries series_from_json(const json& j)
{
    RatVector c;
    for (const auto& q : j.at("coeffs"))
        c.push_back(rational_from_json(q));
    if (c.empty())
        throw ValidationError("series without coefficients");
    const int order = static_cast<int>(c.size()) - 1;
    return TruncatedSeries(std::move(c), order, j.at("offset").get<int>());
}

std::vector<std::string> variable_names(int n, int l, bool with_sphere)
{
    std::vector<std::string> v;
    if (with_sphere && l % 2 == 0)
        v.push_back("y");
    for (int i = 1; i <= t_prime(n, 2 * l); ++i)
        v.push_back("m" + std::to_string(i));
    return v;
}

json to_json(const GeneratorSet& g)
{
    json gens = json::array();
    for (const auto& e : g.generators) {
        json coords = json::array();
        for (const auto& c : e.coords)
            coords.push_back(integer_to_json(c));
        gens.push_back(json{{"coords", coords}, {"display", display_element(e)}});
    }
    json basis = json::array();
    for (const auto& d : basis_descriptors(g.n, g.l))
        basis.push_back(d.display());
    return json{{"n", g.n},
                {"l", g.l},
                {"provenance", to_string(g.provenance)},
                {"source_n", g.source_n},
                {"basis", basis},
                {"generators", gens}};
}

json to_json(const ObstructionForm& f)
{
    json j = json::object();
    if (f.sphere_coeff)
        j["sphere"] = integer_to_json(*f.sphere_coeff);
    json c = json::array();
    for (const auto& v : f.coeffs)
        c.push_back(integer_to_json(v));
    j["coeffs"] = c;
    return j;
}

json to_json(const PontryaginClassList& p)
{
    auto vars = variable_names(p.n, p.l, p.has_sphere);
    json out = json::array();
    for (const auto& [j, row] : p.classes) {
        json poly = json::object();
        for (size_t v = 0; v < row.size(); ++v)
            if (row[v] != 0)
                poly[vars[v]] = integer_to_json(row[v]);
        out.push_back(json{{"deg", PontryaginClassList::printed_degree(j)}, {"coeff_poly", poly}});
    }
    return out;
}

namespace {

json matrix_json(const IntMatrix& m)
{
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& v : r)
            row.push_back(integer_to_json(v));
        rows.push_back(row);
    }
    return rows;
}

std::string plain_linear(const RatVector& coeffs, const std::vector<std::string>& vars)
{
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (mag != 1)
            os << mag.get_str() << "·";
        os << vars[k];
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::string plain_linear(const IntVector& coeffs, const std::vector<std::string>& vars)
{
    RatVector q(coeffs.begin(), coeffs.end());
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0)
            continue;
        Rational mag = abs(q[k]);
        os << (first ? (q[k] < 0 ? "-" : "") : (q[k] < 0 ? " - " : " + "));
        if (mag != 1)
            os << mag.get_str() << "·";
        os << vars[k];
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string latex_descriptor(const BasisDescriptor& d)
{
    switch (d.special) {
    case Special::sphere:
        return "\\xi_{S}";
    case Special::sigma:
        return "\\sigma";
    case Special::tau:
        return "\\tau";
    case Special::none:
        break;
    }
    std::string s;
    if (d.mu_index != 0)
        s += "\\mu_" + std::to_string(d.mu_index);
    if (d.mu0_power == 1)
        s += "\\mu_0";
    else if (d.mu0_power > 1)
        s += "\\mu_0^" + std::to_string(d.mu0_power);
    return s;
}

std::string latex_var(const std::string& v)
{
    if (v.size() > 1 && v[0] == 'm')
        return "m_" + (v.size() > 2 ? "{" + v.substr(1) + "}" : v.substr(1));
    return v;
}

std::string latex_power(const std::string& base, int e)
{
    if (e == 1)
        return base;
    if (e < 10)
        return base + "^" + std::to_string(e);
    return base + "^{" + std::to_string(e) + "}";
}

std::string latex_subscript(const std::string& base, int i)
{
    return i < 10 ? base + "_" + std::to_string(i) : base + "_{" + std::to_string(i) + "}";
}

std::string space_label(int n, int l)
{
    std::string cp = latex_power("\\cp", n);
    if (l == 0)
        return "$" + cp + "$";
    return "$" + latex_power("\\Sigma", 2 * l) + cp + "$";
}

std::string sigma_latex(int m, int l)
{
    return "\\overline{\\sigma}_{" + std::to_string(m) + "," + std::to_string(2 * l) + "}";
}

}  // namespace

json to_json(const ForgetfulMatrix& fm)
{
    json alts = json::array();
    for (const auto& [p, a] : fm.alternatives)
        alts.push_back(json{{"p", matrix_json(p)}, {"a", matrix_json(a)}});
    json j{{"n", fm.n},
           {"l", fm.l},
           {"columns", fm.columns},
           {"rows", fm.rows},
           {"a_prime", matrix_json(fm.a_prime)},
           {"p", matrix_json(fm.p)},
           {"a", matrix_json(fm.a)},
           {"b", "unknown"},
           {"c", "unknown"},
           {"torsion_blocks", "not computed"}};
    if (!fm.alternatives.empty())
        j["index2_alternatives"] = alts;
    return j;
}

json to_json(const CongruenceSystem& cs)
{
    json rows = json::array();
    for (const auto& r : cs.all_rows()) {
        json c = json::array();
        for (const auto& q : r.coeffs)
            c.push_back(to_json(q));
        rows.push_back(json{{"label", r.label}, {"coeffs", c}, {"modulus", integer_to_json(r.modulus)}});
    }
    return json{{"n", cs.n}, {"l", cs.l}, {"invariants", cs.invariants}, {"rows", rows}};
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

std::string latex_element(const KOElement& e)
{
    auto basis = basis_descriptors(e.n, e.l, e.with_sphere);
    std::vector<std::pair<Integer, std::string>> terms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (e.coords[i] != 0)
            terms.emplace_back(e.coords[i], latex_descriptor(basis[i]));
    if (terms.empty())
        return "0";
    auto join = [&](const std::string& prefix) {
        std::string s;
        for (size_t i = 0; i < terms.size(); ++i) {
            const auto& [c, d] = terms[i];
            if (c < 0)
                s += "-";
            else if (i > 0)
                s += "+";
            if (abs(c) != 1)
                s += Integer(abs(c)).get_str();
            s += prefix + d;
        }
        return s;
    };
    const int s = e.l / 4;
    if (s == 0)
        return join("");
    std::string g = latex_power("g_{\\R}", s);
    if (terms.size() == 1)
        return join(g);
    return g + "(" + join("") + ")";
}

std::string latex_linear(const IntVector& coeffs, const std::vector<std::string>& vars)
{
    std::string s;
    bool first = true;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        const Integer& c = coeffs[k];
        if (c == 0)
            continue;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (abs(c) != 1)
            s += Integer(abs(c)).get_str();
        s += latex_var(vars[k]);
        first = false;
    }
    return first ? "0" : s;
}

std::string latex_form(const ObstructionForm& f)
{
    // y is printed last
    IntVector c = f.coeffs;
    auto vars = variable_names(f.n, f.l, false);
    if (f.sphere_coeff) {
        c.push_back(*f.sphere_coeff);
        vars.push_back("y");
    }
    return latex_linear(c, vars);
}

std::string latex_class_terms(const std::map<int, IntVector>& classes, const std::vector<std::string>& vars)
{
    std::string s;
    for (const auto& [j, row] : classes) {
        std::vector<size_t> nz;
        for (size_t v = 0; v < row.size(); ++v)
            if (row[v] != 0)
                nz.push_back(v);
        if (nz.empty())
            continue;
        const std::string x = latex_power("x", PontryaginClassList::printed_degree(j));
        if (nz.size() == 1) {
            const Integer& c = row[nz[0]];
            s += (c < 0 ? "-" : "+") + (abs(c) != 1 ? Integer(abs(c)).get_str() : "") + latex_var(vars[nz[0]]) + x;
            continue;
        }
        bool all_neg = true;
        for (size_t v : nz)
            all_neg = all_neg && row[v] < 0;
        IntVector body(row.size());
        for (size_t v : nz)
            body[v] = all_neg ? Integer(-row[v]) : row[v];
        std::string inner = latex_linear(body, vars);
        std::string compact;
        for (char ch : inner)
            if (ch != ' ')
                compact += ch;
        s += std::string(all_neg ? "-" : "+") + "(" + compact + ")" + x;
    }
    return s;
}

std::string latex_congruence(const Congruence& c, const CongruenceSystem& cs)
{
    std::vector<size_t> nz;
    for (size_t k = c.coeffs.size(); k-- > 0;)
        if (c.coeffs[k] != 0)
            nz.push_back(k);
    auto sig = [&](size_t k) { return sigma_latex(2 * static_cast<int>(k) + cs.eps, cs.l); };
    std::string s;
    auto term = [&](const Rational& q, size_t k, bool leading) {
        std::string out;
        if (q < 0)
            out += "-";
        else if (!leading)
            out += "+";
        Rational m = abs(q);
        if (m.get_den() == 1)
            out += (m != 1 ? m.get_num().get_str() : "") + sig(k);
        else if (leading)
            out += "\\dfrac{" + m.get_num().get_str() + sig(k) + "}{" + m.get_den().get_str() + "}";
        else
            out += "\\dfrac{" + m.get_num().get_str() + "}{" + m.get_den().get_str() + "}" + sig(k);
        return out;
    };
    if (nz.empty())
        return "0\\equiv0\\mod" + c.modulus.get_str();
    s += term(c.coeffs[nz[0]], nz[0], true);
    std::vector<size_t> rest(nz.begin() + 1, nz.end());
    Integer den = 0;
    bool common = rest.size() >= 2;
    for (size_t k : rest) {
        const Integer& d = c.coeffs[k].get_den();
        if (den == 0)
            den = d;
        common = common && d == den;
    }
    common = common && den > 1;
    if (common) {
        // positive numerators first
        std::stable_partition(rest.begin(), rest.end(), [&](size_t k) { return c.coeffs[k] > 0; });
        bool all_neg = true;
        for (size_t k : rest)
            all_neg = all_neg && c.coeffs[k] < 0;
        std::string inner;
        for (size_t i = 0; i < rest.size(); ++i) {
            Integer num = c.coeffs[rest[i]].get_num();
            if (all_neg)
                num = -num;
            if (num < 0)
                inner += "-";
            else if (i > 0)
                inner += "+";
            inner += (abs(num) != 1 ? Integer(abs(num)).get_str() : "") + sig(rest[i]);
        }
        s += std::string(all_neg ? "-" : "+") + "\\dfrac{" + inner + "}{" + den.get_str() + "}";
    } else {
        for (auto it = rest.rbegin(); it != rest.rend(); ++it)
            s += term(c.coeffs[*it], *it, false);
    }
    return s + "\\equiv0\\mod" + c.modulus.get_str();
}

std::string latex_matrix(const IntMatrix& m)
{
    std::string s = "\\begin{pmatrix}\n";
    for (size_t i = 0; i < m.size(); ++i) {
        s += "    ";
        for (size_t j = 0; j < m[i].size(); ++j)
            s += (j ? " & " : "") + m[i][j].get_str();
        s += (i + 1 < m.size()) ? " \\\\\n" : "\n";
    }
    return s + "\\end{pmatrix}";
}

std::string render_ranks(int n, int k, Format f)
{
    RankBundle r = ranks(n, k);
    std::optional<int> sr;
    if (2 * n + k >= 5)
        sr = structure_rank(n, k);
    std::ostringstream os;
    switch (f) {
    case Format::json: {
        json j{{"n", n}, {"k", k}, {"t_prime", r.t_prime}, {"t", r.t}, {"eps", r.eps}, {"r_l", r.r_l}};
        j["structure_rank"] = sr ? json(*sr) : json(nullptr);
        return dump(j);
    }
    case Format::csv:
        os << "n,k,t_prime,t,eps,r_l,structure_rank\n"
           << n << "," << k << "," << r.t_prime << "," << r.t << "," << r.eps << "," << r.r_l << ","
           << (sr ? std::to_string(*sr) : "") << "\n";
        return os.str();
    case Format::latex:
        os << "$" << n << "$ & $" << k << "$ & $" << r.t_prime << "$ & $" << r.t << "$ & $" << r.eps
           << "$ & $" << r.r_l << "$ \\\\ \\hline\n";
        return os.str();
    case Format::text:
        os << "n=" << n << " k=" << k << "\n"
           << "t' = " << r.t_prime << "\n"
           << "t = " << r.t << "\n"
           << "eps = " << r.eps << "\n"
           << "r_l = " << r.r_l << "\n"
           << "structure rank = " << (sr ? std::to_string(*sr) : "undefined (2n+k < 5)") << "\n";
        return os.str();
    }
    return {};
}

std::string render_kerj(const GeneratorSet& g, Format f)
{
    std::ostringstream os;
    auto basis = basis_descriptors(g.n, g.l);
    switch (f) {
    case Format::json:
        return dump(to_json(g));
    case Format::csv:
        os << "n,l,generator,basis_index,basis,coeff\n";
        for (size_t i = 0; i < g.generators.size(); ++i)
            for (size_t k = 0; k < basis.size(); ++k)
                os << g.n << "," << g.l << "," << i + 1 << "," << k + 1 << "," << csv_escape(basis[k].display())
                   << "," << g.generators[i].coords[k].get_str() << "\n";
        return os.str();
    case Format::latex: {
        os << space_label(g.n, g.l) << " & \\thead{";
        for (size_t i = 0; i < g.generators.size(); ++i) {
            os << (i ? " \\\\ " : "") << "$" << latex_subscript("\\xi", static_cast<int>(i) + 1) << "=" << latex_element(g.generators[i]) << "$";
        }
        os << "} \\\\ \\hline\n";
        return os.str();
    }
    case Format::text:
        for (size_t i = 0; i < g.generators.size(); ++i)
            os << "ξ_" << i + 1 << " = " << display_element(g.generators[i]) << "\n";
        return os.str();
    }
    return {};
}

namespace {

void class_text(std::ostringstream& os, const PontryaginClassList& pc)
{
    auto vars = variable_names(pc.n, pc.l, pc.has_sphere);
    os << "p = 1";
    for (const auto& [j, row] : pc.classes)
        os << " + (" << plain_linear(row, vars) << ")·x^" << PontryaginClassList::printed_degree(j);
    os << "\n";
}

void class_csv(std::ostringstream& os, const PontryaginClassList& pc)
{
    auto vars = variable_names(pc.n, pc.l, pc.has_sphere);
    for (const auto& [j, row] : pc.classes)
        for (size_t v = 0; v < row.size(); ++v)
            if (row[v] != 0)
                os << pc.n << "," << pc.l << ",pontryagin," << PontryaginClassList::printed_degree(j) << ","
                   << vars[v] << "," << row[v].get_str() << "\n";
}

std::string class_latex(const PontryaginClassList& pc)
{
    return "1" + latex_class_terms(pc.classes, variable_names(pc.n, pc.l, pc.has_sphere));
}

}  // namespace

std::string render_obstruction(const ObstructionForm& form, const PontryaginClassList& pc, Format f)
{
    std::ostringstream os;
    switch (f) {
    case Format::json:
        return dump(json{{"n", form.n}, {"l", form.l}, {"form", to_json(form)}, {"pontryagin", to_json(pc)}});
    case Format::csv: {
        os << "n,l,kind,deg,variable,coeff\n";
        auto vars = variable_names(form.n, form.l, true);
        IntVector row = form.row();
        for (size_t v = 0; v < row.size(); ++v)
            os << form.n << "," << form.l << ",form,," << vars[v] << "," << row[v].get_str() << "\n";
        class_csv(os, pc);
        return os.str();
    }
    case Format::latex:
        os << "$" << form.n << "$ & \\thead{$" << class_latex(pc) << "$} & \\thead{$" << latex_form(form)
           << "$} \\\\ \\hline\n";
        return os.str();
    case Format::text:
        os << "σ = " << plain_linear(form.row(), variable_names(form.n, form.l, true)) << "\n";
        class_text(os, pc);
        return os.str();
    }
    return {};
}

std::string render_pontryagin(const PontryaginClassList& pc, Format f)
{
    std::ostringstream os;
    switch (f) {
    case Format::json:
        return dump(json{{"n", pc.n}, {"l", pc.l}, {"pontryagin", to_json(pc)}});
    case Format::csv:
        os << "n,l,kind,deg,variable,coeff\n";
        class_csv(os, pc);
        return os.str();
    case Format::latex:
        os << "$" << pc.n << "$ & \\thead{$" << class_latex(pc) << "$} \\\\ \\hline\n";
        return os.str();
    case Format::text:
        class_text(os, pc);
        return os.str();
    }
    return {};
}

namespace {

std::string equation_latex(const IntVector& form_row, bool sphere)
{
    // m_1, m_2, ... are x, y, z, w; the sphere coordinate is a
    static const char* letters[] = {"x", "y", "z", "w", "u", "v"};
    std::vector<std::string> vars;
    IntVector c;
    const size_t first = sphere ? 1 : 0;
    for (size_t i = first; i < form_row.size(); ++i) {
        size_t idx = i - first;
        vars.push_back(idx < 6 ? letters[idx] : "m" + std::to_string(idx + 1));
        c.push_back(form_row[i]);
    }
    if (sphere) {
        vars.push_back("a");
        c.push_back(form_row[0]);
    }
    std::string s = latex_linear(c, vars);
    std::string compact;
    for (char ch : s)
        if (ch != ' ')
            compact += ch;
    return compact + "=0";
}

}  // namespace

std::string render_forgetful(const ForgetfulMatrix& fm, Format f)
{
    std::ostringstream os;
    auto dump_matrix = [&](const char* name, const IntMatrix& m) {
        os << name << ":\n";
        for (const auto& r : m) {
            os << "  [";
            for (size_t j = 0; j < r.size(); ++j)
                os << (j ? ", " : "") << r[j].get_str();
            os << "]\n";
        }
    };
    switch (f) {
    case Format::json:
        return dump(to_json(fm));
    case Format::csv: {
        os << "n,l,matrix,row,col,value\n";
        auto emit = [&](const char* name, const IntMatrix& m) {
            for (size_t i = 0; i < m.size(); ++i)
                for (size_t j = 0; j < m[i].size(); ++j)
                    os << fm.n << "," << fm.l << "," << name << "," << i + 1 << "," << j + 1 << ","
                       << m[i][j].get_str() << "\n";
        };
        emit("a_prime", fm.a_prime);
        emit("p", fm.p);
        emit("a", fm.a);
        return os.str();
    }
    case Format::latex: {
        const std::string pname = "P_{" + std::to_string(fm.l) + "," + std::to_string(fm.n) + "}";
        os << "$" << latex_matrix(fm.a_prime) << "\\cdot " << pname << "$\n";
        if ((fm.n + fm.l) % 2 == 0) {
            ObstructionForm top = obstruction_form(fm.n, fm.l);
            os << "% The columns of $" << pname << "$ generate the solutions of $"
               << equation_latex(top.row(), top.sphere_coeff.has_value()) << "$ over the integers.\n";
        }
        return os.str();
    }
    case Format::text:
        os << "columns: ";
        for (size_t j = 0; j < fm.columns.size(); ++j)
            os << (j ? ", " : "") << fm.columns[j];
        os << "\nrows: ";
        for (size_t j = 0; j < fm.rows.size(); ++j)
            os << (j ? ", " : "") << fm.rows[j];
        os << "\n";
        dump_matrix("A'", fm.a_prime);
        dump_matrix("P", fm.p);
        dump_matrix("A", fm.a);
        os << "B, C: unknown (torsion blocks not computed)\n";
        for (size_t i = 0; i < fm.alternatives.size(); ++i) {
            os << "index-2 alternative " << i + 1 << "\n";
            dump_matrix("P", fm.alternatives[i].first);
            dump_matrix("A", fm.alternatives[i].second);
        }
        return os.str();
    }
    return {};
}

std::string render_congruences(const CongruenceSystem& cs, Format f)
{
    std::ostringstream os;
    const std::vector<Congruence> rows = cs.all_rows();
    switch (f) {
    case Format::json:
        return dump(to_json(cs));
    case Format::csv:
        os << "n,l,row,invariant,coeff,modulus\n";
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t k = 0; k < rows[r].coeffs.size(); ++k)
                if (rows[r].coeffs[k] != 0)
                    os << cs.n << "," << cs.l << "," << r + 1 << "," << csv_escape(cs.invariants[k]) << ","
                       << rows[r].coeffs[k].get_str() << "," << rows[r].modulus.get_str() << "\n";
        return os.str();
    case Format::latex: {
        os << "\\thead{$" << latex_power("X", 2 * (cs.n + cs.l)) << "\\simeq_{\\partial}" << latex_power("\\cp", cs.n)
           << "\\times " << latex_power("D", 2 * cs.l) << "$} & \\thead{$";
        // the first two rows share a line
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == 1)
                os << ", ";
            else if (r > 1)
                os << "$ \\\\ $";
            os << latex_congruence(rows[r], cs);
        }
        os << "$} \\\\ \\hline\n";
        return os.str();
    }
    case Format::text:
        for (const auto& r : rows)
            os << plain_linear(r.coeffs, cs.invariants) << " ≡ 0 mod " << r.modulus.get_str() << "\n";
        return os.str();
    }
    return {};
}

std::string render_check(int n, int l, const CheckResult& r, Format f)
{
    std::ostringstream os;
    const std::string v = to_string(r.verdict);
    switch (f) {
    case Format::json: {
        json j{{"n", n}, {"l", l}, {"verdict", v}};
        if (r.verdict == Verdict::fail)
            j["row"] = r.failed_row;
        return dump(j);
    }
    case Format::csv:
        os << "n,l,verdict,row\n" << n << "," << l << "," << v << ","
           << (r.verdict == Verdict::fail ? std::to_string(r.failed_row) : "") << "\n";
        return os.str();
    case Format::latex:
        os << "\\texttt{" << (r.verdict == Verdict::fail ? "fail" : v) << "}\n";
        return os.str();
    case Format::text:
        if (r.verdict == Verdict::fail)
            os << "fail(row " << r.failed_row << ")\n";
        else
            os << v << "\n";
        return os.str();
    }
    return {};
}

}  // namespace cpsurgery
