#include "cpsurgery/forgetful.hpp"

#include "cpsurgery/errors.hpp"

namespace cpsurgery {

namespace {

std::string sigma_label(int m, int l)
{
    return "σ̄_{" + std::to_string(m) + "," + std::to_string(2 * l) + "}";
}

IntMatrix lattice_matrix(const IntegerLattice& L)
{
    return transpose(L.basis, L.ambient_rank);
}

}  // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::sufficient_pass:
        return "sufficient_pass";
    case Verdict::smoothable_necessary_pass:
        return "smoothable_necessary_pass";
    case Verdict::fail:
        return "fail";
    }
    return "?";
}

ForgetfulMatrix matrix_bundle(int n, int l, RootsMode mode, const GeneratorOptions& opts)
{
    if (l < 1 || n < 0)
        throw ValidationError("matrix_bundle needs l >= 1 and n >= 0");
    if (n + l < 3)
        throw ValidationError("matrix_bundle needs 2(n+l) >= 6");
    ForgetfulMatrix fm;
    fm.n = n;
    fm.l = l;
    const int t = ranks(n, 2 * l).t;
    const int eps = l % 2;
    if (l % 2 == 0)
        fm.columns.push_back("y");
    for (int i = 1; i <= t_prime(n, 2 * l); ++i)
        fm.columns.push_back("m" + std::to_string(i));
    const int ncols = static_cast<int>(fm.columns.size());
    const bool even = (n + l) % 2 == 0;
    if (ncols != t + (even ? 1 : 0))
        throw ConsistencyError("column count of A' does not match the structure rank");

    for (int m = 0; m < t; ++m) {
        const int nm = 2 * m + eps;
        ObstructionForm f = obstruction_form(nm, l, canonical_generators(nm, l, opts));
        IntVector row = f.row();
        if (static_cast<int>(row.size()) > ncols)
            throw ConsistencyError("row of A' longer than the column count");
        row.resize(static_cast<size_t>(ncols));
        for (int i = m + 1; i < ncols; ++i)
            if (row[static_cast<size_t>(i)] != 0)
                throw ConsistencyError("A' is not lower triangular");
        fm.a_prime.push_back(std::move(row));
        fm.rows.push_back(sigma_label(nm, l));
    }

    if (even) {
        ObstructionForm top = obstruction_form(n, l, canonical_generators(n, l, opts));
        fm.p = lattice_matrix(roots_lattice(n, l, top).front());
    } else {
        auto lattices = roots_lattice(n, l, ObstructionForm{}, mode);
        fm.p = lattice_matrix(lattices.front());
        for (size_t i = 1; i < lattices.size(); ++i) {
            IntMatrix p = lattice_matrix(lattices[i]);
            fm.alternatives.emplace_back(p, multiply(fm.a_prime, p));
        }
    }
    fm.a = multiply(fm.a_prime, fm.p);
    return fm;
}

CongruenceSystem congruences_of(const ForgetfulMatrix& fm, const ObstructionForm& top)
{
    CongruenceSystem cs;
    cs.n = fm.n;
    cs.l = fm.l;
    cs.eps = fm.l % 2;
    cs.invariants = fm.rows;
    const size_t t = fm.a_prime.size();

    // u_i as a rational combination of sigma_0 .. sigma_{t-1}
    std::vector<RatVector> u;
    for (size_t i = 0; i < t; ++i) {
        const Integer& diag = fm.a_prime[i][i];
        if (diag == 0)
            throw ConsistencyError("zero diagonal entry in A' at row " + std::to_string(i + 1));
        RatVector e(t);
        e[i] = 1;
        for (size_t j = 0; j < i; ++j) {
            const Integer& a = fm.a_prime[i][j];
            if (a == 0)
                continue;
            for (size_t k = 0; k < t; ++k)
                e[k] -= Rational(a) * u[j][k];
        }
        Congruence c;
        c.coeffs = e;
        c.modulus = abs(diag);
        c.label = fm.rows[i];
        cs.rows.push_back(c);
        for (auto& v : e)
            v /= diag;
        u.push_back(std::move(e));
    }

    if ((fm.n + fm.l) % 2 == 0) {
        IntVector f = top.row();
        if (f.size() != t + 1)
            throw ConsistencyError("top form has the wrong number of variables");
        if (f.back() == 0)
            throw ConsistencyError("top form has zero coefficient on the last generator");
        RatVector e(t);
        for (size_t i = 0; i < t; ++i)
            for (size_t k = 0; k < t; ++k)
                e[k] += Rational(f[i]) * u[i][k];
        for (size_t k = t; k-- > 0;) {
            if (e[k] == 0)
                continue;
            if (e[k] < 0)
                for (auto& v : e)
                    v = -v;
            break;
        }
        Congruence c;
        c.coeffs = e;
        c.modulus = abs(f.back());
        c.label = "roots";
        cs.roots = c;
    }
    return cs;
}

CongruenceSystem congruences(int n, int l, const GeneratorOptions& opts)
{
    ForgetfulMatrix fm = matrix_bundle(n, l, RootsMode::identity, opts);
    ObstructionForm top;
    if ((n + l) % 2 == 0)
        top = obstruction_form(n, l, canonical_generators(n, l, opts));
    return congruences_of(fm, top);
}

namespace {

bool congruence_holds(const Congruence& c, const IntVector& values)
{
    Rational v = 0;
    for (size_t k = 0; k < values.size() && k < c.coeffs.size(); ++k)
        v += c.coeffs[k] * values[k];
    v /= c.modulus;
    return is_integer(v);
}

bool all_hold(const std::vector<Congruence>& rows, const IntVector& values, int* failed_row)
{
    for (size_t r = 0; r < rows.size(); ++r)
        if (!congruence_holds(rows[r], values)) {
            if (failed_row)
                *failed_row = static_cast<int>(r) + 1;
            return false;
        }
    return true;
}

}  // namespace

std::vector<Congruence> CongruenceSystem::all_rows() const
{
    std::vector<Congruence> out = rows;
    if (roots)
        out.push_back(*roots);
    return out;
}

bool CongruenceSystem::holds(const IntVector& values, int* failed_row) const
{
    return all_hold(rows, values, failed_row);
}

bool CongruenceSystem::holds_all(const IntVector& values, int* failed_row) const
{
    return all_hold(all_rows(), values, failed_row);
}

CheckResult check_invariants(const IntVector& values, int n, int l, bool divisible_by_two)
{
    const int t = ranks(n, 2 * l).t;
    if (static_cast<int>(values.size()) != t)
        throw ValidationError("expected " + std::to_string(t) + " splitting invariants, got " +
                              std::to_string(values.size()));
    CongruenceSystem cs = congruences(n, l);
    CheckResult res;
    int row = 0;
    if (!cs.holds_all(values, &row)) {
        res.verdict = Verdict::fail;
        res.failed_row = row;
        return res;
    }
    bool all_zero = true;
    for (const auto& v : values)
        all_zero = all_zero && v == 0;
    res.verdict = (divisible_by_two || all_zero) ? Verdict::sufficient_pass : Verdict::smoothable_necessary_pass;
    return res;
}

}  // namespace cpsurgery
