#include "cpsurgery/lattice.hpp"

#include "cpsurgery/errors.hpp"

#include <algorithm>

namespace cpsurgery {

namespace {

bool is_zero_vector(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

void axpy(IntVector& c, const Integer& q, const IntVector& a)
{
    for (size_t k = 0; k < c.size(); ++k)
        c[k] -= q * a[k];
}

// Euclid on entry i until at most one column of cols has it nonzero.
// Returns the survivor index or -1; columns that reached zero stay in place.
long gcd_reduce(IntColumns& cols, size_t i)
{
    for (;;) {
        long best = -1;
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j][i] == 0)
                continue;
            if (best < 0 || abs(cols[j][i]) < abs(cols[static_cast<size_t>(best)][i]))
                best = static_cast<long>(j);
        }
        if (best < 0)
            return -1;
        const IntVector& a = cols[static_cast<size_t>(best)];
        bool other = false;
        for (size_t j = 0; j < cols.size(); ++j) {
            if (static_cast<long>(j) == best || cols[j][i] == 0)
                continue;
            Integer q;
            mpz_tdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), a[i].get_mpz_t());
            axpy(cols[j], q, a);
            other = other || cols[j][i] != 0;
        }
        if (!other)
            return best;
    }
}

}  // namespace

IntColumns hnf_columns(IntColumns cols, int ambient_rank)
{
    const size_t r = static_cast<size_t>(ambient_rank);
    for (const auto& c : cols)
        if (c.size() != r)
            throw ValidationError("generator length differs from the ambient rank");
    cols.erase(std::remove_if(cols.begin(), cols.end(), is_zero_vector), cols.end());

    std::vector<std::pair<size_t, IntVector>> pivots;
    for (size_t i = 0; i < r && !cols.empty(); ++i) {
        long p = gcd_reduce(cols, i);
        if (p < 0)
            continue;
        IntVector c = std::move(cols[static_cast<size_t>(p)]);
        cols.erase(cols.begin() + p);
        if (c[i] < 0)
            for (auto& z : c)
                z = -z;
        pivots.emplace_back(i, std::move(c));
        cols.erase(std::remove_if(cols.begin(), cols.end(), is_zero_vector), cols.end());
    }
    for (size_t idx = 0; idx < pivots.size(); ++idx) {
        const size_t i = pivots[idx].first;
        const IntVector& g = pivots[idx].second;
        for (size_t jdx = 0; jdx < idx; ++jdx) {
            IntVector& h = pivots[jdx].second;
            Integer q = floor_div(h[i], g[i]);
            if (q != 0)
                axpy(h, q, g);
        }
    }
    IntColumns out;
    out.reserve(pivots.size());
    for (auto& [row, c] : pivots)
        out.push_back(std::move(c));
    return out;
}

IntColumns integer_kernel(const IntMatrix& a, int ncols)
{
    const size_t rows = a.size();
    const size_t nc = static_cast<size_t>(ncols);
    IntColumns cols(nc, IntVector(rows + nc));
    for (size_t j = 0; j < nc; ++j) {
        for (size_t i = 0; i < rows; ++i) {
            if (a[i].size() != nc)
                throw ValidationError("ragged matrix");
            cols[j][i] = a[i][j];
        }
        cols[j][rows + j] = 1;
    }
    for (size_t i = 0; i < rows; ++i) {
        long p = gcd_reduce(cols, i);
        if (p >= 0)
            cols.erase(cols.begin() + p);  // a pivot column can never enter the kernel
    }
    IntColumns ker;
    ker.reserve(cols.size());
    for (auto& c : cols)
        ker.emplace_back(c.begin() + static_cast<long>(rows), c.end());
    return hnf_columns(std::move(ker), ncols);
}

IntegerLattice IntegerLattice::from_generators(const IntColumns& gens, int ambient_rank)
{
    IntegerLattice L;
    L.ambient_rank = ambient_rank;
    L.basis = hnf_columns(gens, ambient_rank);
    return L;
}

IntegerLattice IntegerLattice::identity(int r)
{
    IntegerLattice L;
    L.ambient_rank = r;
    for (int j = 0; j < r; ++j) {
        IntVector e(static_cast<size_t>(r));
        e[static_cast<size_t>(j)] = 1;
        L.basis.push_back(std::move(e));
    }
    return L;
}

std::vector<int> IntegerLattice::pivot_rows() const
{
    std::vector<int> rows;
    for (const auto& g : basis) {
        auto it = std::find_if(g.begin(), g.end(), [](const Integer& z) { return z != 0; });
        rows.push_back(static_cast<int>(it - g.begin()));
    }
    return rows;
}

bool IntegerLattice::contains(const IntVector& v) const
{
    if (static_cast<int>(v.size()) != ambient_rank)
        return false;
    IntVector w = v;
    auto rows = pivot_rows();
    for (size_t j = 0; j < basis.size(); ++j) {
        const size_t p = static_cast<size_t>(rows[j]);
        if (w[p] == 0)
            continue;
        if (!mpz_divisible_p(w[p].get_mpz_t(), basis[j][p].get_mpz_t()))
            return false;
        Integer q = w[p] / basis[j][p];
        axpy(w, q, basis[j]);
    }
    return is_zero_vector(w);
}

bool IntegerLattice::contains_all(const IntColumns& gens) const
{
    return std::all_of(gens.begin(), gens.end(), [this](const IntVector& g) { return contains(g); });
}

Integer IntegerLattice::index() const
{
    if (rank() != ambient_rank)
        return 0;
    Integer d = 1;
    for (size_t j = 0; j < basis.size(); ++j)
        d *= basis[j][j];
    return d;
}

bool same_span(const IntColumns& a, const IntColumns& b, int ambient_rank)
{
    return hnf_columns(a, ambient_rank) == hnf_columns(b, ambient_rank);
}

IntMatrix transpose(const IntColumns& cols, int ambient_rank)
{
    IntMatrix m(static_cast<size_t>(ambient_rank), IntVector(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < static_cast<size_t>(ambient_rank); ++i)
            m[i][j] = cols[j][i];
    return m;
}

IntColumns columns_of(const IntMatrix& m)
{
    if (m.empty())
        return {};
    IntColumns cols(m[0].size(), IntVector(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            cols[j][i] = m[i][j];
    return cols;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const size_t inner = b.size();
    const size_t nc = b.empty() ? 0 : b[0].size();
    IntMatrix c(a.size(), IntVector(nc));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner)
            throw ValidationError("matrix dimensions do not match");
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (size_t j = 0; j < nc; ++j)
                c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

IntMatrix identity_matrix(int r)
{
    IntMatrix m(static_cast<size_t>(r), IntVector(static_cast<size_t>(r)));
    for (int i = 0; i < r; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

}  // namespace cpsurgery
