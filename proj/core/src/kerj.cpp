#include "cpsurgery/kerj.hpp"

#include "cpsurgery/errors.hpp"

#include <algorithm>

namespace cpsurgery {

RationalMatrix::RationalMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r * c)) {}

std::string to_string(SystemVariant v)
{
    switch (v) {
    case SystemVariant::m1:
        return "m1";
    case SystemVariant::m2:
        return "m2";
    case SystemVariant::m3:
        return "m3";
    }
    return "?";
}

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::direct:
        return "direct";
    case Provenance::restricted_from_n_plus_1:
        return "restricted_from_n_plus_1";
    case Provenance::restricted_from_tower:
        return "restricted_from_tower";
    }
    return "?";
}

KernelSystem build_system(int n, int l)
{
    if (l < 1)
        throw ValidationError("build_system needs l >= 1; use membership_l0 for l = 0");
    if (n < 0)
        throw ValidationError("n must be non-negative");
    KernelSystem sys;
    sys.r = ranks(n, 2 * l).r_l;
    if (l % 2 == 0)
        sys.variant = SystemVariant::m1;
    else
        sys.variant = has_half_top(n, l) ? SystemVariant::m3 : SystemVariant::m2;
    sys.padding = has_torsion_top(n, l) ? 1 : 0;
    const int r = sys.r;
    const int block = r + sys.padding;
    sys.matrix = RationalMatrix(r, 2 * block);

    const int order = 2 * r + 2;
    auto basis = basis_descriptors(n, l, false);
    std::vector<TruncatedSeries> ph;
    for (const auto& d : basis)
        ph.push_back(descriptor_character(d, n, l, order));

    for (int i = 1; i <= r; ++i) {
        const int deg = (l % 2 == 0) ? 2 * i : 2 * i - 1;
        const Rational inv_a = alpha(2 * (l / 2 + i)) / 2;  // 1/a_i
        for (int k = 0; k < r; ++k) {
            const Rational& v = ph[static_cast<size_t>(k)][deg];
            sys.matrix.at(i - 1, k) = inv_a * v;
            sys.matrix.at(i - 1, block + k) = -v;
        }
    }
    return sys;
}

RationalMatrix solve_right_block(const RationalMatrix& m, int r)
{
    if (m.cols % 2 != 0 || m.rows != r || m.cols < 2 * r)
        throw ValidationError("matrix shape does not match r");
    const int block = m.cols / 2;
    for (int i = 0; i < r; ++i)
        for (int k = r; k < block; ++k)
            if (m.at(i, k) != 0 || m.at(i, block + k) != 0)
                throw ValidationError("padding columns must be zero");

    // Gauss-Jordan on [R | -L]
    std::vector<RatVector> aug(static_cast<size_t>(r), RatVector(static_cast<size_t>(2 * r)));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            aug[static_cast<size_t>(i)][static_cast<size_t>(k)] = m.at(i, block + k);
            aug[static_cast<size_t>(i)][static_cast<size_t>(r + k)] = -m.at(i, k);
        }
    for (int c = 0; c < r; ++c) {
        int p = c;
        while (p < r && aug[static_cast<size_t>(p)][static_cast<size_t>(c)] == 0)
            ++p;
        if (p == r)
            throw ConsistencyError("right block of the kernel system is singular");
        std::swap(aug[static_cast<size_t>(p)], aug[static_cast<size_t>(c)]);
        RatVector& piv = aug[static_cast<size_t>(c)];
        Rational inv = 1 / piv[static_cast<size_t>(c)];
        for (auto& v : piv)
            v *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == c)
                continue;
            RatVector& row = aug[static_cast<size_t>(i)];
            Rational f = row[static_cast<size_t>(c)];
            if (f == 0)
                continue;
            for (size_t k = 0; k < row.size(); ++k)
                row[k] -= f * piv[k];
        }
    }
    RationalMatrix t(r, r);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            t.at(i, k) = aug[static_cast<size_t>(i)][static_cast<size_t>(r + k)];
    return t;
}

IntegerLattice integer_kernel_projected(const RationalMatrix& m, int r)
{
    IntegerLattice L;
    L.ambient_rank = r;
    if (r == 0)
        return L;
    RationalMatrix t = solve_right_block(m, r);

    // y = T x is integral iff N x = 0 mod d, with N = d T: kernel of [N | -d I]
    Integer d = 1;
    for (const auto& q : t.entries)
        d = lcm(d, q.get_den());
    IntMatrix a(static_cast<size_t>(r), IntVector(static_cast<size_t>(2 * r)));
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < r; ++k) {
            Rational v = t.at(i, k) * d;
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = v.get_num();
        }
        a[static_cast<size_t>(i)][static_cast<size_t>(r + i)] = -d;
    }
    IntColumns ker = integer_kernel(a, 2 * r);
    IntColumns proj;
    for (auto& c : ker)
        proj.emplace_back(c.begin(), c.begin() + r);
    L.basis = hnf_columns(std::move(proj), r);
    if (L.rank() != r)
        throw ConsistencyError("kernel lattice is not of full rank");
    return L;
}

IntegerLattice kerj_lattice(int n, int l)
{
    if (l < 1)
        throw ValidationError("kerj_lattice needs l >= 1");
    const int t = t_prime(n, 2 * l);
    if (t == 0)
        return IntegerLattice{0, {}};
    if (has_torsion_top(n, l)) {
        IntegerLattice up = kerj_lattice(n + 1, l);
        IntColumns cut;
        for (const auto& g : up.basis)
            cut.emplace_back(g.begin(), g.begin() + t);
        return IntegerLattice::from_generators(cut, t);
    }
    KernelSystem sys = build_system(n, l);
    return integer_kernel_projected(sys.matrix, sys.r);
}

int default_tower_top(int n, int l)
{
    if (l >= 1 && l <= 3)
        return std::max(n, l % 2 == 1 ? 17 : 18);
    return n;
}

IntColumns GeneratorSet::columns() const
{
    IntColumns cols;
    for (const auto& g : generators)
        cols.push_back(g.coords);
    return cols;
}

GeneratorSet canonical_generators(int n, int l, const GeneratorOptions& opts)
{
    if (l < 1)
        throw ValidationError("generators are only synthesized for l >= 1; use membership_l0 for l = 0");
    if (n < 0)
        throw ValidationError("n must be non-negative");
    GeneratorSet gs;
    gs.n = n;
    gs.l = l;
    gs.source_n = n;
    const int t = t_prime(n, 2 * l);
    if (t == 0)
        return gs;

    int top = opts.tower_top ? *opts.tower_top : default_tower_top(n, l);
    int N = std::max(top, n);
    if (has_torsion_top(N, l))
        ++N;
    gs.source_n = N;
    if (N == n)
        gs.provenance = Provenance::direct;
    else if (N == n + 1 && has_torsion_top(n, l))
        gs.provenance = Provenance::restricted_from_n_plus_1;
    else
        gs.provenance = Provenance::restricted_from_tower;

    KernelSystem sys = build_system(N, l);
    IntegerLattice H = integer_kernel_projected(sys.matrix, sys.r);
    const bool half_top = has_half_top(n, l) && N != n;
    const int restricted = half_top ? t - 1 : t;
    for (int j = 0; j < restricted; ++j) {
        KOElement e;
        e.n = N;
        e.l = l;
        e.coords = H.basis[static_cast<size_t>(j)];
        gs.generators.push_back(restrict_element(e, n));
    }
    if (half_top) {
        // sigma/tau: restriction only reaches the index-2 sublattice, so the
        // last generator is the level-n pivot itself
        IntegerLattice own = kerj_lattice(n, l);
        KOElement e;
        e.n = n;
        e.l = l;
        e.coords = own.basis.back();
        gs.generators.push_back(e);
    }
    return gs;
}

MembershipResult membership_l0(const KOElement& xi, int n)
{
    if (xi.l != 0 || xi.n != n)
        throw ValidationError("membership_l0 takes an element of KO~(CP^n) with l = 0");
    if (xi.with_sphere)
        throw ValidationError("no sphere summand for l = 0");
    MembershipResult res;
    res.v_membership_only = (n % 4 == 1 && n > 1);
    const int t = t_prime(n, 0);
    if (t == 0) {
        res.member = true;
        return res;
    }
    TruncatedSeries ph = pontryagin_character(xi, std::max(2 * n, 2)).truncated(n);

    TruncatedSeries lhs(n, 0);
    for (int s = 1; 2 * s <= n; ++s)
        lhs.set(2 * s, alpha(2 * s) / 2 * ph[2 * s]);

    // log(1 + Y) = lhs, solved one degree at a time
    TruncatedSeries y(n, 0);
    for (int d = 2; d <= n; d += 2) {
        TruncatedSeries one_plus = y;
        one_plus.set(0, 1);
        TruncatedSeries lg = log(one_plus);
        y.set(d, y[d] + lhs[d] - lg[d]);
    }

    TruncatedSeries rest = y;
    TruncatedSeries h = series_h(n);
    TruncatedSeries hk = TruncatedSeries::constant(1, n, 0);
    res.member = true;
    for (int k = 1; k <= t; ++k) {
        hk = multiply(hk, h);
        Rational c = rest[2 * k];
        res.beta.push_back(c);
        rest -= hk * c;
        if (!is_integer(c))
            res.member = false;
    }
    if (!rest.is_zero())
        throw ConsistencyError("beta does not lie in the span of mu_0 powers");
    return res;
}

}  // namespace cpsurgery
