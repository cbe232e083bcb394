#include "cpsurgery/obstruction.hpp"

#include "cpsurgery/errors.hpp"

#include <algorithm>

namespace cpsurgery {

namespace {

// (-1)^j 2^{2j} (2^{2j-1} - 1) B_j / 2j
Rational signature_weight(int j)
{
    Rational w = Rational(pow2(static_cast<unsigned>(2 * j)) * (pow2(static_cast<unsigned>(2 * j - 1)) - 1)) *
                 bernoulli(j) / (2 * j);
    return (j % 2 == 0) ? w : Rational(-w);
}

int variable_count(int n, int l)
{
    return t_prime(n, 2 * l) + (l % 2 == 0 ? 1 : 0);
}

}  // namespace

Integer ObstructionForm::evaluate(const IntVector& s, const Integer& y) const
{
    if (s.size() != coeffs.size())
        throw ValidationError("form evaluated on a vector of the wrong length");
    Integer v = sphere_coeff ? *sphere_coeff * y : Integer(0);
    for (size_t i = 0; i < s.size(); ++i)
        v += coeffs[i] * s[i];
    return v;
}

IntVector ObstructionForm::row() const
{
    IntVector r;
    if (sphere_coeff)
        r.push_back(*sphere_coeff);
    r.insert(r.end(), coeffs.begin(), coeffs.end());
    return r;
}

Rational obstruction_value(const KOElement& e)
{
    const int n = e.n, l = e.l;
    if ((n + l) % 2 != 0)
        throw ValidationError("signature obstruction needs n + l even");
    const int order = default_order(n, l);
    TruncatedSeries ph = pontryagin_character(e, order);
    TruncatedSeries lg = series_l_genus_cpn(n, order);
    Rational total = 0;
    for (int j = 1; j <= (n + l) / 2; ++j) {
        const int xp = 2 * j - l;
        if (xp < 0 || ph[xp] == 0)
            continue;
        total += signature_weight(j) * ph[xp] * lg[n + l - 2 * j];
    }
    return total / 8;
}

ObstructionForm obstruction_form(int n, int l, const GeneratorSet& gens)
{
    if ((n + l) % 2 != 0)
        throw ValidationError("obstruction form is only defined for n + l even");
    if (l < 1)
        throw ValidationError("obstruction form needs l >= 1");
    if (gens.n != n || gens.l != l)
        throw ValidationError("generator set is for a different (n, l)");
    ObstructionForm f;
    f.n = n;
    f.l = l;
    for (const auto& g : gens.generators) {
        Rational v = obstruction_value(g);
        if (!is_integer(v))
            throw ConsistencyError("non-integral obstruction coefficient " + to_string(v));
        f.coeffs.push_back(v.get_num());
    }
    if (l % 2 == 0) {
        Rational v = obstruction_value(KOElement::unit(n, l, 0, true));
        if (!is_integer(v))
            throw ConsistencyError("non-integral sphere coefficient " + to_string(v));
        f.sphere_coeff = v.get_num();
    }
    return f;
}

ObstructionForm obstruction_form(int n, int l)
{
    return obstruction_form(n, l, canonical_generators(n, l));
}

std::map<int, Rational> pontryagin_classes(const KOElement& e)
{
    const int n = e.n, l = e.l;
    TruncatedSeries ph = pontryagin_character(e, std::max(default_order(n, l), 2));
    std::map<int, Rational> out;
    if (l >= 1) {
        for (int j = 1; 2 * j - l <= n; ++j) {
            const int xp = 2 * j - l;
            if (xp < 0 || ph[xp] == 0)
                continue;
            Rational p = Rational(factorial(static_cast<unsigned>(2 * j - 1))) * ph[xp];
            out[j] = (j % 2 == 1) ? p : Rational(-p);
        }
        return out;
    }
    // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} P_i with P_i = (2i)!/2 [ph]_{2i}
    RatVector pw(1), el(1);
    el[0] = 1;
    pw[0] = 0;
    for (int k = 1; 2 * k <= n; ++k) {
        pw.push_back(Rational(factorial(static_cast<unsigned>(2 * k))) / 2 * ph[2 * k]);
        Rational s = 0;
        for (int i = 1; i <= k; ++i) {
            Rational term = el[static_cast<size_t>(k - i)] * pw[static_cast<size_t>(i)];
            s += (i % 2 == 1) ? term : Rational(-term);
        }
        el.push_back(s / k);
        if (el.back() != 0)
            out[k] = el.back();
    }
    return out;
}

PontryaginClassList total_pontryagin(const GeneratorSet& gens, bool include_sphere)
{
    if (gens.l < 1)
        throw ValidationError("total_pontryagin needs l >= 1");
    PontryaginClassList pc;
    pc.n = gens.n;
    pc.l = gens.l;
    pc.has_sphere = include_sphere && gens.l % 2 == 0;
    std::vector<KOElement> elems;
    if (pc.has_sphere)
        elems.push_back(KOElement::unit(gens.n, gens.l, 0, true));
    for (const auto& g : gens.generators)
        elems.push_back(g);
    for (size_t v = 0; v < elems.size(); ++v) {
        for (const auto& [j, p] : pontryagin_classes(elems[v])) {
            if (!is_integer(p))
                throw ConsistencyError("non-integral Pontryagin class p_" + std::to_string(j));
            auto& row = pc.classes[j];
            row.resize(elems.size());
            row[v] = p.get_num();
        }
    }
    return pc;
}

IntegerLattice roots_of(const IntVector& coeffs)
{
    const int r = static_cast<int>(coeffs.size());
    IntegerLattice L;
    L.ambient_rank = r;
    L.basis = integer_kernel(IntMatrix{coeffs}, r);
    return L;
}

std::vector<IntegerLattice> roots_lattice(int n, int l, const ObstructionForm& form, RootsMode mode)
{
    if ((n + l) % 2 == 0)
        return {roots_of(form.row())};
    const int r = variable_count(n, l);
    std::vector<IntegerLattice> out{IntegerLattice::identity(r)};
    if (mode == RootsMode::index2) {
        if (r > 16)
            throw ValidationError("index-2 enumeration is limited to rank 16");
        for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
            // { v : c.v = 0 mod 2 }
            IntVector row(static_cast<size_t>(r + 1));
            for (int i = 0; i < r; ++i)
                row[static_cast<size_t>(i)] = (mask >> (r - 1 - i)) & 1UL ? 1 : 0;
            row[static_cast<size_t>(r)] = -2;
            IntColumns ker = integer_kernel(IntMatrix{row}, r + 1);
            IntColumns proj;
            for (auto& c : ker)
                proj.emplace_back(c.begin(), c.begin() + r);
            out.push_back(IntegerLattice::from_generators(proj, r));
        }
    }
    return out;
}

int structure_rank(int n, int k)
{
    if (n < 0 || k < 0)
        throw ValidationError("n and k must be non-negative");
    if (2 * n + k < 5)
        throw ValidationError("structure rank needs total dimension 2n + k >= 5");
    int t = 0;
    if (k % 2 == 0) {
        RankBundle rb = ranks(n, k);
        t = rb.t_prime + rb.eps - ((2 * n + k) % 4 == 0 ? 1 : 0);
        if (t != rb.t)
            throw ConsistencyError("rank relation t = t' + eps - [2n+k = 0 mod 4] violated");
    }
    return t;
}

}  // namespace cpsurgery
