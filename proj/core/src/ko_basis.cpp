#include "cpsurgery/ko_basis.hpp"

#include "cpsurgery/errors.hpp"

#include <sstream>

namespace cpsurgery {

int t_prime(int n, int k)
{
    if (n < 0 || k < 0)
        throw ValidationError("n and k must be non-negative");
    if (k % 2 != 0)
        return 0;
    const int l = k / 2;
    if (l % 2 == 0)
        return n / 2;
    return (n % 2 == 1) ? n / 2 + 1 : n / 2;
}

RankBundle ranks(int n, int k)
{
    if (n < 0 || k < 0)
        throw ValidationError("n and k must be non-negative");
    RankBundle r;
    r.t_prime = t_prime(n, k);
    r.eps = (k % 4 == 0) ? 1 : 0;
    if (k % 2 != 0)
        r.t = 0;
    else if (k % 4 == 0 && n % 2 == 1)
        r.t = n / 2 + 1;
    else
        r.t = n / 2;
    if (k % 2 == 0)
        r.r_l = ((k / 2) % 2 == 1) ? (n + 1) / 2 : n / 2;
    return r;
}

bool has_half_top(int n, int l)
{
    return (l % 4 == 1 && n % 4 == 3) || (l % 4 == 3 && n % 4 == 1);
}

bool has_torsion_top(int n, int l)
{
    return (l % 4 == 0 && n % 4 == 1) || (l % 4 == 2 && n % 4 == 3);
}

std::vector<BasisDescriptor> basis_descriptors(int n, int l, bool include_sphere)
{
    if (n < 0 || l < 0)
        throw ValidationError("n and l must be non-negative");
    std::vector<BasisDescriptor> out;
    const int s = l / 4;
    const int lm = l % 4;
    if (include_sphere && l % 2 == 0 && l > 0)
        out.push_back({s, 0, 0, Special::sphere, 1});
    const int t = t_prime(n, 2 * l);
    for (int k = 1; k <= t; ++k) {
        BasisDescriptor d;
        d.bott_power = s;
        d.mu_index = lm;
        d.mu0_power = (lm == 0) ? k : k - 1;
        if (k == t && has_half_top(n, l)) {
            d.special = (lm == 1) ? Special::sigma : Special::tau;
            d.half_factor = Rational(1, 2);
            d.mu0_power = n / 2;
        }
        out.push_back(d);
    }
    return out;
}

std::string BasisDescriptor::display() const
{
    std::vector<std::string> parts;
    if (special == Special::sphere)
        return "ξ_S";
    if (bott_power == 1)
        parts.push_back("g");
    else if (bott_power > 1)
        parts.push_back("g^" + std::to_string(bott_power));
    if (special == Special::sigma || special == Special::tau) {
        parts.push_back(special == Special::sigma ? "σ" : "τ");
    } else {
        if (mu_index != 0)
            parts.push_back("μ" + std::to_string(mu_index));
        if (mu0_power == 1)
            parts.push_back("μ0");
        else if (mu0_power > 1)
            parts.push_back("μ0^" + std::to_string(mu0_power));
    }
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i)
        s += (i ? "·" : "") + parts[i];
    return s;
}

KOElement KOElement::zero(int n, int l, bool with_sphere)
{
    KOElement e;
    e.n = n;
    e.l = l;
    e.with_sphere = with_sphere;
    e.coords.assign(basis_descriptors(n, l, with_sphere).size(), 0);
    return e;
}

KOElement KOElement::unit(int n, int l, int index, bool with_sphere)
{
    KOElement e = zero(n, l, with_sphere);
    if (index < 0 || index >= static_cast<int>(e.coords.size()))
        throw ValidationError("basis index out of range");
    e.coords[static_cast<size_t>(index)] = 1;
    return e;
}

KOElement& KOElement::operator+=(const KOElement& o)
{
    if (n != o.n || l != o.l || with_sphere != o.with_sphere || coords.size() != o.coords.size())
        throw ValidationError("adding elements over different bases");
    for (size_t i = 0; i < coords.size(); ++i)
        coords[i] += o.coords[i];
    return *this;
}

KOElement& KOElement::operator*=(const Integer& k)
{
    for (auto& c : coords)
        c *= k;
    return *this;
}

KOElement operator+(KOElement a, const KOElement& b) { return a += b; }
KOElement operator*(const Integer& k, KOElement a) { return a *= k; }

namespace {

// ph of the sphere summand. eta_{2l} is oriented so that
// p_{l/2}(eta_{2l}) = (-1)^{l/2} a_{l/2} (l-1)!, which gives the +2y of CP^n x D^4.
Rational sphere_character(int l)
{
    const int k = l / 2;
    const Integer a_k = (k % 2 == 1) ? 2 : 1;
    Rational b = bernoulli(k) / (4 * k);
    return -Rational(a_k * b.get_den());
}

}  // namespace

TruncatedSeries descriptor_character(const BasisDescriptor& d, int n, int l, int order)
{
    (void)n;
    const int offset = 2 * l;
    if (d.special == Special::sphere)
        return TruncatedSeries::constant(sphere_character(l), order, offset);
    TruncatedSeries s(order, 0);
    switch (d.mu_index) {
    case 0:
        s = power(series_h(order), d.mu0_power);
        break;
    case 2:
        s = power(series_h(order), d.mu0_power + 1);
        break;
    default:
        s = series_g(d.mu0_power, order);
        break;
    }
    s *= d.half_factor;
    return s.with_offset(offset);
}

TruncatedSeries pontryagin_character(const KOElement& e, int order)
{
    if (order < 2 * (e.n + e.l))
        throw ValidationError("truncation order below 2(n+l)");
    auto basis = basis_descriptors(e.n, e.l, e.with_sphere);
    if (basis.size() != e.coords.size())
        throw ValidationError("coordinate vector does not match the free basis");
    TruncatedSeries total(order, 2 * e.l);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (e.coords[i] == 0)
            continue;
        total += descriptor_character(basis[i], e.n, e.l, order) * Rational(e.coords[i]);
    }
    return total;
}

TruncatedSeries pontryagin_character(const KOElement& e)
{
    return pontryagin_character(e, default_order(e.n, e.l));
}

KOElement restrict_element(const KOElement& e, int m)
{
    if (m < 0 || m > e.n)
        throw ValidationError("restriction target must satisfy 0 <= m <= n");
    if (m == e.n)
        return e;
    KOElement r = KOElement::zero(m, e.l, e.with_sphere);
    for (size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] = e.coords[i];
    if (has_half_top(m, e.l) && !r.coords.empty())
        r.coords.back() *= 2;
    return r;
}

std::string display_element(const KOElement& e)
{
    auto basis = basis_descriptors(e.n, e.l, e.with_sphere);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Integer& c = e.coords[i];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1)
            os << mag.get_str() << "·";
        os << basis[i].display();
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

}  // namespace cpsurgery
