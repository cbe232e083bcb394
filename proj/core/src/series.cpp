#include "cpsurgery/series.hpp"

#include "cpsurgery/errors.hpp"

#include <algorithm>

namespace cpsurgery {

namespace {

const Rational kZero = 0;

void require_same_frame(const TruncatedSeries& a, const TruncatedSeries& b, const char* op)
{
    if (a.offset() != b.offset())
        throw ValidationError(std::string(op) + ": suspension offsets differ");
    if (a.order() != b.order())
        throw ValidationError(std::string(op) + ": truncation orders differ");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order, int offset)
    : order_(order), offset_(offset), c_(static_cast<size_t>(order < 0 ? 0 : order + 1))
{
    if (order < 0 || offset < 0)
        throw ValidationError("series order and offset must be non-negative");
}

TruncatedSeries::TruncatedSeries(RatVector coeffs, int order, int offset)
    : TruncatedSeries(order, offset)
{
    for (size_t d = 0; d < coeffs.size() && d < c_.size(); ++d)
        c_[d] = coeffs[d];
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order, int offset)
{
    TruncatedSeries s(order, offset);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int degree, int order, int offset)
{
    TruncatedSeries s(order, offset);
    if (degree >= 0 && degree <= order)
        s.c_[static_cast<size_t>(degree)] = c;
    return s;
}

Rational TruncatedSeries::coeff(int d) const
{
    if (d < 0 || d > order_)
        return 0;
    return c_[static_cast<size_t>(d)];
}

const Rational& TruncatedSeries::operator[](int d) const
{
    if (d < 0 || d > order_)
        return kZero;
    return c_[static_cast<size_t>(d)];
}

void TruncatedSeries::set(int d, const Rational& v)
{
    if (d < 0 || d > order_)
        throw ValidationError("degree outside truncation order");
    c_[static_cast<size_t>(d)] = v;
}

void TruncatedSeries::add_to(int d, const Rational& v)
{
    if (d < 0 || d > order_)
        return;
    c_[static_cast<size_t>(d)] += v;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    TruncatedSeries s(order, offset_);
    for (int d = 0; d <= std::min(order, order_); ++d)
        s.c_[static_cast<size_t>(d)] = c_[static_cast<size_t>(d)];
    return s;
}

TruncatedSeries TruncatedSeries::with_offset(int offset) const
{
    TruncatedSeries s = *this;
    if (offset < 0)
        throw ValidationError("negative offset");
    s.offset_ = offset;
    return s;
}

TruncatedSeries TruncatedSeries::scaled_argument(const Rational& m) const
{
    TruncatedSeries s = *this;
    Rational p = 1;
    for (auto& c : s.c_) {
        c *= p;
        p *= m;
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    require_same_frame(*this, o, "add");
    for (size_t d = 0; d < c_.size(); ++d)
        c_[d] += o.c_[d];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    require_same_frame(*this, o, "subtract");
    for (size_t d = 0; d < c_.size(); ++d)
        c_[d] -= o.c_[d];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& k)
{
    for (auto& c : c_)
        c *= k;
    return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.order_ == b.order_ && a.offset_ == b.offset_ && a.c_ == b.c_;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(TruncatedSeries a, const Rational& k) { return a *= k; }
TruncatedSeries operator*(const Rational& k, TruncatedSeries a) { return a *= k; }
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return multiply(a, b); }

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order())
        throw ValidationError("multiply: truncation orders differ");
    // only a product with an unsuspended factor is defined; it keeps the offset
    if (a.offset() != 0 && b.offset() != 0)
        throw ValidationError("multiply: both factors are suspended");
    const int n = a.order();
    TruncatedSeries r(n, a.offset() + b.offset());
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    RatVector out(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        if (ac[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (bc[static_cast<size_t>(j)] == 0)
                continue;
            out[static_cast<size_t>(i + j)] += ac[static_cast<size_t>(i)] * bc[static_cast<size_t>(j)];
        }
    }
    return TruncatedSeries(std::move(out), n, r.offset());
}

TruncatedSeries power(const TruncatedSeries& a, int k)
{
    if (k < 0)
        throw ValidationError("power: negative exponent");
    if (k == 1)
        return a;
    if (k > 1 && a.offset() != 0)
        throw ValidationError("power: suspended base");
    TruncatedSeries r = TruncatedSeries::constant(1, a.order(), 0);
    TruncatedSeries base = a;
    while (k > 0) {
        if (k & 1)
            r = multiply(r, base);
        k >>= 1;
        if (k > 0)
            base = multiply(base, base);
    }
    return r;
}

TruncatedSeries reciprocal(const TruncatedSeries& a)
{
    if (a.offset() != 0)
        throw ValidationError("reciprocal: suspended series");
    if (a[0] == 0)
        throw ValidationError("reciprocal: zero constant term");
    const int n = a.order();
    RatVector r(static_cast<size_t>(n + 1));
    r[0] = 1 / a[0];
    for (int d = 1; d <= n; ++d) {
        Rational s = 0;
        for (int i = 1; i <= d; ++i)
            if (a[i] != 0)
                s += a[i] * r[static_cast<size_t>(d - i)];
        r[static_cast<size_t>(d)] = -s * r[0];
    }
    return TruncatedSeries(std::move(r), n, 0);
}

TruncatedSeries log(const TruncatedSeries& a)
{
    if (a.offset() != 0)
        throw ValidationError("log: suspended series");
    if (a[0] != 1)
        throw ValidationError("log: constant term must be 1");
    const int n = a.order();
    TruncatedSeries u = a;
    u.set(0, 0);
    TruncatedSeries result(n, 0);
    TruncatedSeries p = TruncatedSeries::constant(1, n, 0);
    for (int i = 1; i <= n; ++i) {
        p = multiply(p, u);
        if (p.is_zero())
            break;
        Rational sign_over_i(i % 2 == 1 ? 1 : -1, i);
        result += p * sign_over_i;
    }
    return result;
}

TruncatedSeries series_arith(ArithKind kind, const TruncatedSeries& a, const TruncatedSeries& b)
{
    switch (kind) {
    case ArithKind::multiply:
        return multiply(a, b);
    case ArithKind::reciprocal:
        return reciprocal(a);
    case ArithKind::log:
        return log(a);
    case ArithKind::power:
        break;
    }
    throw ValidationError("power takes an integer exponent");
}

TruncatedSeries series_arith(ArithKind kind, const TruncatedSeries& a, int k)
{
    switch (kind) {
    case ArithKind::power:
        return power(a, k);
    case ArithKind::reciprocal:
        return reciprocal(a);
    case ArithKind::log:
        return log(a);
    case ArithKind::multiply:
        break;
    }
    throw ValidationError("multiply takes a series operand");
}

TruncatedSeries series_h(int order)
{
    // 2(cosh x - 1)
    TruncatedSeries s(order, 0);
    for (int d = 2; d <= order; d += 2)
        s.set(d, Rational(2) / factorial(static_cast<unsigned>(d)));
    return s;
}

TruncatedSeries series_g(int i, int order)
{
    if (i < 0)
        throw ValidationError("g(i) needs i >= 0");
    TruncatedSeries two_sinh(order, 0);
    for (int d = 1; d <= order; d += 2)
        two_sinh.set(d, Rational(2) / factorial(static_cast<unsigned>(d)));
    return multiply(two_sinh, power(series_h(order), i));
}

TruncatedSeries series_x_over_tanh(int order)
{
    TruncatedSeries cosh(order, 0), sinh_over_x(order, 0);
    for (int d = 0; d <= order; d += 2) {
        cosh.set(d, Rational(1) / factorial(static_cast<unsigned>(d)));
        sinh_over_x.set(d, Rational(1) / factorial(static_cast<unsigned>(d + 1)));
    }
    return multiply(cosh, reciprocal(sinh_over_x));
}

TruncatedSeries series_sh(int order)
{
    // sinh(x/2)/(x/2) = sum x^{2d} / (4^d (2d+1)!)
    TruncatedSeries s(order, 0);
    for (int d = 0; d <= order; d += 2)
        s.set(d, Rational(1) / (factorial(static_cast<unsigned>(d + 1)) * pow2(static_cast<unsigned>(d))));
    return s;
}

TruncatedSeries series_sh_log(int order)
{
    return log(series_sh(order));
}

TruncatedSeries series_l_genus_cpn(int n, int order)
{
    if (n < 0)
        throw ValidationError("l_genus_cpn needs n >= 0");
    return power(series_x_over_tanh(order), n + 1);
}

TruncatedSeries named_series(SeriesName name, int order, int param)
{
    if (order < 0)
        throw ValidationError("order must be non-negative");
    switch (name) {
    case SeriesName::h:
        return series_h(order);
    case SeriesName::g:
        return series_g(param, order);
    case SeriesName::x_over_tanh:
        return series_x_over_tanh(order);
    case SeriesName::sh_log:
        return series_sh_log(order);
    case SeriesName::l_genus_cpn:
        return series_l_genus_cpn(param, order);
    }
    throw ValidationError("unknown series");
}

SeriesName parse_series_name(const std::string& s)
{
    if (s == "h")
        return SeriesName::h;
    if (s == "g")
        return SeriesName::g;
    if (s == "x_over_tanh")
        return SeriesName::x_over_tanh;
    if (s == "sh_log")
        return SeriesName::sh_log;
    if (s == "l_genus_cpn")
        return SeriesName::l_genus_cpn;
    throw ValidationError("unknown series name '" + s + "'");
}

namespace {

constexpr int kMemoCap = 64;
constexpr int kAlphaCap = 32;

// Filled once on first use, read-only afterwards.
const RatVector& bernoulli_memo()
{
    static const RatVector table = [] {
        TruncatedSeries xt = series_x_over_tanh(2 * kMemoCap);
        RatVector b(kMemoCap + 1);
        for (int k = 1; k <= kMemoCap; ++k) {
            Rational v = xt[2 * k] * factorial(static_cast<unsigned>(2 * k)) / pow2(static_cast<unsigned>(2 * k));
            b[static_cast<size_t>(k)] = (k % 2 == 1) ? v : Rational(-v);
        }
        return b;
    }();
    return table;
}

const RatVector& alpha_memo()
{
    static const RatVector table = [] {
        TruncatedSeries sl = series_sh_log(2 * kAlphaCap);
        RatVector a(kAlphaCap + 1);
        for (int s = 1; s <= kAlphaCap; ++s)
            a[static_cast<size_t>(s)] = sl[2 * s] * factorial(static_cast<unsigned>(2 * s));
        return a;
    }();
    return table;
}

}  // namespace

Rational bernoulli(int k)
{
    if (k <= 0)
        throw ValidationError("bernoulli(k) needs k >= 1");
    if (k <= kMemoCap)
        return bernoulli_memo()[static_cast<size_t>(k)];
    TruncatedSeries xt = series_x_over_tanh(2 * k);
    Rational v = xt[2 * k] * factorial(static_cast<unsigned>(2 * k)) / pow2(static_cast<unsigned>(2 * k));
    return (k % 2 == 1) ? v : Rational(-v);
}

Rational alpha(int two_s)
{
    if (two_s <= 0 || two_s % 2 != 0)
        throw ValidationError("alpha is indexed by positive even integers");
    const int s = two_s / 2;
    if (s <= kAlphaCap)
        return alpha_memo()[static_cast<size_t>(s)];
    return series_sh_log(two_s)[two_s] * factorial(static_cast<unsigned>(two_s));
}

}  // namespace cpsurgery
