#pragma once

#include "cpsurgery/rational.hpp"

#include <string>
#include <vector>

namespace cpsurgery {

// Truncated power series sum_{d<=order} c_d x^d. The offset records a cross
// product with the suspension class z^{x offset}; it never shifts x-degrees.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0, int offset = 0);
    TruncatedSeries(RatVector coeffs, int order, int offset);

    static TruncatedSeries constant(const Rational& c, int order, int offset = 0);
    static TruncatedSeries monomial(const Rational& c, int degree, int order, int offset = 0);

    int order() const { return order_; }
    int offset() const { return offset_; }

    // f(x)_d; zero outside 0..order
    Rational coeff(int d) const;
    const Rational& operator[](int d) const;
    void set(int d, const Rational& v);
    void add_to(int d, const Rational& v);
    const RatVector& coeffs() const { return c_; }

    bool is_zero() const;
    TruncatedSeries truncated(int order) const;
    TruncatedSeries with_offset(int offset) const;
    TruncatedSeries scaled_argument(const Rational& m) const;  // f(m x)

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& k);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    int order_;
    int offset_;
    RatVector c_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const Rational& k);
TruncatedSeries operator*(const Rational& k, TruncatedSeries a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries power(const TruncatedSeries& a, int k);
TruncatedSeries reciprocal(const TruncatedSeries& a);
TruncatedSeries log(const TruncatedSeries& a);  // log(1+u) = sum (-1)^{i-1} u^i / i

enum class ArithKind { multiply, power, reciprocal, log };

TruncatedSeries series_arith(ArithKind kind, const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_arith(ArithKind kind, const TruncatedSeries& a, int k);

enum class SeriesName { h, g, x_over_tanh, sh_log, l_genus_cpn };

// param is i for g(i) and n for l_genus_cpn(n), ignored otherwise.
TruncatedSeries named_series(SeriesName name, int order, int param = 0);
SeriesName parse_series_name(const std::string& s);

TruncatedSeries series_h(int order);
TruncatedSeries series_g(int i, int order);
TruncatedSeries series_x_over_tanh(int order);
TruncatedSeries series_sh(int order);  // (e^{x/2}-e^{-x/2})/x
TruncatedSeries series_sh_log(int order);
TruncatedSeries series_l_genus_cpn(int n, int order);  // (x/tanh x)^{n+1}

// Unsigned Bernoulli numbers in Milnor's indexing: B_1 = 1/6, B_2 = 1/30, ...
Rational bernoulli(int k);

// alpha_{2s} = (2s)! [sh_log]_{2s}
Rational alpha(int two_s);

// Default truncation order for a computation on CP^n x D^{2l}.
inline int default_order(int n, int l) { return 2 * (n + l) + 2; }

}  // namespace cpsurgery
