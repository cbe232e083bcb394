#include "cpsurgery/rational.hpp"

#include "cpsurgery/errors.hpp"

namespace cpsurgery {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw ValidationError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

Integer to_integer(const Rational& q)
{
    if (!is_integer(q))
        throw ConsistencyError("expected an integer, got " + to_string(q));
    return q.get_num();
}

bool is_canonical(const Rational& q)
{
    if (q.get_den() <= 0)
        return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

Integer factorial(unsigned k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer pow2(unsigned e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_mod(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Integer parse_integer(const std::string& s)
{
    Integer z;
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (t.empty() || z.set_str(t, 10) != 0)
        throw ValidationError("not an integer: '" + s + "'");
    return z;
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(s));
    return make_rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

}  // namespace cpsurgery
