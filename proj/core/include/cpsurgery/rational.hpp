#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cpsurgery {

using Integer = mpz_class;
using Rational = mpq_class;  // gmpxx keeps results canonical after every operation

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// num/den brought to lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // throws ConsistencyError if q is not integral
bool is_canonical(const Rational& q);

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);
Integer pow2(unsigned e);
Integer lcm(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);  // result in [0, |b|)

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);  // "p" or "p/q"
Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);  // accepts "p" and "p/q"

}  // namespace cpsurgery
