#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tpoly {

/* All coefficients are exact rationals; "integral" is asserted only at API
 * boundaries where an integer answer is guaranteed. */
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

inline Integer to_integer(const Rational& q)
{
    if (!is_integer(q))
        throw Error("expected integral value, got " + q.get_str());
    return q.get_num();
}

inline Rational pow_rational(const Rational& base, unsigned long e)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

}  // namespace tpoly
