#ifndef ORDALEX_ARITH_HPP
#define ORDALEX_ARITH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ordalex
{

using BigInt = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<BigInt>;

inline Rational make_rational(const BigInt &num, const BigInt &den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt gcd(const BigInt &a, const BigInt &b)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm(const BigInt &a, const BigInt &b)
{
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
inline BigInt extended_gcd(const BigInt &a, const BigInt &b, BigInt &s, BigInt &t)
{
    BigInt g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Floor division; b != 0.
inline BigInt floor_div(const BigInt &a, const BigInt &b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt gcd_of(const IntVector &v)
{
    BigInt g = 0;
    for (const auto &x : v) {
        g = gcd(g, x);
    }
    return g;
}

// Converts to a machine integer, throwing std::overflow_error when out of range.
std::int64_t to_int64(const BigInt &x);

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace ordalex

#endif
