#ifndef ORDALEX_TEST_SUPPORT_HPP
#define ORDALEX_TEST_SUPPORT_HPP

#include <ordalex/laurent.hpp>
#include <ordalex/presentation.hpp>
#include <ordalex/snf.hpp>

#include <initializer_list>
#include <random>
#include <string>

namespace ordalex::testing
{

inline LaurentPolynomial x(std::size_t nvars, std::size_t i)
{
    return LaurentPolynomial::variable(nvars, i);
}

inline LaurentPolynomial c(std::size_t nvars, long v)
{
    return LaurentPolynomial::constant(nvars, v);
}

inline LaurentPolynomial random_laurent(std::mt19937_64 &rng, std::size_t nvars, int max_terms, int lo, int hi,
                                        int coeff = 3)
{
    std::uniform_int_distribution<int> nt(0, max_terms), ex(lo, hi), cf(-coeff, coeff);
    std::vector<Term> terms;
    const int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        Exponent e(nvars);
        for (auto &v : e) v = ex(rng);
        terms.push_back(Term{e, Rational(cf(rng))});
    }
    return LaurentPolynomial::from_terms(nvars, terms);
}

inline FreeWord random_word(std::mt19937_64 &rng, std::size_t gens, int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> g(0, gens - 1);
    std::uniform_int_distribution<int> e(-2, 2);
    std::vector<Letter> letters;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) letters.push_back(Letter{g(rng), e(rng)});
    return FreeWord(letters);
}

inline IntVector iv(std::initializer_list<long> xs)
{
    IntVector v;
    for (long a : xs) v.push_back(a);
    return v;
}

// Product of random elementary matrices and sign flips.
inline IntMatrix random_unimodular(std::mt19937_64 &rng, std::size_t n, int steps = 6)
{
    IntMatrix m = int_identity(n);
    if (n == 0) return m;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> f(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
            continue;
        }
        const BigInt k = f(rng);
        for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
    }
    return m;
}

namespace examples
{
inline constexpr const char *trefoil = "< x, y | x y x = y x y >";
inline constexpr const char *figure8 = "< x, y | x^-1 y x y^-1 x = y x^-1 y x y^-1 >";
inline constexpr const char *torus25 = "< a, b | a^2 = b^5 >";
inline constexpr const char *borromean = "< x, y, z | [z,[x,y^-1]], [y,[z,x^-1]] >";
inline constexpr const char *unknot = "< x | >";
inline constexpr const char *granny = "< x, y, z | x y x = y x y, y z y = z y z >";

// Z^m as m generators with all commutators.
inline std::string free_abelian(std::size_t m)
{
    std::string s = "< ";
    for (std::size_t i = 1; i <= m; ++i) s += (i > 1 ? ", x" : "x") + std::to_string(i);
    s += " |";
    bool first = true;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            s += (first ? " [x" : ", [x") + std::to_string(i) + ", x" + std::to_string(j) + "]";
            first = false;
        }
    }
    return s + " >";
}
} // namespace examples

} // namespace ordalex::testing

#endif
