#ifndef ORDALEX_SKEW_SUPPORT_HPP
#define ORDALEX_SKEW_SUPPORT_HPP

#include "support.hpp"

#include <ordalex/alexander.hpp>
#include <ordalex/skew.hpp>

#include <stdexcept>

namespace ordalex::testing
{

inline TowerPtr tower(std::vector<std::vector<long long>> m)
{
    return std::make_shared<const PfaTower>(int_matrix(m));
}

inline TowerPtr endo(std::vector<std::vector<long long>> m)
{
    return std::make_shared<const PfaTower>(PfaTower::endomorphism(int_matrix(m)));
}

inline TowerPtr tower0()
{
    return std::make_shared<const PfaTower>();
}

inline PolyFraction u(std::size_t n, std::size_t i, std::int64_t power = 1)
{
    Exponent e(n, 0);
    e[i] = power;
    return PolyFraction(LaurentPolynomial::monomial(e));
}

inline SkewLaurentPolynomial mono(const TowerPtr &t, PolyFraction k, std::int64_t e)
{
    return SkewLaurentPolynomial::monomial(t, std::move(k), e);
}

inline SkewLaurentPolynomial one(const TowerPtr &t)
{
    return SkewLaurentPolynomial::constant(t, 1);
}

inline PolyFraction random_fraction(std::mt19937_64 &rng, std::size_t n, bool allow_den)
{
    auto num = random_laurent(rng, n, 2, -1, 1, 2);
    std::uniform_int_distribution<int> coin(0, 3);
    if (allow_den && n > 0 && coin(rng) == 0) {
        auto den = random_laurent(rng, n, 2, 0, 1, 2);
        if (!den.is_zero()) return PolyFraction(num, den);
    }
    return PolyFraction(num);
}

inline SkewLaurentPolynomial random_skew(std::mt19937_64 &rng, const TowerPtr &t, int lo, int hi, int max_terms,
                                  bool allow_den = true)
{
    std::uniform_int_distribution<int> ex(lo, hi), nt(0, max_terms);
    SkewLaurentPolynomial p(t);
    const int n = nt(rng);
    for (int i = 0; i < n; ++i) p += mono(t, random_fraction(rng, t->k(), allow_den), ex(rng));
    return p;
}

inline std::vector<TowerPtr> towers()
{
    return {tower0(), tower({{1}}), tower({{-1}}), tower({{2, 1}, {1, 1}}), tower({{0, -1}, {1, 1}})};
}

inline SkewMatrix random_matrix(std::mt19937_64 &rng, const TowerPtr &t, std::size_t r, std::size_t c, bool den = true)
{
    SkewMatrix m(r, c, SkewLaurentPolynomial(t));
    std::uniform_int_distribution<int> zero(0, 3);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (zero(rng) != 0) m(i, j) = random_skew(rng, t, -1, 2, 2, den);
    return m;
}

inline bool is_identity(const SkewMatrix &m, const TowerPtr &t)
{
    return m == skew_identity(m.rows(), t);
}

inline std::int64_t span_sum(const DiagonalForm &f)
{
    std::int64_t s = 0;
    for (const auto &d : f.diagonal) s += t_span(d);
    return s;
}

// Random product of elementary matrices and units.
inline SkewMatrix random_elementary(std::mt19937_64 &rng, const TowerPtr &t, std::size_t n)
{
    SkewMatrix e = skew_identity(n, t);
    if (n == 0) return e;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int step = 0; step < 3; ++step) {
        SkewMatrix s = skew_identity(n, t);
        const std::size_t i = idx(rng), j = idx(rng);
        if (i != j) s(i, j) = random_skew(rng, t, -1, 1, 2, false);
        else s(i, i) = mono(t, PolyFraction::constant(t->k(), 2), 1);
        e = skew_multiply(e, s, t);
    }
    return e;
}

// Determinantal-divisor oracle over Q[u^{+-1}][t^{+-1}] for M = I: rank is the
// largest nonvanishing minor size, and the t-span of the gcd of the top minors
// equals the sum of the invariant-factor spans.
inline std::pair<std::size_t, std::int64_t> minor_oracle(const SkewMatrix &a, std::size_t k)
{
    const std::size_t nv = k + 1;
    auto to_laurent = [&](const SkewLaurentPolynomial &s) {
        LaurentPolynomial out(nv);
        for (const auto &[e, f] : s.coeffs()) {
            if (!f.denominator().is_one()) throw std::invalid_argument("minor_oracle needs polynomial entries");
            for (const auto &term : f.numerator().terms()) {
                Exponent x = term.exponent;
                x.push_back(e);
                out += LaurentPolynomial::monomial(x, term.coeff);
            }
        }
        return out;
    };
    const std::size_t r = a.rows(), c = a.cols();
    LaurentMatrix m(r, c, LaurentPolynomial(nv));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = to_laurent(a(i, j));

    std::size_t rank = 0;
    LaurentPolynomial best = LaurentPolynomial::constant(nv, 1);
    for (std::size_t n = 1; n <= std::min(r, c); ++n) {
        LaurentPolynomial g(nv);
        for (unsigned rm = 0; rm < (1u << r); ++rm) {
            if (static_cast<std::size_t>(__builtin_popcount(rm)) != n) continue;
            for (unsigned cm = 0; cm < (1u << c); ++cm) {
                if (static_cast<std::size_t>(__builtin_popcount(cm)) != n) continue;
                LaurentMatrix sub(n, n + 1, LaurentPolynomial(nv));
                std::size_t si = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!(rm >> i & 1u)) continue;
                    std::size_t sj = 0;
                    for (std::size_t j = 0; j < c; ++j)
                        if (cm >> j & 1u) sub(si, sj++) = m(i, j);
                    ++si;
                }
                // An n x (n+1) matrix whose last column is zero: its n-minor with
                // that column dropped is exactly det(sub).
                auto d = multivariable_alexander_polynomial(sub, nv);
                if (d.is_zero()) continue;
                g = g.is_zero() ? d : multivariate_gcd(g, d);
            }
        }
        if (g.is_zero()) break;
        rank = n;
        best = g;
    }
    const std::int64_t span = best.degree_in(k) - best.min_degree_in(k);
    return {rank, span};
}

} // namespace ordalex::testing

#endif
