#include <ordalex/alexander.hpp>

#include <ordalex/errors.hpp>

#include <algorithm>
#include <functional>

namespace ordalex
{

LaurentPolynomial push_to_abelian(const FreeGroupRingElement &a, const std::vector<Exponent> &images, std::size_t nvars)
{
    std::vector<Term> terms;
    terms.reserve(a.terms().size());
    for (const auto &[w, c] : a.terms()) {
        Exponent e(nvars, 0);
        for (const auto &l : w.letters()) {
            const Exponent &im = images.at(l.generator);
            for (std::size_t i = 0; i < nvars; ++i) e[i] += l.exponent * im[i];
        }
        terms.push_back(Term{std::move(e), Rational(c)});
    }
    return LaurentPolynomial::from_terms(nvars, std::move(terms));
}

namespace
{

LaurentMatrix push_jacobian(const GroupPresentation &p, const std::vector<Exponent> &images, std::size_t nvars)
{
    auto jac = fox_jacobian(p);
    LaurentMatrix out(jac.rows(), jac.cols(), LaurentPolynomial(nvars));
    for (std::size_t i = 0; i < jac.rows(); ++i) {
        for (std::size_t j = 0; j < jac.cols(); ++j) out(i, j) = push_to_abelian(jac(i, j), images, nvars);
    }
    return out;
}

// Fraction-free determinant over the Laurent ring.
LaurentPolynomial bareiss(LaurentMatrix a)
{
    const std::size_t n = a.rows();
    const std::size_t nv = n ? a(0, 0).nvars() : 0;
    if (n == 0) return LaurentPolynomial::constant(nv, 1);
    LaurentPolynomial prev = LaurentPolynomial::constant(nv, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a(s, k).is_zero()) ++s;
            if (s == n) return LaurentPolynomial(nv);
            a.swap_rows(k, s);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPolynomial num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                auto q = divide_exact(num, prev);
                if (!q) throw invariant_violation("Bareiss step is not exact");
                a(i, j) = std::move(*q);
            }
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

} // namespace

LaurentMatrix alexander_matrix(const GroupPresentation &p, const CoefficientSystem &sys)
{
    if (!sys.tower.is_abelian()) throw invalid_input("the Alexander matrix needs an abelian system");
    const std::size_t nv = sys.k() + 1;
    std::vector<Exponent> images;
    for (const auto &im : sys.images) {
        Exponent e;
        for (const auto &x : im.v) e.push_back(to_int64(x));
        e.push_back(im.e);
        images.push_back(std::move(e));
    }
    return push_jacobian(p, images, nv);
}

LaurentMatrix alexander_matrix(const GroupPresentation &p, const Abelianization &ab)
{
    std::vector<Exponent> images;
    for (const auto &v : ab.projection) {
        Exponent e;
        for (const auto &x : v) e.push_back(to_int64(x));
        images.push_back(std::move(e));
    }
    return push_jacobian(p, images, ab.betti);
}

LaurentPolynomial multivariable_alexander_polynomial(const LaurentMatrix &m, std::size_t nvars)
{
    const std::size_t g = m.cols(), s = m.rows();
    if (g == 0) throw invalid_input("Alexander matrix has no columns");
    const std::size_t nv = s ? m(0, 0).nvars() : nvars;
    const std::size_t n = g - 1;
    if (n == 0) return LaurentPolynomial::constant(nv, 1);
    if (s < n) return LaurentPolynomial(nv);

    LaurentPolynomial acc(nv);
    bool done = false;
    std::vector<std::size_t> rows(n);
    // Row subsets in lexicographic order, then the deleted column.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (done) return;
        if (depth == n) {
            for (std::size_t drop = 0; drop < g && !done; ++drop) {
                LaurentMatrix minor(n, n, LaurentPolynomial(nv));
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0, c = 0; j < g; ++j) {
                        if (j == drop) continue;
                        minor(i, c++) = m(rows[i], j);
                    }
                }
                LaurentPolynomial d = bareiss(std::move(minor));
                if (d.is_zero()) continue;
                acc = acc.is_zero() ? canonical_form(d) : multivariate_gcd(acc, d);
                if (acc.is_monomial()) done = true;
            }
            return;
        }
        for (std::size_t r = start; r + (n - depth) <= s && !done; ++r) {
            rows[depth] = r;
            rec(r + 1, depth + 1);
        }
    };
    rec(0, 0);
    return canonical_form(acc);
}

BigInt alexander_norm(const LaurentPolynomial &delta, const IntVector &psi)
{
    if (delta.is_zero()) throw invalid_input("Alexander polynomial is zero; the norm is undefined");
    if (psi.size() != delta.nvars()) throw invalid_input("class length does not match the number of variables");
    bool first = true;
    BigInt lo, hi;
    for (const auto &e : newton_polytope_support(delta)) {
        BigInt v = 0;
        for (std::size_t i = 0; i < e.size(); ++i) v += psi[i] * static_cast<long>(e[i]);
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
    }
    return hi - lo;
}

AlexanderData alexander_data(const GroupPresentation &p)
{
    AlexanderData d;
    d.abelian = abelianization(p);
    d.matrix = alexander_matrix(p, d.abelian);
    if (p.generator_count() == 0) {
        d.delta = LaurentPolynomial::constant(d.abelian.betti, 1);
    } else {
        d.delta = multivariable_alexander_polynomial(d.matrix, d.abelian.betti);
    }
    return d;
}

} // namespace ordalex
