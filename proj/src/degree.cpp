#include <ordalex/degree.hpp>

#include <ordalex/alexander.hpp>
#include <ordalex/errors.hpp>

#include <memory>

namespace ordalex
{

namespace
{

using RationalVector = std::vector<Rational>;

// Divides out the content m of psi: images (v, m e') become (v, e') over M^m.
CoefficientSystem rescale(const CoefficientSystem &sys, const BigInt &m)
{
    const std::int64_t mm = to_int64(m);
    CoefficientSystem out{PfaTower(sys.tower.power(mm)), sys.images};
    for (auto &im : out.images) im.e /= mm;
    return out;
}

SkewLaurentPolynomial push_element(const FreeGroupRingElement &a, const CoefficientSystem &sys,
                                   const TowerPtr &tower)
{
    SkewLaurentPolynomial out(tower);
    for (const auto &[w, c] : a.terms()) {
        TowerElement x = evaluate(sys, w);
        Exponent e;
        for (const auto &v : x.v) e.push_back(to_int64(v));
        LaurentPolynomial u = LaurentPolynomial::monomial(std::move(e), Rational(c));
        out += SkewLaurentPolynomial::monomial(tower, PolyFraction(std::move(u)), x.e);
    }
    return out;
}

// Element of Q[t^{+-1}] carried by a skew polynomial over a k = 0 tower.
LaurentPolynomial to_laurent(const SkewLaurentPolynomial &s)
{
    std::vector<Term> terms;
    for (const auto &[e, k] : s.coeffs()) {
        terms.push_back(Term{Exponent{e}, Rational(k.numerator().constant_term() / k.denominator().constant_term())});
    }
    return LaurentPolynomial::from_terms(1, std::move(terms));
}

// Coefficients c with sum c_i psi_i = 1.
std::vector<BigInt> unit_combination(const IntVector &psi)
{
    BigInt g = 0;
    std::vector<BigInt> coef(psi.size(), BigInt(0));
    for (std::size_t i = 0; i < psi.size(); ++i) {
        BigInt s, u;
        BigInt ng = extended_gcd(g, psi[i], s, u);
        for (std::size_t j = 0; j < i; ++j) coef[j] *= s;
        coef[i] = u;
        g = ng;
    }
    if (g != 1) throw invalid_input("class is not primitive");
    return coef;
}

Matrix<Rational> rational_inverse(const IntMatrix &a)
{
    const std::size_t n = a.rows();
    Matrix<Rational> m(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) throw invariant_violation("singular lattice basis");
        m.swap_rows(p, c);
        const Rational inv = 1 / m(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) m(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    Matrix<Rational> out(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, n + j);
    return out;
}

IntVector integral_product(const Matrix<Rational> &a, const IntVector &v, const char *what)
{
    IntVector out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        if (!is_integer(s)) throw invariant_violation(std::string(what) + " is not integral");
        out.push_back(s.get_num());
    }
    return out;
}

} // namespace

SkewMatrix skew_jacobian(const GroupPresentation &p, const CoefficientSystem &sys, const TowerPtr &tower)
{
    auto jac = fox_jacobian(p);
    SkewMatrix a(jac.rows(), jac.cols(), SkewLaurentPolynomial(tower));
    for (std::size_t i = 0; i < jac.rows(); ++i) {
        for (std::size_t j = 0; j < jac.cols(); ++j) a(i, j) = push_element(jac(i, j), sys, tower);
    }
    return a;
}

DegreeReport gamma_degree(const GroupPresentation &p, const CoefficientSystem &sys_in)
{
    validate_system(p, sys_in);
    IntVector psi = sys_in.psi();
    const BigInt m = gcd_of(psi);
    if (m == 0) throw invalid_input("the system induces the zero class");
    CoefficientSystem sys = m == 1 ? sys_in : rescale(sys_in, m);
    if (!check_surjective(sys)) throw invalid_input("the system is not surjective onto its tower");

    auto tower = std::make_shared<const PfaTower>(sys.tower);
    DiagonalForm f = diagonalize(skew_jacobian(p, sys, tower), tower, false);

    DegreeReport r;
    r.psi = std::move(psi);
    r.scaling = to_int64(m);
    r.fiber_rank = sys.k();
    r.initial = sys.k() == 0;
    const std::size_t g = p.generator_count();
    if (f.rank >= g) throw invariant_violation("relative module has free rank 0");
    r.free_rank = g - f.rank;
    r.rank = static_cast<std::int64_t>(r.free_rank) - 1;
    const std::size_t betti = abelianization(p).betti;
    if (r.rank > static_cast<std::int64_t>(betti) - 1) throw invariant_violation("Gamma-rank exceeds beta_1 - 1");
    std::int64_t sum = 0;
    for (const auto &d : f.diagonal) {
        r.spans.push_back(t_span(d));
        sum += r.spans.back();
    }
    if (r.rank > 0) {
        r.zeroed = true;
        r.delta = 0;
    } else {
        r.delta = r.scaling * sum;
    }
    return r;
}

CoefficientSystem build_metabelian_system(const GroupPresentation &p, const CohomologyClass &psi)
{
    if (psi.values.size() != p.generator_count()) throw invalid_input("class length does not match generators");
    validate_class(p, psi.values);
    if (!psi.is_primitive()) throw invalid_input(psi.is_zero() ? "class is zero" : "class is not primitive");
    const std::size_t betti = abelianization(p).betti;
    if (betti != 1) {
        throw unsupported("the metabelian system is only constructed for beta_1 = 1 (here beta_1 = " +
                          std::to_string(betti) + ")");
    }
    const std::size_t g = p.generator_count();

    CoefficientSystem base{PfaTower(), {}};
    for (const auto &v : psi.values) base.images.push_back(TowerElement{{}, to_int64(v)});
    auto t0 = std::make_shared<const PfaTower>(base.tower);
    DiagonalForm f = diagonalize(skew_jacobian(p, base, t0), t0, true);
    const std::size_t rho = f.rank;
    if (rho + 1 != g) throw invariant_violation("beta_1 = 1 but the relative module is not of free rank 1");

    // Invariant factors and their blocks in the block companion matrix.
    struct Block {
        std::size_t column, start, degree;
        LaurentPolynomial q;
    };
    std::vector<Block> blocks;
    std::size_t d = 0;
    for (std::size_t j = 0; j < rho; ++j) {
        LaurentPolynomial q = to_laurent(f.diagonal[j]);
        const std::size_t deg = static_cast<std::size_t>(t_span(f.diagonal[j]));
        if (deg == 0) continue;
        for (const auto &t : q.terms()) {
            if (!is_integer(t.coeff)) {
                throw unsupported("invariant factor " + canonical_form(q).to_string({"t"}) +
                                  " is not monic; the metabelian fiber is not finitely generated");
            }
        }
        const Rational c0 = q.constant_term();
        if (c0 != 1 && c0 != -1) {
            throw unsupported("invariant factor " + q.to_string({"t"}) +
                              " does not have constant term +-1; the metabelian fiber is not finitely generated");
        }
        blocks.push_back(Block{j, d, deg, std::move(q)});
        d += deg;
    }
    if (d == 0) {
        validate_system(p, base);
        return base;
    }

    IntMatrix mon(d, d, BigInt(0));
    for (const auto &b : blocks) {
        for (std::size_t i = 0; i + 1 < b.degree; ++i) mon(b.start + i + 1, b.start + i) = 1;
        for (std::size_t i = 0; i < b.degree; ++i) {
            Rational c = b.q.coefficient(Exponent{static_cast<std::int64_t>(i)});
            mon(b.start + i, b.start + b.degree - 1) = -c.get_num();
        }
    }
    PfaTower tower(mon);

    // mu with psi(mu) = 1.
    std::vector<BigInt> coef = unit_combination(psi.values);
    FreeWord mu;
    for (std::size_t j = 0; j < g; ++j) mu = mu * FreeWord::generator(j, to_int64(coef[j]));

    LaurentMatrix vl(g, g, LaurentPolynomial(1));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) vl(i, j) = to_laurent(f.V(i, j));
    std::vector<Exponent> t_images;
    for (const auto &v : psi.values) t_images.push_back(Exponent{to_int64(v)});

    // Coordinates in Q^d of the class of x_i mu^(-psi(x_i)).
    std::vector<RationalVector> classes;
    for (std::size_t i = 0; i < g; ++i) {
        const std::int64_t e = to_int64(psi.values[i]);
        FreeWord w = FreeWord::generator(i) * power(mu, -e);
        std::vector<LaurentPolynomial> grad;
        for (std::size_t j = 0; j < g; ++j) grad.push_back(push_to_abelian(fox_derivative(w, j), t_images, 1));
        std::vector<LaurentPolynomial> row(g, LaurentPolynomial(1));
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t l = 0; l < g; ++l) row[j] += grad[l] * vl(l, j);
        for (std::size_t j = rho; j < g; ++j) {
            if (!row[j].is_zero()) throw invariant_violation("kernel class has a nonzero free coordinate");
        }
        RationalVector c(d, Rational(0));
        for (const auto &b : blocks) {
            for (const auto &t : row[b.column].terms()) {
                const IntMatrix &mp = tower.power(t.exponent[0]);
                for (std::size_t r = 0; r < d; ++r) c[r] += t.coeff * mp(r, b.start);
            }
        }
        classes.push_back(std::move(c));
    }

    // The fiber is the Z[t^{+-1}]-span of the classes: saturate under M^{+-1}.
    BigInt den = 1;
    for (const auto &c : classes)
        for (const auto &x : c) den = lcm(den, x.get_den());
    std::vector<IntVector> scaled;
    for (const auto &c : classes) {
        IntVector v;
        for (const auto &x : c) v.push_back(BigInt(x * den));
        scaled.push_back(std::move(v));
    }
    std::vector<IntVector> basis = lattice_basis(scaled, d);
    for (;;) {
        std::vector<IntVector> next = basis;
        for (const auto &b : basis) {
            next.push_back(mat_vec(tower.power(1), b));
            next.push_back(mat_vec(tower.power(-1), b));
        }
        next = lattice_basis(next, d);
        if (next == basis) break;
        basis = std::move(next);
    }
    if (basis.size() != d) throw invariant_violation("kernel classes do not span the Alexander module");

    IntMatrix bm(d, d, BigInt(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) bm(j, i) = basis[i][j];
    Matrix<Rational> bminv = rational_inverse(bm);
    IntMatrix mon2(d, d, BigInt(0));
    IntMatrix mb = multiply(mon, bm, BigInt(0));
    for (std::size_t j = 0; j < d; ++j) {
        IntVector colj;
        for (std::size_t i = 0; i < d; ++i) colj.push_back(mb(i, j));
        IntVector x = integral_product(bminv, colj, "monodromy in the saturated basis");
        for (std::size_t i = 0; i < d; ++i) mon2(i, j) = x[i];
    }

    CoefficientSystem sys{PfaTower(mon2), {}};
    for (std::size_t i = 0; i < g; ++i) {
        sys.images.push_back(TowerElement{integral_product(bminv, scaled[i], "class coordinate"),
                                          to_int64(psi.values[i])});
    }
    validate_system(p, sys);
    if (!check_surjective(sys)) throw invariant_violation("metabelian system is not surjective");
    return sys;
}

CoefficientSystem level_system(const GroupPresentation &p, const CohomologyClass &psi, int n)
{
    if (n == 0) return abelian_system(p, psi);
    if (n == 1) return build_metabelian_system(p, psi);
    throw invalid_input("only levels 0 and 1 are available");
}

DegreeReport delta_n(const GroupPresentation &p, const IntVector &values, int n)
{
    if (n != 0 && n != 1) throw invalid_input("only levels 0 and 1 are available");
    CohomologyClass c = validate_class(p, values);
    if (c.is_zero()) throw invalid_input("class is zero");
    CohomologyClass prim{c.primitive_values, BigInt(1), c.primitive_values};
    DegreeReport r = gamma_degree(p, level_system(p, prim, n));
    const std::int64_t m = to_int64(c.multiplicity);
    r.scaling *= m;
    r.delta *= m;
    r.psi = values;
    return r;
}

} // namespace ordalex
