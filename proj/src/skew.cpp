#include <ordalex/skew.hpp>

#include <ordalex/errors.hpp>

#include <sstream>
#include <stdexcept>

namespace ordalex
{

namespace
{

const TowerPtr &pick(const TowerPtr &a, const TowerPtr &b)
{
    if (a && b && a != b && !(*a == *b)) throw std::invalid_argument("skew polynomials over different towers");
    return a ? a : b;
}

} // namespace

PolyFraction sigma(const PfaTower &tower, const PolyFraction &k, std::int64_t e)
{
    if (e == 0 || tower.k() == 0 || k.is_zero()) return k;
    return k.substitute(tower.power64(e));
}

SkewLaurentPolynomial SkewLaurentPolynomial::monomial(TowerPtr tower, PolyFraction k, std::int64_t e)
{
    SkewLaurentPolynomial p(std::move(tower));
    if (k.nvars() != p.nvars()) throw std::invalid_argument("coefficient has the wrong number of variables");
    if (!k.is_zero()) p.coeffs_.emplace(e, std::move(k));
    return p;
}

SkewLaurentPolynomial SkewLaurentPolynomial::constant(TowerPtr tower, const Rational &c)
{
    const std::size_t n = tower->k();
    return monomial(std::move(tower), PolyFraction::constant(n, c), 0);
}

std::int64_t SkewLaurentPolynomial::min_exponent() const
{
    if (coeffs_.empty()) throw std::invalid_argument("min_exponent of zero");
    return coeffs_.begin()->first;
}

std::int64_t SkewLaurentPolynomial::max_exponent() const
{
    if (coeffs_.empty()) throw std::invalid_argument("max_exponent of zero");
    return coeffs_.rbegin()->first;
}

const PolyFraction &SkewLaurentPolynomial::top_coeff() const
{
    if (coeffs_.empty()) throw std::invalid_argument("top_coeff of zero");
    return coeffs_.rbegin()->second;
}

SkewLaurentPolynomial SkewLaurentPolynomial::unit_inverse() const
{
    if (!is_unit()) throw std::invalid_argument("unit_inverse of a non-unit");
    const auto &[e, k] = *coeffs_.begin();
    return monomial(tower_, sigma(*tower_, k.inverse(), -e), -e);
}

void SkewLaurentPolynomial::add_term(std::int64_t e, const PolyFraction &k)
{
    if (k.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, k);
        return;
    }
    it->second += k;
    if (it->second.is_zero()) coeffs_.erase(it);
}

SkewLaurentPolynomial SkewLaurentPolynomial::operator-() const
{
    SkewLaurentPolynomial out(tower_);
    for (const auto &[e, k] : coeffs_) out.coeffs_.emplace(e, -k);
    return out;
}

SkewLaurentPolynomial &SkewLaurentPolynomial::operator+=(const SkewLaurentPolynomial &b)
{
    tower_ = pick(tower_, b.tower_);
    for (const auto &[e, k] : b.coeffs_) add_term(e, k);
    return *this;
}

SkewLaurentPolynomial &SkewLaurentPolynomial::operator-=(const SkewLaurentPolynomial &b)
{
    tower_ = pick(tower_, b.tower_);
    for (const auto &[e, k] : b.coeffs_) add_term(e, -k);
    return *this;
}

SkewLaurentPolynomial operator+(SkewLaurentPolynomial a, const SkewLaurentPolynomial &b)
{
    a += b;
    return a;
}

SkewLaurentPolynomial operator-(SkewLaurentPolynomial a, const SkewLaurentPolynomial &b)
{
    a -= b;
    return a;
}

SkewLaurentPolynomial skew_mul(const SkewLaurentPolynomial &a, const SkewLaurentPolynomial &b)
{
    SkewLaurentPolynomial out(pick(a.tower_, b.tower_));
    if (a.is_zero() || b.is_zero()) return out;
    const PfaTower &t = *out.tower_;
    for (const auto &[e2, k2] : b.coeffs_) {
        for (const auto &[e1, k1] : a.coeffs_) out.add_term(e1 + e2, k1 * sigma(t, k2, e1));
    }
    return out;
}

SkewLaurentPolynomial operator*(const SkewLaurentPolynomial &a, const SkewLaurentPolynomial &b)
{
    return skew_mul(a, b);
}

std::int64_t t_span(const SkewLaurentPolynomial &d)
{
    if (d.is_zero()) throw std::invalid_argument("t_span of zero");
    return d.max_exponent() - d.min_exponent();
}

std::pair<SkewLaurentPolynomial, SkewLaurentPolynomial> skew_divmod(const SkewLaurentPolynomial &a,
                                                                    const SkewLaurentPolynomial &b, DivisionSide side)
{
    if (b.is_zero()) throw std::domain_error("skew division by zero");
    const TowerPtr &tp = pick(a.tower(), b.tower());
    const PfaTower &t = *tp;
    SkewLaurentPolynomial q(tp), r = a;
    if (!r.tower()) r = SkewLaurentPolynomial(tp);
    const std::int64_t sb = t_span(b);
    const std::int64_t n1 = b.max_exponent();
    const PolyFraction &beta = b.top_coeff();
    while (!r.is_zero() && t_span(r) >= sb) {
        const std::int64_t m1 = r.max_exponent();
        const std::int64_t s = m1 - n1;
        PolyFraction gamma = side == DivisionSide::right ? r.top_coeff() / sigma(t, beta, s)
                                                         : sigma(t, r.top_coeff() / beta, -n1);
        auto step = SkewLaurentPolynomial::monomial(tp, std::move(gamma), s);
        r -= side == DivisionSide::right ? skew_mul(step, b) : skew_mul(b, step);
        q += step;
    }
    return {std::move(q), std::move(r)};
}

std::string SkewLaurentPolynomial::to_string(const std::vector<std::string> &names) const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string(names) << ")";
        if (it->first != 0) os << "*t^" << it->first;
    }
    return os.str();
}

// --- matrices ----------------------------------------------------------------

SkewMatrix skew_identity(std::size_t n, const TowerPtr &tower)
{
    return identity(n, SkewLaurentPolynomial(tower), SkewLaurentPolynomial::constant(tower, 1));
}

SkewMatrix skew_multiply(const SkewMatrix &a, const SkewMatrix &b, const TowerPtr &tower)
{
    return multiply(a, b, SkewLaurentPolynomial(tower));
}

namespace
{

class Diagonalizer
{
public:
    Diagonalizer(const SkewMatrix &a, const TowerPtr &tower, bool certs)
        : a_(a), tower_(tower), certs_(certs), rows_(a.rows()), cols_(a.cols())
    {
        if (certs_) {
            u_ = skew_identity(rows_, tower);
            uinv_ = u_;
            v_ = skew_identity(cols_, tower);
            vinv_ = v_;
        }
    }

    DiagonalForm run()
    {
        std::size_t t = 0;
        const std::size_t n = std::min(rows_, cols_);
        while (t < n) {
            if (!place_pivot(t)) break;
            bool clean = true;
            const SkewLaurentPolynomial piv = a_(t, t);
            for (std::size_t i = t + 1; i < rows_; ++i) {
                if (a_(i, t).is_zero()) continue;
                auto [q, r] = skew_divmod(a_(i, t), piv, DivisionSide::right);
                row_sub(i, t, q);
                if (!a_(i, t).is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < cols_; ++j) {
                if (a_(t, j).is_zero()) continue;
                auto [q, r] = skew_divmod(a_(t, j), piv, DivisionSide::left);
                col_sub(j, t, q);
                if (!a_(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;
            normalize(t);
            ++t;
        }
        DiagonalForm f;
        f.rank = t;
        for (std::size_t i = 0; i < t; ++i) f.diagonal.push_back(a_(i, i));
        if (certs_) {
            f.U = std::move(u_);
            f.Uinv = std::move(uinv_);
            f.V = std::move(v_);
            f.Vinv = std::move(vinv_);
        }
        return f;
    }

private:
    SkewMatrix a_;
    TowerPtr tower_;
    bool certs_;
    std::size_t rows_, cols_;
    SkewMatrix u_, uinv_, v_, vinv_;

    // Minimal span, then fewest terms, then row-major position.
    bool place_pivot(std::size_t t)
    {
        bool found = false;
        std::size_t bi = 0, bj = 0;
        std::int64_t bs = 0;
        std::size_t bt = 0;
        for (std::size_t i = t; i < rows_; ++i) {
            for (std::size_t j = t; j < cols_; ++j) {
                const auto &x = a_(i, j);
                if (x.is_zero()) continue;
                const std::int64_t s = t_span(x);
                const std::size_t terms = x.term_count();
                if (!found || s < bs || (s == bs && terms < bt)) {
                    found = true;
                    bi = i;
                    bj = j;
                    bs = s;
                    bt = terms;
                }
            }
        }
        if (!found) return false;
        if (bi != t) {
            a_.swap_rows(t, bi);
            if (certs_) {
                u_.swap_rows(t, bi);
                uinv_.swap_cols(t, bi);
            }
        }
        if (bj != t) {
            a_.swap_cols(t, bj);
            if (certs_) {
                v_.swap_cols(t, bj);
                vinv_.swap_rows(t, bj);
            }
        }
        return true;
    }

    // row_i -= q * row_p
    void row_sub(std::size_t i, std::size_t p, const SkewLaurentPolynomial &q)
    {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!a_(p, j).is_zero()) a_(i, j) -= q * a_(p, j);
        }
        if (!certs_) return;
        for (std::size_t j = 0; j < rows_; ++j) {
            if (!u_(p, j).is_zero()) u_(i, j) -= q * u_(p, j);
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!uinv_(r, i).is_zero()) uinv_(r, p) += uinv_(r, i) * q;
        }
    }

    // col_j -= col_p * q
    void col_sub(std::size_t j, std::size_t p, const SkewLaurentPolynomial &q)
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!a_(i, p).is_zero()) a_(i, j) -= a_(i, p) * q;
        }
        if (!certs_) return;
        for (std::size_t i = 0; i < cols_; ++i) {
            if (!v_(i, p).is_zero()) v_(i, j) -= v_(i, p) * q;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!vinv_(j, c).is_zero()) vinv_(p, c) += q * vinv_(j, c);
        }
    }

    // Left-multiply row t by the unit making the pivot lowest-exponent 0 with top coefficient 1.
    void normalize(std::size_t t)
    {
        const SkewLaurentPolynomial &d = a_(t, t);
        const std::int64_t lo = d.min_exponent();
        PolyFraction gamma = sigma(*tower_, d.top_coeff(), -lo).inverse();
        auto unit = SkewLaurentPolynomial::monomial(tower_, std::move(gamma), -lo);
        if (unit == SkewLaurentPolynomial::constant(tower_, 1)) return;
        auto inv = unit.unit_inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!a_(t, j).is_zero()) a_(t, j) = unit * a_(t, j);
        }
        if (!certs_) return;
        for (std::size_t j = 0; j < rows_; ++j) {
            if (!u_(t, j).is_zero()) u_(t, j) = unit * u_(t, j);
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!uinv_(r, t).is_zero()) uinv_(r, t) = uinv_(r, t) * inv;
        }
    }
};

} // namespace

DiagonalForm diagonalize(const SkewMatrix &a, const TowerPtr &tower, bool certificates)
{
    return Diagonalizer(a, tower, certificates).run();
}

} // namespace ordalex
