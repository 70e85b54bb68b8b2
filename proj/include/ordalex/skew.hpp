#ifndef ORDALEX_SKEW_HPP
#define ORDALEX_SKEW_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <ordalex/fraction.hpp>
#include <ordalex/systems.hpp>

namespace ordalex
{

using TowerPtr = std::shared_ptr<const PfaTower>;

// Element of K[t^{+-1}; sigma] with K = Q(u_1..u_k) and sigma(u^v) = u^{M v}.
// Stored as sum of k_e t^e; t k = sigma(k) t.
//
// A default-constructed value is a zero with no ring attached; it combines
// with elements of any ring.
class SkewLaurentPolynomial
{
public:
    SkewLaurentPolynomial() = default;
    explicit SkewLaurentPolynomial(TowerPtr tower) : tower_(std::move(tower)) {}
    static SkewLaurentPolynomial monomial(TowerPtr tower, PolyFraction k, std::int64_t e);
    static SkewLaurentPolynomial constant(TowerPtr tower, const Rational &c);

    const TowerPtr &tower() const noexcept { return tower_; }
    std::size_t nvars() const { return tower_ ? tower_->k() : 0; }
    const std::map<std::int64_t, PolyFraction> &coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // A single term k t^e (nonzero).
    bool is_unit() const noexcept { return coeffs_.size() == 1; }
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    // Require a nonzero element.
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;
    const PolyFraction &top_coeff() const;

    // Inverse of a unit k t^e.
    SkewLaurentPolynomial unit_inverse() const;

    SkewLaurentPolynomial operator-() const;
    SkewLaurentPolynomial &operator+=(const SkewLaurentPolynomial &b);
    SkewLaurentPolynomial &operator-=(const SkewLaurentPolynomial &b);

    friend bool operator==(const SkewLaurentPolynomial &a, const SkewLaurentPolynomial &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string(const std::vector<std::string> &names = {}) const;

private:
    TowerPtr tower_;
    std::map<std::int64_t, PolyFraction> coeffs_;

    void add_term(std::int64_t e, const PolyFraction &k);
    friend SkewLaurentPolynomial skew_mul(const SkewLaurentPolynomial &, const SkewLaurentPolynomial &);
};

// sigma^e applied to a coefficient.
PolyFraction sigma(const PfaTower &tower, const PolyFraction &k, std::int64_t e);

SkewLaurentPolynomial skew_mul(const SkewLaurentPolynomial &a, const SkewLaurentPolynomial &b);
SkewLaurentPolynomial operator+(SkewLaurentPolynomial a, const SkewLaurentPolynomial &b);
SkewLaurentPolynomial operator-(SkewLaurentPolynomial a, const SkewLaurentPolynomial &b);
SkewLaurentPolynomial operator*(const SkewLaurentPolynomial &a, const SkewLaurentPolynomial &b);

enum class DivisionSide { left, right };
// right: a = q b + r;  left: a = b q + r;  t_span(r) < t_span(b) or r = 0.
std::pair<SkewLaurentPolynomial, SkewLaurentPolynomial> skew_divmod(const SkewLaurentPolynomial &a,
                                                                    const SkewLaurentPolynomial &b, DivisionSide side);

// max t-exponent - min t-exponent; throws std::invalid_argument on zero.
std::int64_t t_span(const SkewLaurentPolynomial &d);

using SkewMatrix = Matrix<SkewLaurentPolynomial>;

struct DiagonalForm {
    std::vector<SkewLaurentPolynomial> diagonal; // nonzero entries, in order
    std::size_t rank = 0;
    // U A V = D, with Uinv, Vinv the inverses. Empty when not requested.
    SkewMatrix U, Uinv, V, Vinv;
};

// Reduces A to diagonal form by invertible row and column operations.
// Each diagonal entry is normalized to lowest exponent 0 and top coefficient 1.
DiagonalForm diagonalize(const SkewMatrix &a, const TowerPtr &tower, bool certificates = true);

SkewMatrix skew_identity(std::size_t n, const TowerPtr &tower);
SkewMatrix skew_multiply(const SkewMatrix &a, const SkewMatrix &b, const TowerPtr &tower);

} // namespace ordalex

#endif
