#ifndef ORDALEX_FRACTION_HPP
#define ORDALEX_FRACTION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <ordalex/laurent.hpp>

namespace ordalex
{

// Element of the rational function field Q(u_1, ..., u_k).
//
// Canonical form: gcd(num, den) = 1, den is an ordinary polynomial with no
// monomial factor and grlex-leading coefficient 1. Two fractions are equal
// iff their representations are identical.
class PolyFraction
{
public:
    explicit PolyFraction(std::size_t nvars = 0) : num_(nvars), den_(LaurentPolynomial::constant(nvars, 1)) {}
    PolyFraction(LaurentPolynomial num); // NOLINT: polynomials embed in the field
    PolyFraction(LaurentPolynomial num, LaurentPolynomial den);

    static PolyFraction constant(std::size_t nvars, const Rational &c)
    {
        return PolyFraction(LaurentPolynomial::constant(nvars, c));
    }

    std::size_t nvars() const noexcept { return num_.nvars(); }
    const LaurentPolynomial &numerator() const noexcept { return num_; }
    const LaurentPolynomial &denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // Nonzero and a monomial over a constant.
    bool is_monomial() const { return num_.is_monomial() && den_.is_one(); }
    // Rough size for pivot tie-breaking.
    std::size_t term_count() const noexcept { return num_.size() + den_.size(); }

    // Requires a nonzero element.
    PolyFraction inverse() const;
    // Monomial substitution u^v -> u^{A v} applied to numerator and denominator.
    PolyFraction substitute(const std::vector<std::vector<std::int64_t>> &a) const;

    PolyFraction operator-() const;
    PolyFraction &operator+=(const PolyFraction &b);
    PolyFraction &operator-=(const PolyFraction &b);
    PolyFraction &operator*=(const PolyFraction &b);
    PolyFraction &operator/=(const PolyFraction &b);

    friend bool operator==(const PolyFraction &a, const PolyFraction &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::vector<std::string> &names = {}) const;

private:
    struct raw_tag {};
    PolyFraction(LaurentPolynomial num, LaurentPolynomial den, raw_tag)
        : num_(std::move(num)), den_(std::move(den))
    {
    }
    // Normalizes monomial and scalar parts only; assumes gcd(num, den) = 1.
    void fix_units();
    void reduce();

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

PolyFraction operator+(PolyFraction a, const PolyFraction &b);
PolyFraction operator-(PolyFraction a, const PolyFraction &b);
PolyFraction operator*(PolyFraction a, const PolyFraction &b);
PolyFraction operator/(PolyFraction a, const PolyFraction &b);

} // namespace ordalex

#endif
