#include <ordalex/fraction.hpp>

#include <stdexcept>
#include <utility>

namespace ordalex
{

PolyFraction::PolyFraction(LaurentPolynomial num) : num_(std::move(num)), den_(LaurentPolynomial::constant(num_.nvars(), 1))
{
}

PolyFraction::PolyFraction(LaurentPolynomial num, LaurentPolynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("PolyFraction: variable-count mismatch");
    if (den_.is_zero()) throw std::domain_error("PolyFraction: zero denominator");
    reduce();
}

void PolyFraction::fix_units()
{
    if (num_.is_zero()) {
        den_ = LaurentPolynomial::constant(num_.nvars(), 1);
        return;
    }
    // Move the monomial part of the denominator into the numerator.
    Exponent m = den_.min_exponents();
    bool shift = false;
    for (auto &x : m) {
        if (x != 0) shift = true;
        x = -x;
    }
    if (shift) {
        den_ = den_.shifted(m);
        num_ = num_.shifted(m);
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = 1 / lc;
        den_ = den_.scaled(inv);
        num_ = num_.scaled(inv);
    }
}

void PolyFraction::reduce()
{
    if (num_.is_zero()) {
        fix_units();
        return;
    }
    if (!den_.is_constant()) {
        LaurentPolynomial g = monic_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    fix_units();
}

PolyFraction PolyFraction::inverse() const
{
    if (is_zero()) throw std::domain_error("PolyFraction: inverse of zero");
    PolyFraction r(den_, num_, raw_tag{});
    r.fix_units();
    return r;
}

PolyFraction PolyFraction::substitute(const std::vector<std::vector<std::int64_t>> &a) const
{
    // A monomial automorphism preserves coprimality, so only units need fixing.
    PolyFraction r(num_.substitute(a), den_.substitute(a), raw_tag{});
    r.fix_units();
    return r;
}

PolyFraction PolyFraction::operator-() const
{
    return PolyFraction(-num_, den_, raw_tag{});
}

PolyFraction &PolyFraction::operator+=(const PolyFraction &b)
{
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    if (den_ == b.den_) {
        num_ += b.num_;
        if (den_.is_one()) {
            fix_units();
        } else {
            reduce();
        }
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * b.den_ + b.num_;
        den_ = b.den_;
        // gcd(num*d + n, d) = gcd(n, d) = 1
        fix_units();
        return *this;
    }
    if (b.den_.is_one()) {
        num_ += b.num_ * den_;
        fix_units();
        return *this;
    }
    LaurentPolynomial g = monic_gcd(den_, b.den_);
    if (g.is_one()) {
        num_ = num_ * b.den_ + b.num_ * den_;
        den_ = den_ * b.den_;
        fix_units();
        return *this;
    }
    LaurentPolynomial d1 = *divide_exact(den_, g);
    LaurentPolynomial d2 = *divide_exact(b.den_, g);
    num_ = num_ * d2 + b.num_ * d1;
    den_ = d1 * b.den_;
    reduce();
    return *this;
}

PolyFraction &PolyFraction::operator-=(const PolyFraction &b)
{
    return *this += -b;
}

PolyFraction &PolyFraction::operator*=(const PolyFraction &b)
{
    if (is_zero() || b.is_zero()) {
        *this = PolyFraction(nvars());
        return *this;
    }
    if (den_.is_one() && b.den_.is_one()) {
        num_ *= b.num_;
        fix_units();
        return *this;
    }
    // Cross-cancel so the product is already reduced.
    LaurentPolynomial n1 = num_, d1 = den_, n2 = b.num_, d2 = b.den_;
    if (!d2.is_one()) {
        LaurentPolynomial g = monic_gcd(n1, d2);
        if (!g.is_one()) {
            n1 = *divide_exact(n1, g);
            d2 = *divide_exact(d2, g);
        }
    }
    if (!d1.is_one()) {
        LaurentPolynomial g = monic_gcd(n2, d1);
        if (!g.is_one()) {
            n2 = *divide_exact(n2, g);
            d1 = *divide_exact(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    fix_units();
    return *this;
}

PolyFraction &PolyFraction::operator/=(const PolyFraction &b)
{
    return *this *= b.inverse();
}

PolyFraction operator+(PolyFraction a, const PolyFraction &b)
{
    a += b;
    return a;
}
PolyFraction operator-(PolyFraction a, const PolyFraction &b)
{
    a -= b;
    return a;
}
PolyFraction operator*(PolyFraction a, const PolyFraction &b)
{
    a *= b;
    return a;
}
PolyFraction operator/(PolyFraction a, const PolyFraction &b)
{
    a /= b;
    return a;
}

std::string PolyFraction::to_string(const std::vector<std::string> &names) const
{
    if (den_.is_one()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

} // namespace ordalex
