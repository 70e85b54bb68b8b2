#ifndef ORDALEX_LAURENT_HPP
#define ORDALEX_LAURENT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <ordalex/arith.hpp>

namespace ordalex
{

using Exponent = std::vector<std::int64_t>;

// Graded lexicographic order: total degree first, ties broken lexicographically.
struct GrlexLess {
    bool operator()(const Exponent &a, const Exponent &b) const;
};

struct Term {
    Exponent exponent;
    Rational coeff;

    friend bool operator==(const Term &a, const Term &b)
    {
        return a.exponent == b.exponent && a.coeff == b.coeff;
    }
};

// Sparse element of Q[x_1^{+-1}, ..., x_k^{+-1}].
//
// Terms are kept sorted ascending in grlex order with no zero coefficients,
// so the leading term is the last one and equality is structural.
class LaurentPolynomial
{
public:
    explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPolynomial constant(std::size_t nvars, const Rational &c);
    static LaurentPolynomial monomial(Exponent e, const Rational &c = 1);
    static LaurentPolynomial variable(std::size_t nvars, std::size_t i);
    // Builds from arbitrary terms (duplicates summed, zeros dropped).
    static LaurentPolynomial from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_one() const;

    // Requires a nonzero polynomial.
    const Term &leading_term() const;
    const Rational &leading_coeff() const { return leading_term().coeff; }

    Rational coefficient(const Exponent &e) const;
    // Constant coefficient viewed as an element of Q; zero if absent.
    Rational constant_term() const;

    // Componentwise min/max of the support. Requires a nonzero polynomial.
    Exponent min_exponents() const;
    Exponent max_exponents() const;
    // Largest exponent of one variable (requires nonzero).
    std::int64_t degree_in(std::size_t var) const;
    std::int64_t min_degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;

    // Multiply by the monomial x^by.
    LaurentPolynomial shifted(const Exponent &by) const;
    // Apply the monomial substitution x^v -> x^{A v}, A square of size nvars.
    LaurentPolynomial substitute(const std::vector<std::vector<std::int64_t>> &a) const;
    LaurentPolynomial scaled(const Rational &c) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial &operator+=(const LaurentPolynomial &b);
    LaurentPolynomial &operator-=(const LaurentPolynomial &b);
    LaurentPolynomial &operator*=(const LaurentPolynomial &b);

    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Variables are named by `names` when given, otherwise x1, x2, ...
    std::string to_string(const std::vector<std::string> &names = {}) const;

private:
    std::size_t nvars_;
    std::vector<Term> terms_;

    friend LaurentPolynomial operator*(const LaurentPolynomial &, const LaurentPolynomial &);
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b);
LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);
LaurentPolynomial pow(const LaurentPolynomial &a, unsigned n);

enum class ArithmeticOp { add, sub, mul };
// Checked exact ring arithmetic; throws std::invalid_argument on a
// variable-count mismatch.
LaurentPolynomial laurent_arithmetic(const LaurentPolynomial &a, const LaurentPolynomial &b, ArithmeticOp op);

// a / b when b divides a in the Laurent ring, std::nullopt otherwise.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial &a, const LaurentPolynomial &b);

// Greatest common divisor in the Laurent ring, in canonical form.
// Throws std::invalid_argument when both inputs are zero.
LaurentPolynomial multivariate_gcd(const LaurentPolynomial &a, const LaurentPolynomial &b);

// Same gcd, but scaled monic (leading coefficient 1) with no monomial factor.
LaurentPolynomial monic_gcd(const LaurentPolynomial &a, const LaurentPolynomial &b);

// Canonical representative of p up to units +-x^v: integer coefficients with
// content 1, every variable's minimal exponent 0, positive grlex-leading
// coefficient. Zero maps to zero.
LaurentPolynomial canonical_form(const LaurentPolynomial &p);

// Shifts p by a monomial so each variable's minimal exponent is 0.
LaurentPolynomial strip_monomial(const LaurentPolynomial &p);

std::set<Exponent> newton_polytope_support(const LaurentPolynomial &p);

} // namespace ordalex

#endif
