#ifndef ORDALEX_PRESENTATION_HPP
#define ORDALEX_PRESENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <ordalex/arith.hpp>
#include <ordalex/matrix.hpp>

namespace ordalex
{

struct Letter {
    std::size_t generator;
    std::int64_t exponent;

    friend auto operator<=>(const Letter &, const Letter &) = default;
};

// Element of the free group on the generators, stored as runs x_i^n.
// After free_reduce adjacent runs have distinct generators and every
// exponent is nonzero.
class FreeWord
{
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    static FreeWord generator(std::size_t i, std::int64_t exponent = 1);

    const std::vector<Letter> &letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    // Sum of |exponent| over all runs.
    std::int64_t length() const;
    // Exponent sum of generator i.
    std::int64_t exponent_sum(std::size_t i) const;

    FreeWord inverse() const;

    friend auto operator<=>(const FreeWord &, const FreeWord &) = default;
    friend bool operator==(const FreeWord &, const FreeWord &) = default;

private:
    std::vector<Letter> letters_;
};

FreeWord free_reduce(const FreeWord &w);
// Freely reduced product.
FreeWord operator*(const FreeWord &a, const FreeWord &b);
FreeWord power(const FreeWord &w, std::int64_t n);
// [a, b] = a b a^-1 b^-1
FreeWord commutator(const FreeWord &a, const FreeWord &b);

class GroupPresentation
{
public:
    GroupPresentation() = default;
    // Relators are freely reduced; throws invalid_input on duplicate names or
    // out-of-range generator indices.
    GroupPresentation(std::vector<std::string> generators, std::vector<FreeWord> relators);

    const std::vector<std::string> &generators() const noexcept { return generators_; }
    const std::vector<FreeWord> &relators() const noexcept { return relators_; }
    std::size_t generator_count() const noexcept { return generators_.size(); }
    std::size_t relator_count() const noexcept { return relators_.size(); }
    // g - s; a lower bound for the deficiency of the group, never equal by claim.
    std::int64_t presentation_deficiency() const
    {
        return static_cast<std::int64_t>(generators_.size()) - static_cast<std::int64_t>(relators_.size());
    }
    // Index of a generator name, or generator_count() when absent.
    std::size_t index_of(std::string_view name) const;

    friend bool operator==(const GroupPresentation &, const GroupPresentation &) = default;

private:
    std::vector<std::string> generators_;
    std::vector<FreeWord> relators_;
};

// Parses the presentation grammar:
//   < x, y | x y x = y x y, [x, y^-1]^2, (x y)^3 >
// with '#' comments. Equations w1 = w2 become w1 w2^-1.
GroupPresentation parse_presentation(std::string_view text);
// Parses a single word over known generators (used by map files).
FreeWord parse_word(std::string_view text, const std::vector<std::string> &generators);

std::string render_word(const FreeWord &w, const std::vector<std::string> &names);
std::string render(const GroupPresentation &p);

// Element of the integral free group ring ZF.
class FreeGroupRingElement
{
public:
    FreeGroupRingElement() = default;
    static FreeGroupRingElement word(const FreeWord &w, const BigInt &c = 1);

    const std::map<FreeWord, BigInt> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add(const FreeWord &w, const BigInt &c);

    FreeGroupRingElement &operator+=(const FreeGroupRingElement &b);
    FreeGroupRingElement &operator-=(const FreeGroupRingElement &b);
    friend FreeGroupRingElement operator+(FreeGroupRingElement a, const FreeGroupRingElement &b)
    {
        a += b;
        return a;
    }
    friend FreeGroupRingElement operator-(FreeGroupRingElement a, const FreeGroupRingElement &b)
    {
        a -= b;
        return a;
    }
    friend FreeGroupRingElement operator*(const FreeGroupRingElement &a, const FreeGroupRingElement &b);
    friend bool operator==(const FreeGroupRingElement &, const FreeGroupRingElement &) = default;

    std::string to_string(const std::vector<std::string> &names) const;

private:
    std::map<FreeWord, BigInt> terms_;
};

// Left Fox derivative: d(uv)/dx = du/dx + u dv/dx.
FreeGroupRingElement fox_derivative(const FreeWord &w, std::size_t i);
// s x g matrix of d r_i / d x_j.
Matrix<FreeGroupRingElement> fox_jacobian(const GroupPresentation &p);

struct TietzeResult {
    GroupPresentation presentation;
    // Every added generator (in order, appended after the original ones)
    // expressed as a word in the original generators.
    std::vector<FreeWord> definitions;
};

// Random sequence of isomorphism-preserving moves; deterministic in seed.
GroupPresentation tietze_perturb(const GroupPresentation &p, std::uint64_t seed);
TietzeResult tietze_perturb_traced(const GroupPresentation &p, std::uint64_t seed);

} // namespace ordalex

#endif
