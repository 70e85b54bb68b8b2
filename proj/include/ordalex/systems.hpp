#ifndef ORDALEX_SYSTEMS_HPP
#define ORDALEX_SYSTEMS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ordalex/presentation.hpp>
#include <ordalex/snf.hpp>

namespace ordalex
{

struct Abelianization {
    std::size_t betti = 0;
    // Nontrivial invariant factors (> 1) of the torsion subgroup.
    std::vector<BigInt> torsion;
    // Image of each generator in H_1(G) / torsion = Z^betti.
    std::vector<IntVector> projection;
    // Row i of `coords` turns a class given on generators into abelian
    // coordinates: psi' = coords * psi restricted to the free part.
    IntMatrix inverse_basis;
    std::vector<std::size_t> free_columns;
};

Abelianization abelianization(const GroupPresentation &p);

// A homomorphism G -> Z given by its values on the generators.
struct CohomologyClass {
    IntVector values;
    // values = multiplicity * primitive_values, multiplicity = gcd >= 0.
    BigInt multiplicity;
    IntVector primitive_values;

    bool is_primitive() const { return multiplicity == 1; }
    bool is_zero() const { return multiplicity == 0; }
};

// Throws invalid_input naming the first relator on which the values do not vanish.
CohomologyClass validate_class(const GroupPresentation &p, const IntVector &values);

// psi expressed in the coordinates of Z^betti used by abelianization().
IntVector abelian_coordinates(const Abelianization &ab, const IntVector &values);

// Z^k x|_M Z. k = 0 is the infinite cyclic group.
class PfaTower
{
public:
    PfaTower() : PfaTower(IntMatrix(0, 0, BigInt(0))) {}
    // Throws invalid_input unless m is square with determinant +-1.
    explicit PfaTower(IntMatrix m);
    static PfaTower identity_tower(std::size_t k);
    // Any nonsingular square matrix; only nonnegative powers are available.
    // Used for skew arithmetic with an injective but non-surjective sigma.
    static PfaTower endomorphism(IntMatrix m);

    std::size_t k() const noexcept { return m_.rows(); }
    const IntMatrix &monodromy() const noexcept { return m_; }
    bool invertible() const noexcept { return invertible_; }
    bool is_abelian() const;

    // M^e, cached, for any e (negative powers use the inverse).
    const IntMatrix &power(std::int64_t e) const;
    // Same matrix with machine entries; throws std::overflow_error if it does not fit.
    const std::vector<std::vector<std::int64_t>> &power64(std::int64_t e) const;

    friend bool operator==(const PfaTower &a, const PfaTower &b) { return a.m_ == b.m_; }

private:
    struct Cache;
    IntMatrix m_;
    bool invertible_ = true;
    std::shared_ptr<Cache> cache_;
};

// (v, e) stands for u^v t^e.
struct TowerElement {
    IntVector v;
    std::int64_t e = 0;

    friend bool operator==(const TowerElement &, const TowerElement &) = default;
};

TowerElement tower_identity(const PfaTower &t);
TowerElement tower_mul(const PfaTower &t, const TowerElement &a, const TowerElement &b);
TowerElement tower_inverse(const PfaTower &t, const TowerElement &a);
TowerElement tower_pow(const PfaTower &t, const TowerElement &a, std::int64_t n);

// A homomorphism G -> Z^k x|_M Z given on generators.
struct CoefficientSystem {
    PfaTower tower;
    std::vector<TowerElement> images;

    std::size_t k() const noexcept { return tower.k(); }
    IntVector psi() const;
};

TowerElement evaluate(const CoefficientSystem &sys, const FreeWord &w);
// Throws invalid_input if the image count is wrong, a vector has the wrong
// length, or a relator does not map to the identity.
void validate_system(const GroupPresentation &p, const CoefficientSystem &sys);
bool check_surjective(const CoefficientSystem &sys);

// Gamma_0 = Z^m written as Z^{m-1} x|_I Z with psi the last coordinate.
CoefficientSystem abelian_system(const GroupPresentation &p, const CohomologyClass &psi);

struct AdmissibleTriple {
    CoefficientSystem lambda;
    CoefficientSystem gamma;
    // Fiber part of the projection Lambda -> Gamma (k_gamma x k_lambda).
    IntMatrix alpha;
    bool initial = false;
};

// Validates the triple; when claimed_initial is given it must agree with k_gamma = 0.
AdmissibleTriple make_triple(const GroupPresentation &p, CoefficientSystem lambda, CoefficientSystem gamma,
                             IntMatrix alpha, std::optional<bool> claimed_initial = std::nullopt);

// Quotient of an abelian system by a surjection q: Z^k -> Z^j, j < k.
std::pair<CoefficientSystem, AdmissibleTriple> intermediate_abelian_quotient(const GroupPresentation &p,
                                                                             const CoefficientSystem &sys,
                                                                             const IntMatrix &q);

// Conjugates the tower by a unimodular fiber basis change: M -> P M P^-1, v -> P v.
CoefficientSystem change_fiber_basis(const CoefficientSystem &sys, const IntMatrix &p);

// Extends a class or a system over generators added by Tietze moves, where
// defs[j] is the word (in the original generators) the j-th new one stands for.
IntVector extend_class(const IntVector &values, const std::vector<FreeWord> &defs);
CoefficientSystem extend_system(const CoefficientSystem &sys, const std::vector<FreeWord> &defs);

// Text format:
//   k M11 ... M1k; ...; Mk1 ... Mkk
//   name: v1 ... vk ; e        (one line per generator)
CoefficientSystem parse_system(std::string_view text, const GroupPresentation &p);
std::string render_system(const CoefficientSystem &sys, const GroupPresentation &p);

} // namespace ordalex

#endif
