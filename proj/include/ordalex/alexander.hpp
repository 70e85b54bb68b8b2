#ifndef ORDALEX_ALEXANDER_HPP
#define ORDALEX_ALEXANDER_HPP

#include <vector>

#include <ordalex/laurent.hpp>
#include <ordalex/systems.hpp>

namespace ordalex
{

using LaurentMatrix = Matrix<LaurentPolynomial>;

// Image of a free group ring element under x_i -> u^{images[i]} in Q[Z^n].
LaurentPolynomial push_to_abelian(const FreeGroupRingElement &a, const std::vector<Exponent> &images, std::size_t nvars);

// Fox Jacobian pushed into Q[Z^{k+1}] with variables (fiber..., t).
// Throws invalid_input for a non-abelian tower.
LaurentMatrix alexander_matrix(const GroupPresentation &p, const CoefficientSystem &sys);
// Same, in the coordinates of abelianization() (betti variables).
LaurentMatrix alexander_matrix(const GroupPresentation &p, const Abelianization &ab);

// gcd of all (g-1) x (g-1) minors, canonical form. g = cols. The variable
// count is read from the entries unless the matrix has none.
LaurentPolynomial multivariable_alexander_polynomial(const LaurentMatrix &m, std::size_t nvars = 0);

// Width of the Newton polytope in direction psi; throws invalid_input on delta = 0.
BigInt alexander_norm(const LaurentPolynomial &delta, const IntVector &psi);

struct AlexanderData {
    LaurentMatrix matrix;
    LaurentPolynomial delta;
    Abelianization abelian;
};

// Delta of G in the abelianization coordinates.
AlexanderData alexander_data(const GroupPresentation &p);

} // namespace ordalex

#endif
