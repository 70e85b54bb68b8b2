#ifndef ORDALEX_DEGREE_HPP
#define ORDALEX_DEGREE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <ordalex/presentation.hpp>
#include <ordalex/skew.hpp>
#include <ordalex/systems.hpp>

namespace ordalex
{

struct DegreeReport {
    std::int64_t rank = 0; // r_Gamma
    std::int64_t delta = 0;
    std::size_t free_rank = 0;
    // t-spans of the nonzero diagonal entries, in order.
    std::vector<std::int64_t> spans;
    bool initial = false;
    bool zeroed = false; // r > 0, delta set to 0 by convention
    std::int64_t scaling = 1;
    std::size_t fiber_rank = 0;
    IntVector psi; // class on the generators
};

// Fox Jacobian of p pushed into K[t^{+-1}; sigma] through the system.
SkewMatrix skew_jacobian(const GroupPresentation &p, const CoefficientSystem &sys, const TowerPtr &tower);

// Validates the system (relators, surjectivity after dividing out the
// content of psi) and computes r and delta-bar from the relative module.
DegreeReport gamma_degree(const GroupPresentation &p, const CoefficientSystem &sys);

// G -> G / G_r^(2) for beta_1 = 1 and primitive psi. Throws unsupported when
// beta_1 != 1 or an invariant factor is not +-monic at both ends.
CoefficientSystem build_metabelian_system(const GroupPresentation &p, const CohomologyClass &psi);

// The coefficient system delta_n uses for level n in {0, 1} (psi primitive).
CoefficientSystem level_system(const GroupPresentation &p, const CohomologyClass &psi, int n);

// delta-bar_n(psi) for n in {0, 1}; a non-primitive class is computed on its
// primitive part and scaled.
DegreeReport delta_n(const GroupPresentation &p, const IntVector &values, int n);

} // namespace ordalex

#endif
