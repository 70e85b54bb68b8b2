#ifndef ORDALEX_SNF_HPP
#define ORDALEX_SNF_HPP

#include <cstddef>
#include <vector>

#include <ordalex/arith.hpp>
#include <ordalex/matrix.hpp>

namespace ordalex
{

using IntMatrix = Matrix<BigInt>;

struct SmithForm {
    // min(rows, cols) entries, nonnegative, each dividing the next.
    std::vector<BigInt> diagonal;
    IntMatrix U; // rows x rows, unimodular
    IntMatrix V; // cols x cols, unimodular
};

// U * m * V = diag(diagonal).
SmithForm smith_normal_form_Z(const IntMatrix &m);

// Row-style Hermite normal form basis of the lattice spanned by `rows`
// (vectors of length dim). The result is unique for a given lattice.
std::vector<IntVector> lattice_basis(const std::vector<IntVector> &rows, std::size_t dim);

BigInt determinant(const IntMatrix &m);

IntMatrix int_identity(std::size_t n);
IntMatrix int_matrix(const std::vector<std::vector<long long>> &rows);
IntVector mat_vec(const IntMatrix &m, const IntVector &v);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix &m);

} // namespace ordalex

#endif
