#include <ordalex/snf.hpp>

#include <algorithm>
#include <stdexcept>

namespace ordalex
{

IntMatrix int_identity(std::size_t n)
{
    return identity<BigInt>(n, BigInt(0), BigInt(1));
}

IntMatrix int_matrix(const std::vector<std::vector<long long>> &rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntMatrix m(r, c, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("int_matrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

IntVector mat_vec(const IntMatrix &m, const IntVector &v)
{
    if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    IntVector out(m.rows(), BigInt(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    }
    return out;
}

namespace
{

// row_a <- row_a - q * row_b, mirrored into U.
void row_sub(IntMatrix &a, IntMatrix &u, std::size_t ra, std::size_t rb, const BigInt &q)
{
    for (std::size_t j = 0; j < a.cols(); ++j) a(ra, j) -= q * a(rb, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(ra, j) -= q * u(rb, j);
}

void col_sub(IntMatrix &a, IntMatrix &v, std::size_t ca, std::size_t cb, const BigInt &q)
{
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, ca) -= q * a(i, cb);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, ca) -= q * v(i, cb);
}

} // namespace

SmithForm smith_normal_form_Z(const IntMatrix &m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = int_identity(rows);
    IntMatrix v = int_identity(cols);
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block.
            bool found = false;
            std::size_t pi = t, pj = t;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    BigInt x = abs(a(i, j));
                    if (!found || x < best) {
                        best = x;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            }
            if (!found) goto done;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q = floor_div(a(i, t), a(t, t));
                row_sub(a, u, i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q = floor_div(a(t, j), a(t, t));
                col_sub(a, v, j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        row_sub(a, u, t, i, BigInt(-1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
    }
done:
    SmithForm f;
    f.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.diagonal[i] = a(i, i);
    f.U = std::move(u);
    f.V = std::move(v);
    return f;
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector> &input, std::size_t dim)
{
    std::vector<IntVector> rows;
    for (const auto &r : input) {
        if (r.size() != dim) throw std::invalid_argument("lattice_basis: vector length mismatch");
        if (std::any_of(r.begin(), r.end(), [](const BigInt &x) { return x != 0; })) rows.push_back(r);
    }
    std::vector<IntVector> basis;
    std::size_t top = 0;
    for (std::size_t c = 0; c < dim && top < rows.size(); ++c) {
        // Euclid down column c among rows[top..].
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (piv == rows.size() || abs(rows[i][c]) < abs(rows[piv][c])) piv = i;
            }
            if (piv == rows.size()) break;
            std::swap(rows[top], rows[piv]);
            bool clean = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                BigInt q = floor_div(rows[i][c], rows[top][c]);
                for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= q * rows[top][j];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) {
                if (rows[top][c] < 0) {
                    for (auto &x : rows[top]) x = -x;
                }
                ++top;
                break;
            }
        }
    }
    rows.resize(top);
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t c = 0;
        while (rows[r][c] == 0) ++c;
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q = floor_div(rows[i][c], rows[r][c]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= q * rows[r][j];
        }
    }
    return rows;
}

BigInt determinant(const IntMatrix &m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix &m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: non-square matrix");
    const std::size_t n = m.rows();
    BigInt d = determinant(m);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular (det = " + d.get_str() + ")");
    // Gauss-Jordan over Q; the result is integral because det = +-1.
    Matrix<Rational> a(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a(p, c) == 0) ++p;
        a.swap_rows(c, p);
        Rational inv = 1 / a(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    IntMatrix out(n, n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j).get_num();
    }
    return out;
}

} // namespace ordalex
