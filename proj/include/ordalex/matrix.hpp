#ifndef ORDALEX_MATRIX_HPP
#define ORDALEX_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ordalex
{

// Dense row-major matrix over an arbitrary (possibly noncommutative) ring.
//
// Ring elements only need value semantics plus +, -, *, == and a way to
// produce zero; products always keep the left-to-right factor order, so the
// free functions below stay correct over skew rings.
template <typename Scalar>
class Matrix
{
public:
    using scalar_type = Scalar;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Scalar &fill = Scalar{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }
    Matrix(std::initializer_list<std::initializer_list<Scalar>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto &row : init) {
            if (row.size() != cols_) {
                throw std::invalid_argument("Matrix: ragged initializer");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Scalar &operator()(std::size_t i, std::size_t j)
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Scalar &operator()(std::size_t i, std::size_t j) const
    {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }

    friend bool operator==(const Matrix &a, const Matrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

template <typename Scalar>
Matrix<Scalar> identity(std::size_t n, const Scalar &zero, const Scalar &one)
{
    Matrix<Scalar> m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = one;
    }
    return m;
}

template <typename Scalar>
Matrix<Scalar> transpose(const Matrix<Scalar> &a)
{
    if (a.rows() == 0 || a.cols() == 0) {
        return Matrix<Scalar>(a.cols(), a.rows());
    }
    Matrix<Scalar> t(a.cols(), a.rows(), a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t(j, i) = a(i, j);
        }
    }
    return t;
}

// a * b with an explicit zero, needed when the inner dimension is 0 or the
// scalar type has no context-free zero.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar> &a, const Matrix<Scalar> &b, const Scalar &zero)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    Matrix<Scalar> c(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar &aik = a(i, k);
            if (aik == zero) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) = c(i, j) + aik * b(k, j);
            }
        }
    }
    return c;
}

template <typename Scalar>
Matrix<Scalar> operator*(const Matrix<Scalar> &a, const Matrix<Scalar> &b)
{
    return multiply(a, b, Scalar{});
}

template <typename Scalar>
Matrix<Scalar> operator+(const Matrix<Scalar> &a, const Matrix<Scalar> &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("operator+: dimension mismatch");
    }
    Matrix<Scalar> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) + b(i, j);
        }
    }
    return c;
}

template <typename Scalar>
std::vector<Scalar> row(const Matrix<Scalar> &a, std::size_t i)
{
    std::vector<Scalar> r;
    r.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        r.push_back(a(i, j));
    }
    return r;
}

template <typename Scalar>
std::vector<Scalar> col(const Matrix<Scalar> &a, std::size_t j)
{
    std::vector<Scalar> c;
    c.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        c.push_back(a(i, j));
    }
    return c;
}

// Entrywise ring homomorphism.
template <typename F, typename Scalar>
auto map_entries(const Matrix<Scalar> &a, F &&f) -> Matrix<decltype(f(a(0, 0)))>
{
    using Out = decltype(f(a(0, 0)));
    std::vector<Out> entries;
    entries.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            entries.push_back(f(a(i, j)));
        }
    }
    if (entries.empty()) {
        return Matrix<Out>(a.rows(), a.cols());
    }
    Matrix<Out> out(a.rows(), a.cols(), entries.front());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = std::move(entries[i * a.cols() + j]);
        }
    }
    return out;
}

} // namespace ordalex

#endif
