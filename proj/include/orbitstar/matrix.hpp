#pragma once

#include "orbitstar/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

/// Dense row-major matrix over the Gaussian rationals. Sizes here are tiny
/// (Lie algebra dimension, small representations), so no attempt is made at
/// anything beyond schoolbook algorithms.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    Scalar determinant() const;
    /// Nullopt when singular.
    std::optional<Matrix> inverse() const;
    bool is_zero() const;
    /// The scalar lambda with *this == lambda * Id, if any.
    std::optional<Scalar> scalar_multiple_of_identity() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b)
{
    return a * b - b * a;
}

}  // namespace orbitstar
