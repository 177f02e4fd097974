#include "orbitstar/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace orbitstar {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Scalar Matrix::determinant() const
{
    if (!is_square())
        throw std::invalid_argument("determinant of non-square matrix");
    Matrix a = *this;
    Scalar det = 1;
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Scalar();
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        Scalar inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            Scalar f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (!is_square())
        throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(a(pivot, c), a(col, c));
            std::swap(inv(pivot, c), inv(col, c));
        }
        Scalar p = a(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) *= p;
            inv(col, c) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero())
                continue;
            Scalar f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

bool Matrix::is_zero() const
{
    for (const auto& s : data_)
        if (!s.is_zero())
            return false;
    return true;
}

std::optional<Scalar> Matrix::scalar_multiple_of_identity() const
{
    if (!is_square())
        return std::nullopt;
    Scalar lambda = rows_ == 0 ? Scalar() : (*this)(0, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!((*this)(r, c) == (r == c ? lambda : Scalar())))
                return std::nullopt;
    return lambda;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix size mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                out(r, c) += x * b(k, c);
        }
    return out;
}

std::string Matrix::to_string() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0)
                out += ", ";
            out += (*this)(r, c).to_string();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace orbitstar
