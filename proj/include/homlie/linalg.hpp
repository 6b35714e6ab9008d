#pragma once

#include "homlie/field.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlie {

using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
/// v += s * w, skipping the work when s is zero.
void axpy(Vector& v, const Scalar& s, const Vector& w);

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Builds from rows; all rows must share a length, which becomes `cols`.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Vector apply(const Vector& v) const;

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Reduced row echelon form with zero rows dropped.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);
/// Inverse of a square matrix, or throws DimensionError when singular.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/*
 * A subspace of F^n, stored by its canonical basis: the RREF of any spanning
 * set with zero rows removed. Two Subspace values are equal as sets exactly
 * when their stored bases are identical, so operator== is set equality.
 */
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim_; }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const;
    /// Pivot column of each basis row, strictly increasing.
    std::vector<std::size_t> pivots() const;
    /// Coordinates of v (which must lie in the subspace) in the canonical basis.
    Vector coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    friend Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    std::size_t ambient_dim_ = 0;
    Matrix basis_;
};

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);
bool is_subspace_of(const Subspace& a, const Subspace& b);
/// Unit vectors at the non-pivot columns of a's basis.
std::vector<Vector> complement_basis(const Subspace& a);
/// m(a) = span of the images of a's basis.
Subspace apply_map(const Matrix& m, const Subspace& a);

/// Removes from v its components along the pivots of a, leaving zeros at every pivot column.
Vector reduce_modulo(const Subspace& a, Vector v);

} // namespace homlie
