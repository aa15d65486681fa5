#pragma once

#include "orbitkit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace orbitkit {

using RatVector = std::vector<Rational>;

RatVector zero_vector(std::size_t n);
/// i-th standard basis vector of length n (0-based).
RatVector unit_vector(std::size_t n, std::size_t i);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);
RatVector concat(std::span<const Rational> a, std::span<const Rational> b);
RatVector scaled(std::span<const Rational> v, const Rational& factor);

/// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(std::span<const Rational> entries);
    /// Matrix unit E_ij (0-based) of the given square size.
    static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatVector row(std::size_t r) const;
    RatVector col(std::size_t c) const;

    RatMatrix transpose() const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

    bool is_zero() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend RatVector operator*(const RatMatrix& a, std::span<const Rational> v);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Block diagonal matrix diag(a, b).
RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);
/// Square matrix assembled from four blocks [[a, b], [c, d]].
RatMatrix block_matrix(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d);

Rational trace(const RatMatrix& m);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Exact determinant. Rows are cleared to integers and reduced with Bareiss elimination,
/// so no intermediate fraction arithmetic happens. Throws DimensionError if not square.
Rational exact_det(const RatMatrix& m);

/// Exact rank over Q, via the same fraction-free elimination.
std::size_t exact_rank(const RatMatrix& m);

/// Exact inverse by Gauss-Jordan. Throws SingularMatrix / DimensionError.
RatMatrix inverse(const RatMatrix& m);

/// Flatten a square matrix into a single row vector (row-major), used for span tests.
RatVector flatten(const RatMatrix& m);

}  // namespace orbitkit
