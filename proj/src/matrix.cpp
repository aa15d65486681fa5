#include "orbitkit/matrix.hpp"

#include "orbitkit/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace orbitkit {

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

RatVector unit_vector(std::size_t n, std::size_t i)
{
    RatVector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) {
        throw DimensionError("dot: length mismatch " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

RatVector concat(std::span<const Rational> a, std::span<const Rational> b)
{
    RatVector out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

RatVector scaled(std::span<const Rational> v, const Rational& factor)
{
    RatVector out;
    out.reserve(v.size());
    for (const auto& e : v) {
        out.emplace_back(e * factor);
    }
    return out;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rational> entries)
{
    RatMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t i, std::size_t j)
{
    RatMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows)
{
    if (rows.empty()) {
        return {};
    }
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw DimensionError("from_rows: ragged rows");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
    }
    return m;
}

RatVector RatMatrix::row(std::size_t r) const
{
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t c) const
{
    RatVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw DimensionError("block out of range");
    }
    RatMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) {
            b(r, c) = (*this)(r0 + r, c0 + c);
        }
    }
    return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
        throw DimensionError("set_block out of range");
    }
    for (std::size_t r = 0; r < b.rows_; ++r) {
        for (std::size_t c = 0; c < b.cols_; ++c) {
            (*this)(r0 + r, c0 + c) = b(r, c);
        }
    }
}

bool RatMatrix::is_zero() const { return orbitkit::is_zero(data_); }

bool operator==(const RatMatrix& a, const RatMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch");
    }
}

}  // namespace

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    require_same_shape(a, b, "operator+");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
{
    require_same_shape(a, b, "operator-");
    RatMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

RatMatrix operator-(const RatMatrix& a)
{
    RatMatrix out = a;
    for (auto& e : out.data_) {
        e = -e;
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                             " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) != 0) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a)
{
    RatMatrix out = a;
    for (auto& e : out.data_) {
        e *= s;
    }
    return out;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> v)
{
    if (a.cols_ != v.size()) {
        throw DimensionError("matrix-vector product: " + std::to_string(a.cols_) + " columns vs length " +
                             std::to_string(v.size()));
    }
    RatVector out = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) != 0 && v[k] != 0) {
                out[i] += a(i, k) * v[k];
            }
        }
    }
    return out;
}

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

RatMatrix block_matrix(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d)
{
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
        throw DimensionError("block_matrix: incompatible blocks");
    }
    RatMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    m.set_block(a.rows(), 0, c);
    m.set_block(a.rows(), a.cols(), d);
    return m;
}

Rational trace(const RatMatrix& m)
{
    if (!m.is_square()) {
        throw DimensionError("trace of non-square matrix");
    }
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        t += m(i, i);
    }
    return t;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

RatVector flatten(const RatMatrix& m)
{
    RatVector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            v.push_back(m(r, c));
        }
    }
    return v;
}

namespace {

/// Integer matrix with each row multiplied by the lcm of its denominators.
/// Returns the product of the row scales so callers can undo it for determinants.
struct IntegerForm {
    std::vector<std::vector<BigInt>> rows;
    BigInt scale = 1;
};

IntegerForm clear_denominators(const RatMatrix& m)
{
    IntegerForm f;
    f.rows.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        f.rows[r].resize(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            f.rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
        f.scale *= l;
    }
    return f;
}

/// Bareiss fraction-free elimination in place. Returns the rank; `swaps` counts row exchanges.
/// After elimination on a square full-rank matrix the last pivot is the determinant (up to sign).
std::size_t bareiss(std::vector<std::vector<BigInt>>& a, std::size_t cols, std::size_t& swaps)
{
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    BigInt prev = 1;
    swaps = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            ++swaps;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                BigInt v = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[r][k] = std::move(v);
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace

Rational exact_det(const RatMatrix& m)
{
    if (!m.is_square()) {
        throw DimensionError("exact_det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntegerForm f = clear_denominators(m);
    std::size_t swaps = 0;
    const std::size_t rank = bareiss(f.rows, n, swaps);
    if (rank < n) {
        return 0;
    }
    Rational det(f.rows[n - 1][n - 1], f.scale);
    det.canonicalize();
    return swaps % 2 == 0 ? det : Rational(-det);
}

std::size_t exact_rank(const RatMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    IntegerForm f = clear_denominators(m);
    std::size_t swaps = 0;
    return bareiss(f.rows, m.cols(), swaps);
}

RatMatrix inverse(const RatMatrix& m)
{
    if (!m.is_square()) {
        throw DimensionError("inverse of non-square matrix");
    }
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrix("inverse: matrix is singular");
        }
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(pivot, k), a(c, k));
                std::swap(inv(pivot, k), inv(c, k));
            }
        }
        const Rational p = a(c, c);
        for (std::size_t k = 0; k < n; ++k) {
            a(c, k) /= p;
            inv(c, k) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) {
                continue;
            }
            const Rational f = a(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                if (a(c, k) != 0) {
                    a(r, k) -= f * a(c, k);
                }
                if (inv(c, k) != 0) {
                    inv(r, k) -= f * inv(c, k);
                }
            }
        }
    }
    return inv;
}

}  // namespace orbitkit
