#pragma once

// Exact integer / rational matrix algebra on top of GMP.
//
// Matrices are dense and row-major. Vectors are plain std::vector. Unless
// stated otherwise a matrix acts on column vectors (y = M x); lattice bases
// are stored as rows.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "k3twist/errors.hpp"

namespace k3twist {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_)
                throw ValidationError("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    // Builds a matrix from row vectors; cols is needed when rows is empty.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
        if (!rows.empty())
            cols = rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw ValidationError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    std::vector<T> col_vector(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }
    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back(row_vector(i));
        return out;
    }

    void append_row(std::span<const T> r) {
        if (rows_ == 0 && cols_ == 0)
            cols_ = r.size();
        if (r.size() != cols_)
            throw ValidationError("appended row has wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ValidationError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ValidationError("matrix sum shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i)
            c.data_[i] += b.data_[i];
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);
RatVec to_rational(const IntVec& v);
// Throws PreconditionError when an entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatMatrix& m);
bool is_integral(const RatVec& v);
std::optional<IntVec> integral_vector(const RatVec& v);

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, std::span<const T> x) {
    if (m.cols() != x.size())
        throw ValidationError("matrix-vector shape mismatch");
    std::vector<T> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            y[i] += m(i, j) * x[j];
    return y;
}

template <typename T>
std::vector<T> vec_mat(std::span<const T> x, const Matrix<T>& m) {
    if (m.rows() != x.size())
        throw ValidationError("vector-matrix shape mismatch");
    std::vector<T> y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            y[j] += x[i] * m(i, j);
    }
    return y;
}

// xᵀ G y
template <typename T>
T bilinear(const Matrix<T>& gram, std::span<const T> x, std::span<const T> y) {
    if (gram.rows() != x.size() || gram.cols() != y.size())
        throw ValidationError("bilinear form shape mismatch");
    T acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        T row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            row += gram(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

// B G Bᵀ for a basis stored as rows.
template <typename T>
Matrix<T> congruence(const Matrix<T>& basis, const Matrix<T>& gram) {
    return basis * gram * basis.transpose();
}

// gcd of all entries (non-negative; 0 for the zero vector).
Int content(std::span<const Int> v);
bool is_primitive(std::span<const Int> v);

// Row Hermite normal form: u unimodular, u·m = h. Nonzero rows of h come
// first, pivots are positive and entries above a pivot lie in [0, pivot).
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
};
HermiteForm hermite_form(const IntMatrix& m);

// u·m·v = s, s diagonal with non-negative d₁ | d₂ | ...
struct SmithForm {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> diagonal() const;
};
SmithForm smith_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
Int determinant(const IntMatrix& m);
// Throws PreconditionError for singular input.
RatMatrix inverse(const RatMatrix& m);

// Saturated basis (rows, in Hermite form) of {x ∈ ℤⁿ : m·x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Primitive closure of the row span of `basis`, as an HNF basis.
IntMatrix saturate(const IntMatrix& basis);

// Integer coefficients c with c·basis = target, if any. When the rows of
// `basis` are dependent the solution is reduced modulo the Hermite basis of
// the relation lattice, so the answer is a canonical coset representative.
std::optional<IntVec> solve_in_row_span(const IntMatrix& basis, std::span<const Int> target);

// True iff `v` lies in the ℚ-span of the rows of `basis`.
bool in_rational_span(const IntMatrix& basis, std::span<const Rat> v);

// Rational coordinates of v with respect to independent rows of `basis`.
std::optional<RatVec> rational_coordinates(const IntMatrix& basis, std::span<const Rat> v);

struct Inertia {
    std::size_t pos = 0;
    std::size_t neg = 0;
    std::size_t zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia signature(const RatMatrix& gram);
Inertia signature(const IntMatrix& gram);

// Invariant factors > 1 of coker(gram), ascending.
std::vector<Int> discriminant_group(const IntMatrix& gram);

// Saturated basis of {x : xᵀ·gram·vᵢ = 0 for every row vᵢ}.
IntMatrix orthogonal_complement(const IntMatrix& ambient_gram, const IntMatrix& vectors);

// Exact LDLᵀ of a positive-definite matrix; throws PreconditionError if the
// decomposition meets a non-positive pivot.
struct LdlFactor {
    RatMatrix l; // unit lower triangular
    RatVec d;
};
LdlFactor ldl_positive_definite(const RatMatrix& gram);

// All nonzero x ∈ ℤⁿ with xᵀ·gram·x ≤ bound, one per ±pair (first nonzero
// coordinate positive), sorted lexicographically.
std::vector<IntVec> short_vectors(const RatMatrix& gram, const Rat& bound);

} // namespace k3twist
