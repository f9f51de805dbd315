#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "abelsub/error.hpp"
#include "abelsub/gauss.hpp"

namespace abelsub {

class AlgebraError : public Error {
public:
    using Error::Error;
};

// Dense matrix over Gaussian rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    // Rows given as nested lists; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<GaussScalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<GaussScalar>& data() const { return data_; }

    Matrix adjoint() const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const GaussScalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const GaussScalar& s) { return a *= s; }
    friend Matrix operator*(const GaussScalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend auto operator<=>(const Matrix& a, const Matrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussScalar> data_;
};

// Direct sum of full matrix rings M_{n1} (+) ... (+) M_{ns}.
class FinDimAlgebra {
public:
    FinDimAlgebra() = default;
    // Throws AlgebraError BadDimensions unless s >= 1 and every n_i >= 1.
    explicit FinDimAlgebra(std::vector<std::size_t> summand_dims);

    const std::vector<std::size_t>& summand_dims() const { return dims_; }
    std::size_t summands() const { return dims_.size(); }
    // Complex dimension, sum of n_i^2.
    std::size_t dimension() const;
    // Offset of summand s in the flattened coordinate vector.
    std::size_t offset(std::size_t s) const;

    friend bool operator==(const FinDimAlgebra&, const FinDimAlgebra&) = default;

private:
    std::vector<std::size_t> dims_;
};

class AlgElement {
public:
    AlgElement() = default;
    // Throws AlgebraError ShapeMismatch when block shapes differ from the algebra.
    AlgElement(FinDimAlgebra parent, std::vector<Matrix> blocks);

    static AlgElement zero(const FinDimAlgebra& a);
    static AlgElement identity(const FinDimAlgebra& a);
    static AlgElement matrix_unit(const FinDimAlgebra& a, std::size_t summand, std::size_t i, std::size_t j);
    // Identity of one summand, zero elsewhere: a minimal central projection.
    static AlgElement central_unit(const FinDimAlgebra& a, std::size_t summand);
    // Diagonal element from the concatenated diagonal entries of all blocks.
    static AlgElement diagonal(const FinDimAlgebra& a, const std::vector<GaussScalar>& entries);
    static AlgElement from_coords(const FinDimAlgebra& a, const std::vector<GaussScalar>& coords);

    const FinDimAlgebra& parent() const { return parent_; }
    const std::vector<Matrix>& blocks() const { return blocks_; }
    const Matrix& block(std::size_t s) const { return blocks_[s]; }

    std::vector<GaussScalar> coords() const;

    AlgElement adjoint() const;
    AlgElement transpose() const;
    bool is_zero() const;
    bool is_self_adjoint() const { return *this == adjoint(); }
    // p = p* = p^2, exactly.
    bool is_projection() const;

    // Throws AlgebraError ParentMismatch when parents differ.
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement& operator*=(const GaussScalar& s);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(AlgElement a, const GaussScalar& s) { return a *= s; }
    friend AlgElement operator*(const GaussScalar& s, AlgElement a) { return a *= s; }
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b);

    friend bool operator==(const AlgElement& a, const AlgElement& b) {
        return a.parent_ == b.parent_ && a.blocks_ == b.blocks_;
    }
    friend auto operator<=>(const AlgElement& a, const AlgElement& b) { return a.blocks_ <=> b.blocks_; }

    // "[[1,0],[0,0]] (+) [[1]]" using canonical scalar text.
    std::string to_string() const;

private:
    FinDimAlgebra parent_;
    std::vector<Matrix> blocks_;
};

void require_same_parent(const AlgElement& a, const AlgElement& b);

}  // namespace abelsub
