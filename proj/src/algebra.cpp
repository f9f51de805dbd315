#include "abelsub/algebra.hpp"

#include <numeric>
#include <sstream>

namespace abelsub {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussScalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw AlgebraError("ShapeMismatch", "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("ShapeMismatch", "matrix sum of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("ShapeMismatch", "matrix difference of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const GaussScalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError("ShapeMismatch", "matrix product of incompatible shapes");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussScalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
        }
    return m;
}

// ---------------------------------------------------------------------------

FinDimAlgebra::FinDimAlgebra(std::vector<std::size_t> summand_dims) : dims_(std::move(summand_dims)) {
    if (dims_.empty()) throw AlgebraError("BadDimensions", "an algebra needs at least one summand");
    for (std::size_t n : dims_)
        if (n == 0) throw AlgebraError("BadDimensions", "summand dimensions must be positive");
}

std::size_t FinDimAlgebra::dimension() const {
    std::size_t d = 0;
    for (std::size_t n : dims_) d += n * n;
    return d;
}

std::size_t FinDimAlgebra::offset(std::size_t s) const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < s; ++i) d += dims_[i] * dims_[i];
    return d;
}

// ---------------------------------------------------------------------------

AlgElement::AlgElement(FinDimAlgebra parent, std::vector<Matrix> blocks)
    : parent_(std::move(parent)), blocks_(std::move(blocks)) {
    const auto& dims = parent_.summand_dims();
    if (blocks_.size() != dims.size())
        throw AlgebraError("ShapeMismatch", "element has " + std::to_string(blocks_.size()) + " blocks, algebra has " +
                                                std::to_string(dims.size()) + " summands");
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (blocks_[s].rows() != dims[s] || blocks_[s].cols() != dims[s])
            throw AlgebraError("ShapeMismatch", "block " + std::to_string(s) + " is not " + std::to_string(dims[s]) +
                                                    "x" + std::to_string(dims[s]));
}

AlgElement AlgElement::zero(const FinDimAlgebra& a) {
    std::vector<Matrix> blocks;
    for (std::size_t n : a.summand_dims()) blocks.emplace_back(n, n);
    return AlgElement(a, std::move(blocks));
}

AlgElement AlgElement::identity(const FinDimAlgebra& a) {
    std::vector<Matrix> blocks;
    for (std::size_t n : a.summand_dims()) blocks.push_back(Matrix::identity(n));
    return AlgElement(a, std::move(blocks));
}

AlgElement AlgElement::matrix_unit(const FinDimAlgebra& a, std::size_t summand, std::size_t i, std::size_t j) {
    AlgElement e = zero(a);
    e.blocks_.at(summand)(i, j) = 1;
    return e;
}

AlgElement AlgElement::central_unit(const FinDimAlgebra& a, std::size_t summand) {
    AlgElement e = zero(a);
    e.blocks_.at(summand) = Matrix::identity(a.summand_dims()[summand]);
    return e;
}

AlgElement AlgElement::diagonal(const FinDimAlgebra& a, const std::vector<GaussScalar>& entries) {
    AlgElement e = zero(a);
    std::size_t k = 0;
    for (std::size_t s = 0; s < a.summands(); ++s)
        for (std::size_t i = 0; i < a.summand_dims()[s]; ++i) {
            if (k >= entries.size()) throw AlgebraError("ArityMismatch", "too few diagonal entries");
            e.blocks_[s](i, i) = entries[k++];
        }
    if (k != entries.size()) throw AlgebraError("ArityMismatch", "too many diagonal entries");
    return e;
}

AlgElement AlgElement::from_coords(const FinDimAlgebra& a, const std::vector<GaussScalar>& coords) {
    if (coords.size() != a.dimension()) throw AlgebraError("ShapeMismatch", "coordinate vector has wrong length");
    AlgElement e = zero(a);
    std::size_t k = 0;
    for (auto& b : e.blocks_)
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = coords[k++];
    return e;
}

std::vector<GaussScalar> AlgElement::coords() const {
    std::vector<GaussScalar> v;
    v.reserve(parent_.dimension());
    for (const auto& b : blocks_) v.insert(v.end(), b.data().begin(), b.data().end());
    return v;
}

AlgElement AlgElement::adjoint() const {
    AlgElement e = *this;
    for (auto& b : e.blocks_) b = b.adjoint();
    return e;
}

AlgElement AlgElement::transpose() const {
    AlgElement e = *this;
    for (auto& b : e.blocks_) b = b.transpose();
    return e;
}

bool AlgElement::is_zero() const {
    for (const auto& b : blocks_)
        if (!b.is_zero()) return false;
    return true;
}

bool AlgElement::is_projection() const { return is_self_adjoint() && (*this) * (*this) == *this; }

void require_same_parent(const AlgElement& a, const AlgElement& b) {
    if (!(a.parent() == b.parent())) throw AlgebraError("ParentMismatch", "elements of different algebras");
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    require_same_parent(*this, o);
    for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] += o.blocks_[s];
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    require_same_parent(*this, o);
    for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] -= o.blocks_[s];
    return *this;
}

AlgElement& AlgElement::operator*=(const GaussScalar& s) {
    for (auto& b : blocks_) b *= s;
    return *this;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
    require_same_parent(a, b);
    AlgElement e = a;
    for (std::size_t s = 0; s < e.blocks_.size(); ++s) e.blocks_[s] = a.blocks_[s] * b.blocks_[s];
    return e;
}

std::string AlgElement::to_string() const {
    std::ostringstream out;
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
        if (s) out << " (+) ";
        const Matrix& m = blocks_[s];
        out << '[';
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out << (r ? ",[" : "[");
            for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m(r, c).to_string();
            out << ']';
        }
        out << ']';
    }
    return out.str();
}

}  // namespace abelsub
