#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abelsub/algebra.hpp"
#include "abelsub/gauss.hpp"

namespace abelsub {

using Vec = std::vector<GaussScalar>;

// Subspace of GaussScalar^n kept in reduced row echelon form. Each basis row
// remembers its expression in terms of the vectors passed to add(), so the
// span doubles as a solver for linear combinations.
class Span {
public:
    explicit Span(std::size_t ambient = 0) : n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    std::size_t generators() const { return gens_; }
    const std::vector<Vec>& basis() const { return rows_; }

    // Registers v as generator number generators(); returns true if the
    // dimension grew.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    // Writes v = sum c_g gen_g + remainder; remainder is zero iff v is in the span.
    Vec reduce(Vec v, Vec* coefficients = nullptr) const;
    std::optional<Vec> combination(const Vec& v) const;

    friend bool operator==(const Span& a, const Span& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    std::size_t n_;
    std::size_t gens_ = 0;
    std::vector<Vec> rows_;
    std::vector<Vec> coef_;
    std::vector<std::size_t> pivots_;
};

Span span_of(std::size_t ambient, const std::vector<Vec>& vs);
Span span_of(const FinDimAlgebra& a, const std::vector<AlgElement>& xs);

// Basis of {x : sum_j rows[i][j] x_j = 0 for all i}.
std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols);

// Coefficients c with target = sum c_i generators[i], if any exist.
std::optional<Vec> solve_combination(const std::vector<Vec>& generators, const Vec& target);

// Throws AlgebraError Singular.
Matrix inverse(const Matrix& m);

}  // namespace abelsub
