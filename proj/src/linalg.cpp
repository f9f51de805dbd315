#include "abelsub/linalg.hpp"

namespace abelsub {

namespace {

std::size_t leading(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

void axpy(Vec& y, const GaussScalar& a, const Vec& x) {
    if (y.size() < x.size()) y.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] -= a * x[i];
}

}  // namespace

Vec Span::reduce(Vec v, Vec* coefficients) const {
    if (v.size() != n_) throw AlgebraError("ShapeMismatch", "vector length differs from ambient dimension");
    Vec c(gens_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        GaussScalar a = v[pivots_[r]];
        if (a.is_zero()) continue;
        axpy(v, a, rows_[r]);
        // v_new = v - a row; so v = v_new + a row and row = sum coef gen
        for (std::size_t g = 0; g < coef_[r].size(); ++g)
            if (!coef_[r][g].is_zero()) c[g] += a * coef_[r][g];
    }
    if (coefficients) *coefficients = std::move(c);
    return v;
}

bool Span::add(const Vec& v) {
    Vec c;
    Vec rem = reduce(v, &c);
    std::size_t g = gens_++;
    std::size_t p = leading(rem);
    if (p == rem.size()) return false;
    // rem = v - sum c gen, as a combination of generators
    Vec rc(gens_);
    for (std::size_t k = 0; k < c.size(); ++k) rc[k] = -c[k];
    rc[g] = 1;
    GaussScalar inv = GaussScalar(1) / rem[p];
    for (auto& x : rem) x *= inv;
    for (auto& x : rc) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        GaussScalar a = rows_[r][p];
        if (a.is_zero()) continue;
        axpy(rows_[r], a, rem);
        axpy(coef_[r], a, rc);
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(rem));
    coef_.insert(coef_.begin() + at, std::move(rc));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
}

bool Span::contains(const Vec& v) const {
    Vec rem = reduce(v);
    return leading(rem) == rem.size();
}

std::optional<Vec> Span::combination(const Vec& v) const {
    Vec c;
    Vec rem = reduce(v, &c);
    if (leading(rem) != rem.size()) return std::nullopt;
    return c;
}

Span span_of(std::size_t ambient, const std::vector<Vec>& vs) {
    Span s(ambient);
    for (const auto& v : vs) s.add(v);
    return s;
}

Span span_of(const FinDimAlgebra& a, const std::vector<AlgElement>& xs) {
    Span s(a.dimension());
    for (const auto& x : xs) {
        if (!(x.parent() == a)) throw AlgebraError("ParentMismatch", "element of a different algebra");
        s.add(x.coords());
    }
    return s;
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t ncols) {
    Span s(ncols);
    for (const auto& r : rows) s.add(r);
    const auto& b = s.basis();
    std::vector<bool> pivot(ncols, false);
    std::vector<std::size_t> pcol;
    for (const auto& r : b) {
        std::size_t p = leading(r);
        pivot[p] = true;
        pcol.push_back(p);
    }
    std::vector<Vec> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (pivot[f]) continue;
        Vec x(ncols);
        x[f] = 1;
        for (std::size_t r = 0; r < b.size(); ++r) x[pcol[r]] = -b[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Vec> solve_combination(const std::vector<Vec>& generators, const Vec& target) {
    Span s(target.size());
    for (const auto& g : generators) s.add(g);
    return s.combination(target);
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw AlgebraError("Singular", "non-square matrix");
    std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw AlgebraError("Singular", "matrix is not invertible");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        GaussScalar s = GaussScalar(1) / a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            GaussScalar f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace abelsub
