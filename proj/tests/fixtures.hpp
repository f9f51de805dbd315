#pragma once

// Algebras, fragments and maps shared by the pipeline tests and the
// acceptance binary.

#include <algorithm>
#include <string>
#include <vector>

#include "abelsub/jordan.hpp"
#include "abelsub/matalg.hpp"

namespace fixture {

using namespace abelsub;

inline GaussScalar q(long n, long d = 1) { return GaussScalar::ratio(n, d); }

inline std::size_t total_dim(const FinDimAlgebra& a) {
    std::size_t n = 0;
    for (auto d : a.summand_dims()) n += d;
    return n;
}

// Diagonal partition of the concatenated space, one atom label per coordinate.
inline PartitionOfUnity diagonal_partition(const FinDimAlgebra& a, const std::vector<int>& label) {
    int k = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<AlgElement> atoms;
    for (int b = 0; b < k; ++b) {
        std::vector<GaussScalar> e;
        for (int l : label) e.emplace_back(l == b ? 1 : 0);
        atoms.push_back(AlgElement::diagonal(a, e));
    }
    return PartitionOfUnity::make(a, atoms);
}

inline PartitionOfUnity finest_diagonal(const FinDimAlgebra& a) {
    std::vector<int> lab(total_dim(a));
    for (std::size_t i = 0; i < lab.size(); ++i) lab[i] = static_cast<int>(i);
    return diagonal_partition(a, lab);
}

// Identity with the first 2x2 corner of summand 0 replaced by m.
inline AlgElement corner(const FinDimAlgebra& a, const Matrix& m) {
    AlgElement u = AlgElement::identity(a);
    std::vector<Matrix> blocks = u.blocks();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) blocks[0](i, j) = m(i, j);
    return AlgElement(a, blocks);
}

// (1/5)[[3,4i],[4i,3]]: its conjugates of diagonal projections are not
// symmetric, so transpose and conjugation can be told apart.
inline AlgElement complex_rotation(const FinDimAlgebra& a) {
    Matrix w(2, 2);
    w(0, 0) = q(3, 5);
    w(0, 1) = GaussScalar(0, mpq_class(4, 5));
    w(1, 0) = GaussScalar(0, mpq_class(4, 5));
    w(1, 1) = q(3, 5);
    return corner(a, w);
}

// (1/5)[[3,4],[-4,3]].
inline AlgElement real_rotation(const FinDimAlgebra& a) {
    Matrix u(2, 2);
    u(0, 0) = q(3, 5);
    u(0, 1) = q(4, 5);
    u(1, 0) = q(-4, 5);
    u(1, 1) = q(3, 5);
    return corner(a, u);
}

// Cyclic permutation of the coordinates of summand 0.
inline AlgElement permutation(const FinDimAlgebra& a) {
    AlgElement u = AlgElement::zero(a);
    std::vector<Matrix> blocks = u.blocks();
    std::size_t n = a.summand_dims()[0];
    for (std::size_t i = 0; i < n; ++i) blocks[0]((i + 1) % n, i) = 1;
    for (std::size_t s = 1; s < blocks.size(); ++s) blocks[s] = Matrix::identity(a.summand_dims()[s]);
    return AlgElement(a, blocks);
}

inline PartitionOfUnity rotate(const PartitionOfUnity& p, const AlgElement& u) {
    std::vector<AlgElement> atoms;
    for (const auto& x : p.atoms()) atoms.push_back(u * x * u.adjoint());
    return PartitionOfUnity::make(p.parent(), atoms);
}

// Finest diagonal partition and its complex rotation, closed under merging.
inline AbelianFragment diagonal_plus_rotated(const FinDimAlgebra& a) {
    auto d = finest_diagonal(a);
    return coarsening_closure(AbelianFragment(a, {{"d", d}, {"r", rotate(d, complex_rotation(a))}}));
}

inline AbelianFragment diagonal_only(const FinDimAlgebra& a) {
    return coarsening_closure(AbelianFragment(a, {{"d", finest_diagonal(a)}}));
}

struct NamedMap {
    std::string name;
    JordanMap g;
};

inline std::vector<NamedMap> round_trip_maps(const FinDimAlgebra& a) {
    auto adu = JordanMap::conjugation(real_rotation(a));
    return {{"Ad(permutation)", JordanMap::conjugation(permutation(a))},
            {"Ad(rotation)", adu},
            {"transpose", JordanMap::transpose(a)},
            {"transpose∘Ad(rotation)", JordanMap::transpose(a).after(adu)}};
}

}  // namespace fixture
