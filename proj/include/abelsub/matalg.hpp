#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abelsub/algebra.hpp"
#include "abelsub/linalg.hpp"
#include "abelsub/poset.hpp"

namespace abelsub {

AlgElement jordan_product(const AlgElement& a, const AlgElement& b);

// Basis of {x : xs = sx for all s in S}; S empty gives the whole algebra.
std::vector<AlgElement> commutant(const FinDimAlgebra& a, const std::vector<AlgElement>& s);
std::vector<AlgElement> double_commutant(const FinDimAlgebra& a, const std::vector<AlgElement>& s);

bool proj_leq(const AlgElement& p, const AlgElement& q);
// Projection onto the sum of the ranges.
AlgElement proj_join(const AlgElement& p, const AlgElement& q);
AlgElement proj_meet(const AlgElement& p, const AlgElement& q);
AlgElement proj_complement(const AlgElement& p);

// Pairwise orthogonal nonzero projections summing to 1. Atoms keep the order
// they were given in; comparison ignores that order.
class PartitionOfUnity {
public:
    PartitionOfUnity() = default;
    // Throws AlgebraError NotPartition.
    static PartitionOfUnity make(const FinDimAlgebra& parent, std::vector<AlgElement> atoms);
    static PartitionOfUnity trivial(const FinDimAlgebra& parent);

    const FinDimAlgebra& parent() const { return parent_; }
    const std::vector<AlgElement>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    // Every atom of this is a sum of atoms of other.
    bool coarser_than(const PartitionOfUnity& other) const;
    // Merge atoms along a grouping of atom indices.
    PartitionOfUnity merge(const std::vector<std::vector<std::size_t>>& groups) const;

    const std::vector<AlgElement>& sorted_atoms() const { return sorted_; }

    friend bool operator==(const PartitionOfUnity& a, const PartitionOfUnity& b) { return a.sorted_ == b.sorted_; }
    friend auto operator<=>(const PartitionOfUnity& a, const PartitionOfUnity& b) { return a.sorted_ <=> b.sorted_; }

private:
    FinDimAlgebra parent_;
    std::vector<AlgElement> atoms_;
    std::vector<AlgElement> sorted_;
};

// Sum of lambda_i p_i, atoms in the partition's given order.
AlgElement lambda_embed(const PartitionOfUnity& p, const std::vector<GaussScalar>& coeffs);

// All subset sums of the atoms, sorted.
std::vector<AlgElement> psi_project(const PartitionOfUnity& p);
// For a subalgebra given by a basis: the atoms of the unital *-algebra it
// generates. Throws AlgebraError NotAbelian or NonRationalSpectrum.
PartitionOfUnity atoms_of_abelian(const FinDimAlgebra& a, const std::vector<AlgElement>& basis);
std::vector<AlgElement> psi_project(const FinDimAlgebra& a, const std::vector<AlgElement>& basis);

class SpectralElement {
public:
    // Throws AlgebraError NotSpectral when eigenvalues repeat, are not real,
    // or the projections are not a partition of unity.
    static SpectralElement make(std::vector<std::pair<GaussScalar, AlgElement>> pairs);

    const std::vector<std::pair<GaussScalar, AlgElement>>& pairs() const { return pairs_; }
    AlgElement value() const;

private:
    std::vector<std::pair<GaussScalar, AlgElement>> pairs_;
};

// Minimal polynomial over the rationals, rational roots, Lagrange projections.
// Throws AlgebraError NotSelfAdjoint or NonRationalSpectrum.
SpectralElement spectral_decompose(const AlgElement& a);

struct NamedPartition {
    std::string name;
    PartitionOfUnity partition;
};

class AbelianFragment {
public:
    AbelianFragment() = default;
    // Adds the trivial partition as "1" when absent. Throws AlgebraError
    // DuplicatePartition when two names denote the same partition and
    // NotCoarseningClosed when closed is requested and fails.
    AbelianFragment(FinDimAlgebra parent, std::vector<NamedPartition> parts, bool require_closed = false);

    const FinDimAlgebra& parent() const { return parent_; }
    const std::vector<NamedPartition>& partitions() const { return parts_; }
    const NamedPartition* find(const std::string& name) const;
    const NamedPartition* find(const PartitionOfUnity& p) const;
    bool coarsening_closed() const;
    // Every projection occurring in some partition's Boolean algebra, sorted.
    std::vector<AlgElement> projections() const;

private:
    FinDimAlgebra parent_;
    std::vector<NamedPartition> parts_;
};

// Set partitions of {0..n-1} as lists of index groups, in restricted growth
// string order.
std::vector<std::vector<std::vector<std::size_t>>> atom_groupings(std::size_t n);

// Adds every merge of every partition, named "<parent>:<groups>" as in
// "d:01|2".
AbelianFragment coarsening_closure(const AbelianFragment& f);

Poset fragment_poset(const AbelianFragment& f);

bool is_type_I2_free(const FinDimAlgebra& a);

}  // namespace abelsub
