#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abelsub/error.hpp"
#include "abelsub/oml.hpp"
#include "abelsub/poset.hpp"

namespace abelsub {

class ReconstructError : public Error {
public:
    using Error::Error;
};

// Order-isomorphism BSub(L) -> BSub(M) whose labels resolve to member sets.
class BsubIso {
public:
    // Checks the order-isomorphism, that the trivial subalgebra goes to the
    // trivial one and that 4-element subalgebras go to 4-element ones.
    // Throws PosetError from the iso check, ReconstructError InconsistentLevels.
    static BsubIso make(BsubPoset left, BsubPoset right, std::vector<std::size_t> map);
    static BsubIso identity(const BsubPoset& side);

    const BsubPoset& left() const { return left_; }
    const BsubPoset& right() const { return right_; }
    const OrderIso& map() const { return j_; }
    std::size_t operator()(std::size_t d) const { return j_(d); }

private:
    BsubIso(BsubPoset l, BsubPoset r, OrderIso j) : left_(std::move(l)), right_(std::move(r)), j_(std::move(j)) {}

    BsubPoset left_;
    BsubPoset right_;
    OrderIso j_;
};

// Bijection of carriers preserving order both ways and the orthocomplement.
class OmlIso {
public:
    // Throws ReconstructError NotOmlIso naming the failing pair.
    static OmlIso make(OmlPtr source, OmlPtr target, std::vector<std::size_t> map);

    const Oml& source() const { return *source_; }
    const Oml& target() const { return *target_; }
    const std::vector<std::size_t>& map() const { return map_; }
    std::size_t operator()(std::size_t x) const { return map_[x]; }

    // "a->b, c->c', ..." for reports, in source index order.
    std::string describe() const;

    friend bool operator==(const OmlIso& a, const OmlIso& b) { return a.map_ == b.map_; }

private:
    OmlIso(OmlPtr s, OmlPtr t, std::vector<std::size_t> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

    OmlPtr source_;
    OmlPtr target_;
    std::vector<std::size_t> map_;
};

bool has_4element_block(const Oml& l);

// k[D] == j(D) for every Boolean subalgebra D of the left side.
bool induces(const OmlIso& k, const BsubIso& j);

// Every OML isomorphism k with k[D] = j(D) for all D, sorted by map.
// Search: one orientation variable per complementary pair {a, a'}, pairs
// lying in the most blocks decided first, order constraints propagated
// against everything already decided. Throws ReconstructError NoSolution.
std::vector<OmlIso> reconstruct_oml_isos(const BsubIso& j);

// The unique reconstruction when neither side has a 4-element block.
// Throws ReconstructError HypothesisViolated / UniquenessFailed.
OmlIso certify_unique(const BsubIso& j);

}  // namespace abelsub
