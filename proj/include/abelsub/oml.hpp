#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelsub/bits.hpp"
#include "abelsub/error.hpp"
#include "abelsub/poset.hpp"

namespace abelsub {

class OmlError : public Error {
public:
    using Error::Error;
};

// Finite orthomodular lattice. Construction goes through `verify`, which
// checks every axiom exhaustively and tabulates meets and joins.
class Oml {
public:
    // Throws OmlError NotLattice / OrthoNotInvolutive / OrthoNotOrderReversing /
    // NotComplement / OrthomodularityFails, each naming a witness.
    static Oml verify(PosetPtr order, std::vector<std::size_t> ortho);
    static Oml verify(std::vector<std::string> elements, const Poset::Relation& le,
                      const std::vector<std::pair<std::string, std::string>>& ortho_pairs);

    const Poset& order() const { return *order_; }
    const PosetPtr& order_ptr() const { return order_; }
    std::size_t size() const { return order_->size(); }
    const std::string& name(std::size_t i) const { return order_->name(i); }
    std::size_t require(std::string_view n) const { return order_->require(n); }

    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }
    std::size_t ortho(std::size_t x) const { return ortho_[x]; }
    const std::vector<std::size_t>& ortho_map() const { return ortho_; }
    bool leq(std::size_t a, std::size_t b) const { return order_->leq(a, b); }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
    bool orthogonal(std::size_t a, std::size_t b) const { return leq(a, ortho(b)); }

    // Join of a set of elements (bottom for the empty set).
    std::size_t join_all(const Bits& set) const;

    // a = (a ∧ b) ∨ (a ∧ b')
    bool commutes(std::size_t a, std::size_t b) const;

    Bits all() const { return order_->all(); }

private:
    PosetPtr order_;
    std::vector<std::size_t> ortho_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
};

using OmlPtr = std::shared_ptr<const Oml>;

inline bool commutes(const Oml& l, std::size_t a, std::size_t b) { return l.commutes(a, b); }

// A Boolean subalgebra, identified by its member set. `atoms` are the
// minimal nonzero members in increasing index order.
struct BooleanSubalgebra {
    Bits members;
    std::vector<std::size_t> atoms;

    std::size_t size() const { return members.count(); }
    friend bool operator==(const BooleanSubalgebra& a, const BooleanSubalgebra& b) { return a.members == b.members; }
};

// Subalgebra generated by a family of pairwise orthogonal nonzero elements
// whose join is the top.
BooleanSubalgebra subalgebra_from_partition(const Oml& l, const std::vector<std::size_t>& parts);

// Closed under ortho, meet, join, contains 0 and 1, and distributive with
// the induced operations.
bool is_boolean_subalgebra(const Oml& l, const Bits& members);

// Maximal Boolean subalgebras, found as maximal pairwise-commuting sets.
std::vector<BooleanSubalgebra> blocks(const Oml& l);

// BSub(L) as a labelled poset ordered by inclusion. Element i of `poset`
// is `subalgebras[i]`; labels are D0, D1, ... in (size, member set) order.
struct BsubPoset {
    OmlPtr oml;
    PosetPtr poset;
    std::vector<BooleanSubalgebra> subalgebras;

    std::size_t size() const { return subalgebras.size(); }
    // Index of the subalgebra with exactly these members, if present.
    std::optional<std::size_t> find(const Bits& members) const;
    std::string describe(std::size_t i) const;  // "{0,a,a',1}"
};

BsubPoset boolean_subalgebras(const OmlPtr& l);

struct GreechieDiagram {
    std::vector<std::string> atoms;
    std::vector<std::vector<std::string>> blocks;

    // InvalidDiagram unless every atom is in a block, blocks have >= 2 atoms,
    // and two distinct blocks share at most one atom.
    void validate() const;
};

// Pastes one Boolean algebra per block and checks the result is an OML.
// Throws OmlError InvalidDiagram / PastingNotOml.
Oml from_greechie(const GreechieDiagram& d);

// boolean(n), mo(n), horizontal_sum_b8(n). Throws OmlError UnknownName.
Oml standard(std::string_view name, std::size_t n);

}  // namespace abelsub
