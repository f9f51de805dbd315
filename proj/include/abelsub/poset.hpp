#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abelsub/bits.hpp"
#include "abelsub/error.hpp"

namespace abelsub {

class PosetError : public Error {
public:
    using Error::Error;
};

// Finite partial order over named elements. Immutable once built; the
// relation is stored in both directions as bit rows.
class Poset {
public:
    using Relation = std::vector<std::pair<std::string, std::string>>;

    Poset() = default;

    // Reflexive-transitive closure of `pairs` (each pair reads x <= y).
    // Throws PosetError CycleError / DuplicateElement / UnknownElement.
    static Poset verify(std::vector<std::string> elements, const Relation& pairs);

    // `up[i]` must already hold { j : i <= j } for a partial order; checked.
    static Poset from_rows(std::vector<std::string> elements, std::vector<Bits> up);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::vector<std::string>& elements() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;

    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    const Bits& up(std::size_t a) const { return up_[a]; }
    const Bits& down(std::size_t a) const { return down_[a]; }

    // Least upper bound / greatest lower bound of a set, if it exists. The
    // join of the empty set is the bottom element (when there is one).
    std::optional<std::size_t> join(const Bits& set) const;
    std::optional<std::size_t> meet(const Bits& set) const;
    std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;

    bool covers(std::size_t upper, std::size_t lower) const;
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;  // (lower, upper)
    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

    Bits all() const;
    Bits singleton(std::size_t i) const;

    // Sub-poset on `subset`, keeping element names.
    Poset induced(const std::vector<std::size_t>& subset) const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.names_ == b.names_ && a.up_ == b.up_;
    }

private:
    void index_names();

    std::vector<std::string> names_;
    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

using PosetPtr = std::shared_ptr<const Poset>;

// Order-isomorphism between two posets: `map[i]` is the image of element i
// of the source. Construct through `make`, which checks both directions.
class OrderIso {
public:
    static OrderIso make(PosetPtr source, PosetPtr target, std::vector<std::size_t> map);
    static OrderIso identity(PosetPtr poset);

    const Poset& source() const { return *source_; }
    const Poset& target() const { return *target_; }
    const PosetPtr& source_ptr() const { return source_; }
    const PosetPtr& target_ptr() const { return target_; }
    const std::vector<std::size_t>& map() const { return map_; }
    std::size_t operator()(std::size_t i) const { return map_[i]; }

    OrderIso inverse() const;
    // (*this) after `first`: x -> this(first(x)).
    OrderIso after(const OrderIso& first) const;
    bool is_identity() const;

    friend bool operator==(const OrderIso& a, const OrderIso& b) { return a.map_ == b.map_; }

private:
    OrderIso(PosetPtr s, PosetPtr t, std::vector<std::size_t> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

    PosetPtr source_;
    PosetPtr target_;
    std::vector<std::size_t> map_;
};

// Elements whose principal downset is finite. Every element of a finite
// poset qualifies; kept as an explicit step so callers mirror the
// restriction from all subalgebras to those with finitely many below.
std::vector<std::size_t> finite_part(const Poset& p);

// All order-isomorphisms p -> q, sorted by map. `fixed` pins some source
// elements to given targets.
std::vector<OrderIso> enumerate_order_isos(const PosetPtr& p, const PosetPtr& q,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& fixed = {});

// Downset in which every two members have a join that is again a member.
struct Ideal {
    Bits members;
    friend bool operator==(const Ideal&, const Ideal&) = default;
};

bool is_ideal(const Poset& p, const Bits& members);

// Every ideal of p, the empty one included, sorted by member set.
std::vector<Ideal> ideals(const Poset& p);

// Extends an isomorphism between sub-posets F_P of P and F_Q of Q (the
// source/target of `mu`, matched to P and Q by element name) to P -> Q via
// x |-> join of mu[ x-down ∩ F_P ]. Throws NotGenerated, JoinMissing,
// NotSubposet, or ExtensionNotUnique.
OrderIso extend_iso_via_ideals(const OrderIso& mu, const PosetPtr& p, const PosetPtr& q);

}  // namespace abelsub
