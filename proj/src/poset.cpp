#include "abelsub/poset.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace abelsub {

void Poset::index_names() {
    lookup_.clear();
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!lookup_.emplace(names_[i], i).second)
            throw PosetError("DuplicateElement", "element '" + names_[i] + "' listed twice");
    }
}

Poset Poset::verify(std::vector<std::string> elements, const Relation& pairs) {
    Poset p;
    p.names_ = std::move(elements);
    p.index_names();
    const std::size_t n = p.names_.size();
    p.up_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
    for (const auto& [lo, hi] : pairs) {
        auto a = p.index_of(lo);
        auto b = p.index_of(hi);
        if (!a || !b)
            throw PosetError("UnknownElement", "relation mentions '" + (a ? hi : lo) + "'");
        p.up_[*a].set(*b);
    }
    // Warshall on bit rows: whoever reaches k reaches everything k reaches.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (i != k && p.up_[i].test(k)) p.up_[i] |= p.up_[k];
    return from_rows(std::move(p.names_), std::move(p.up_));
}

Poset Poset::from_rows(std::vector<std::string> elements, std::vector<Bits> up) {
    Poset p;
    p.names_ = std::move(elements);
    p.index_names();
    const std::size_t n = p.names_.size();
    if (up.size() != n) throw PosetError("BadRelation", "relation row count differs from element count");
    p.up_ = std::move(up);
    p.down_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (p.up_[i].size() != n) throw PosetError("BadRelation", "relation row width differs from element count");
        if (!p.up_[i].test(i)) throw PosetError("BadRelation", "relation is not reflexive at '" + p.names_[i] + "'");
        for (std::size_t j : p.up_[i].indices()) p.down_[j].set(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : p.up_[i].indices()) {
            if (j != i && p.up_[j].test(i))
                throw PosetError("CycleError",
                                 "'" + p.names_[i] + "' and '" + p.names_[j] + "' are below each other");
            if (!p.up_[j].is_subset_of(p.up_[i]))
                throw PosetError("BadRelation", "relation is not transitive through '" + p.names_[j] + "'");
        }
    }
    return p;
}

std::optional<std::size_t> Poset::index_of(std::string_view name) const {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t Poset::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw PosetError("UnknownElement", "no element named '" + std::string(name) + "'");
}

std::optional<std::size_t> Poset::join(const Bits& set) const {
    // upper bounds of the set, then the one below all others
    Bits bounds = all();
    for (std::size_t x : set.indices()) bounds &= up_[x];
    for (std::size_t c : bounds.indices())
        if (bounds.is_subset_of(up_[c])) return c;
    return std::nullopt;
}

std::optional<std::size_t> Poset::meet(const Bits& set) const {
    Bits bounds = all();
    for (std::size_t x : set.indices()) bounds &= down_[x];
    for (std::size_t c : bounds.indices())
        if (bounds.is_subset_of(down_[c])) return c;
    return std::nullopt;
}

std::optional<std::size_t> Poset::join(std::size_t a, std::size_t b) const {
    Bits s = singleton(a);
    s.set(b);
    return join(s);
}

std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
    Bits s = singleton(a);
    s.set(b);
    return meet(s);
}

bool Poset::covers(std::size_t upper, std::size_t lower) const {
    if (!less(lower, upper)) return false;
    Bits between = up_[lower] & down_[upper];
    return between.count() == 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t lo = 0; lo < size(); ++lo)
        for (std::size_t hi : up_[lo].indices())
            if (covers(hi, lo)) out.emplace_back(lo, hi);
    return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (down_[i].count() == 1) out.push_back(i);
    return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (up_[i].count() == 1) out.push_back(i);
    return out;
}

Bits Poset::all() const {
    Bits b(size());
    for (std::size_t i = 0; i < size(); ++i) b.set(i);
    return b;
}

Bits Poset::singleton(std::size_t i) const {
    Bits b(size());
    b.set(i);
    return b;
}

Poset Poset::induced(const std::vector<std::size_t>& subset) const {
    std::vector<std::string> names;
    names.reserve(subset.size());
    for (std::size_t i : subset) names.push_back(names_[i]);
    std::vector<Bits> rows(subset.size(), Bits(subset.size()));
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = 0; b < subset.size(); ++b)
            if (leq(subset[a], subset[b])) rows[a].set(b);
    return from_rows(std::move(names), std::move(rows));
}

// ---------------------------------------------------------------------------

OrderIso OrderIso::make(PosetPtr source, PosetPtr target, std::vector<std::size_t> map) {
    const std::size_t n = source->size();
    if (map.size() != n || target->size() != n)
        throw PosetError("NotBijection", "map size does not match poset sizes");
    std::vector<bool> hit(n, false);
    for (std::size_t v : map) {
        if (v >= n || hit[v]) throw PosetError("NotBijection", "map is not a bijection");
        hit[v] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (source->leq(a, b) != target->leq(map[a], map[b]))
                throw PosetError("NotOrderPreserving", "'" + source->name(a) + "' vs '" + source->name(b) +
                                                           "' is not preserved and reflected");
    return OrderIso(std::move(source), std::move(target), std::move(map));
}

OrderIso OrderIso::identity(PosetPtr poset) {
    std::vector<std::size_t> map(poset->size());
    std::iota(map.begin(), map.end(), 0);
    return OrderIso(poset, poset, std::move(map));
}

OrderIso OrderIso::inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return OrderIso(target_, source_, std::move(inv));
}

OrderIso OrderIso::after(const OrderIso& first) const {
    if (first.target().size() != source().size())
        throw PosetError("NotBijection", "composition of isomorphisms with mismatched posets");
    std::vector<std::size_t> m(first.map_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = map_[first.map_[i]];
    return OrderIso(first.source_, target_, std::move(m));
}

bool OrderIso::is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] != i) return false;
    return true;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> finite_part(const Poset& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.down(i).count() <= p.size()) out.push_back(i);
    return out;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const Poset& p) {
    std::vector<std::size_t> lower_covers(p.size(), 0), upper_covers(p.size(), 0);
    for (auto [lo, hi] : p.cover_pairs()) {
        ++upper_covers[lo];
        ++lower_covers[hi];
    }
    std::vector<Signature> sig(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        sig[i] = {p.down(i).count(), p.up(i).count(), lower_covers[i], upper_covers[i]};
    return sig;
}

class IsoSearch {
public:
    IsoSearch(const PosetPtr& p, const PosetPtr& q) : p_(p), q_(q), sp_(signatures(*p)), sq_(signatures(*q)) {}

    std::vector<OrderIso> run(const std::vector<std::pair<std::size_t, std::size_t>>& fixed) {
        const std::size_t n = p_->size();
        if (q_->size() != n) return {};
        // Signature multisets must agree before any search is worthwhile.
        auto a = sp_, b = sq_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return {};

        image_.assign(n, kUnset);
        used_.assign(n, false);
        for (auto [x, y] : fixed) {
            if (x >= n || y >= n || sp_[x] != sq_[y]) return {};
            if (image_[x] != kUnset) {
                if (image_[x] != y) return {};
                continue;
            }
            if (used_[y]) return {};
            image_[x] = y;
            used_[y] = true;
            assigned_.push_back(x);
        }
        for (std::size_t i = 0; i < assigned_.size(); ++i)
            for (std::size_t j = 0; j < assigned_.size(); ++j)
                if (!consistent(assigned_[i], image_[assigned_[i]], assigned_[j])) return {};
        order_ = search_order();
        recurse(0);
        std::sort(found_.begin(), found_.end());
        std::vector<OrderIso> out;
        out.reserve(found_.size());
        for (auto& m : found_) out.push_back(OrderIso::make(p_, q_, std::move(m)));
        return out;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    bool consistent(std::size_t x, std::size_t y, std::size_t other) const {
        std::size_t oy = image_[other];
        return p_->leq(other, x) == q_->leq(oy, y) && p_->leq(x, other) == q_->leq(y, oy);
    }

    // Greedy: next is the unassigned element comparable to the most already
    // placed ones, ties broken by rarer signature class.
    std::vector<std::size_t> search_order() const {
        const std::size_t n = p_->size();
        std::vector<std::size_t> class_size(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sp_[i] == sp_[j]) ++class_size[i];
        std::vector<bool> placed(n, false);
        for (std::size_t x : assigned_) placed[x] = true;
        std::vector<std::size_t> order;
        for (std::size_t step = assigned_.size(); step < n; ++step) {
            std::size_t best = kUnset;
            std::tuple<std::size_t, std::size_t, std::size_t> best_key{};
            for (std::size_t i = 0; i < n; ++i) {
                if (placed[i]) continue;
                std::size_t links = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (placed[j] && (p_->leq(i, j) || p_->leq(j, i))) ++links;
                std::tuple key{links, n - class_size[i], n - i};
                if (best == kUnset || key > best_key) {
                    best = i;
                    best_key = key;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }

    void recurse(std::size_t depth) {
        if (depth == order_.size()) {
            found_.push_back(image_);
            return;
        }
        const std::size_t x = order_[depth];
        for (std::size_t y = 0; y < q_->size(); ++y) {
            if (used_[y] || sp_[x] != sq_[y]) continue;
            image_[x] = y;
            bool ok = true;
            for (std::size_t other : assigned_)
                if (!consistent(x, y, other)) {
                    ok = false;
                    break;
                }
            if (ok) {
                used_[y] = true;
                assigned_.push_back(x);
                recurse(depth + 1);
                assigned_.pop_back();
                used_[y] = false;
            }
            image_[x] = kUnset;
        }
    }

    PosetPtr p_, q_;
    std::vector<Signature> sp_, sq_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
    std::vector<std::size_t> assigned_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<OrderIso> enumerate_order_isos(const PosetPtr& p, const PosetPtr& q,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& fixed) {
    return IsoSearch(p, q).run(fixed);
}

bool is_ideal(const Poset& p, const Bits& members) {
    auto list = members.indices();
    for (std::size_t x : list)
        if (!p.down(x).is_subset_of(members)) return false;
    for (std::size_t a = 0; a < list.size(); ++a)
        for (std::size_t b = a + 1; b < list.size(); ++b) {
            auto j = p.join(list[a], list[b]);
            if (!j || !members.test(*j)) return false;
        }
    return true;
}

std::vector<Ideal> ideals(const Poset& p) {
    // Downsets by include/exclude along a linear extension, then the join test.
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p.down(a).count() < p.down(b).count(); });

    std::vector<Ideal> out;
    Bits current(p.size());
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            if (is_ideal(p, current)) out.push_back(Ideal{current});
            return;
        }
        self(self, k + 1);
        std::size_t x = order[k];
        Bits strictly_below = p.down(x);
        strictly_below.reset(x);
        if (strictly_below.is_subset_of(current)) {
            current.set(x);
            self(self, k + 1);
            current.reset(x);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
    return out;
}

OrderIso extend_iso_via_ideals(const OrderIso& mu, const PosetPtr& p, const PosetPtr& q) {
    const Poset& fp = mu.source();
    const Poset& fq = mu.target();

    // Positions of F_P inside P (and F_Q inside Q), matched by name; the
    // sub-posets must carry the induced order.
    auto embed = [](const Poset& sub, const Poset& whole, const char* side) {
        std::vector<std::size_t> pos(sub.size());
        for (std::size_t i = 0; i < sub.size(); ++i) {
            auto at = whole.index_of(sub.name(i));
            if (!at)
                throw PosetError("NotSubposet", std::string(side) + " element '" + sub.name(i) + "' not found");
            pos[i] = *at;
        }
        for (std::size_t a = 0; a < sub.size(); ++a)
            for (std::size_t b = 0; b < sub.size(); ++b)
                if (sub.leq(a, b) != whole.leq(pos[a], pos[b]))
                    throw PosetError("NotSubposet", std::string(side) + " sub-poset order is not the induced one");
        return pos;
    };
    const auto in_p = embed(fp, *p, "source");
    const auto in_q = embed(fq, *q, "target");

    Bits fp_in_p(p->size());
    for (std::size_t x : in_p) fp_in_p.set(x);

    std::vector<std::size_t> image(p->size());
    for (std::size_t x = 0; x < p->size(); ++x) {
        // x-down ∩ F_P, expressed in F_P's own indices
        Bits below_sub(fp.size());
        Bits below_whole(p->size());
        for (std::size_t i = 0; i < fp.size(); ++i)
            if (p->leq(in_p[i], x)) {
                below_sub.set(i);
                below_whole.set(in_p[i]);
            }
        if (below_sub.none() || !is_ideal(fp, below_sub))
            throw PosetError("NotGenerated", "'" + p->name(x) + "' has no ideal of the finite part below it");
        auto j = p->join(below_whole);
        if (!j) throw PosetError("JoinMissing", "ideal below '" + p->name(x) + "' has no join");
        if (*j != x)
            throw PosetError("NotGenerated", "'" + p->name(x) + "' is not the join of the finite part below it");

        Bits mapped(q->size());
        for (std::size_t i : below_sub.indices()) mapped.set(in_q[mu(i)]);
        auto y = q->join(mapped);
        if (!y) throw PosetError("JoinMissing", "image of the ideal below '" + p->name(x) + "' has no join");
        image[x] = *y;
    }

    OrderIso extended = OrderIso::make(p, q, image);
    for (std::size_t i = 0; i < fp.size(); ++i)
        if (extended(in_p[i]) != in_q[mu(i)])
            throw PosetError("ExtensionNotUnique", "extension disagrees with the given map at '" + fp.name(i) + "'");

    // Any isomorphism extending mu preserves joins, so it must be this one.
    std::vector<std::pair<std::size_t, std::size_t>> pins;
    for (std::size_t i = 0; i < fp.size(); ++i) pins.emplace_back(in_p[i], in_q[mu(i)]);
    auto all = enumerate_order_isos(p, q, pins);
    if (all.size() != 1 || !(all.front() == extended))
        throw PosetError("ExtensionNotUnique",
                         std::to_string(all.size()) + " isomorphisms extend the given map");
    return extended;
}

}  // namespace abelsub
