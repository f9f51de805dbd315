#include "abelsub/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace abelsub {

BsubIso BsubIso::make(BsubPoset left, BsubPoset right, std::vector<std::size_t> map) {
    if (left.oml->size() != right.oml->size())
        throw ReconstructError("InconsistentLevels", "the two lattices have different sizes");
    OrderIso j = OrderIso::make(left.poset, right.poset, std::move(map));
    for (std::size_t d = 0; d < left.size(); ++d) {
        std::size_t ls = left.subalgebras[d].size(), rs = right.subalgebras[j(d)].size();
        bool trivial_l = ls <= 2, trivial_r = rs <= 2;
        if (trivial_l != trivial_r || ((ls == 4) != (rs == 4)))
            throw ReconstructError("InconsistentLevels",
                                   left.describe(d) + " (size " + std::to_string(ls) + ") is sent to " +
                                       right.describe(j(d)) + " (size " + std::to_string(rs) + ")");
    }
    return BsubIso(std::move(left), std::move(right), std::move(j));
}

BsubIso BsubIso::identity(const BsubPoset& side) {
    std::vector<std::size_t> map(side.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return make(side, side, std::move(map));
}

OmlIso OmlIso::make(OmlPtr source, OmlPtr target, std::vector<std::size_t> map) {
    const Oml& s = *source;
    const Oml& t = *target;
    if (map.size() != s.size() || s.size() != t.size()) throw ReconstructError("NotOmlIso", "size mismatch");
    std::vector<bool> hit(t.size(), false);
    for (std::size_t v : map) {
        if (v >= t.size() || hit[v]) throw ReconstructError("NotOmlIso", "map is not a bijection");
        hit[v] = true;
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (map[s.ortho(x)] != t.ortho(map[x]))
            throw ReconstructError("NotOmlIso", "ortho not preserved at '" + s.name(x) + "'");
        for (std::size_t y = 0; y < s.size(); ++y)
            if (s.leq(x, y) != t.leq(map[x], map[y]))
                throw ReconstructError("NotOmlIso", "order not preserved at '" + s.name(x) + "', '" + s.name(y) + "'");
    }
    return OmlIso(std::move(source), std::move(target), std::move(map));
}

std::string OmlIso::describe() const {
    std::ostringstream out;
    for (std::size_t x = 0; x < map_.size(); ++x) {
        if (x) out << ", ";
        out << source_->name(x) << "->" << target_->name(map_[x]);
    }
    return out.str();
}

bool has_4element_block(const Oml& l) {
    for (const auto& b : blocks(l))
        if (b.size() == 4) return true;
    return false;
}

bool induces(const OmlIso& k, const BsubIso& j) {
    const auto& left = j.left();
    const auto& right = j.right();
    for (std::size_t d = 0; d < left.size(); ++d) {
        Bits image(right.oml->size());
        for (std::size_t x : left.subalgebras[d].members.indices()) image.set(k(x));
        if (!(image == right.subalgebras[j(d)].members)) return false;
    }
    return true;
}

namespace {

class OrientationSearch {
public:
    explicit OrientationSearch(const BsubIso& j) : j_(j), l_(*j.left().oml), m_(*j.right().oml) {}

    std::vector<OmlIso> run() {
        const auto& left = j_.left();
        const auto& right = j_.right();
        const std::size_t n = l_.size();
        image_.assign(n, kUnset);
        image_[l_.bottom()] = m_.bottom();
        image_[l_.top()] = m_.top();

        // Which subalgebras contain each element.
        std::vector<std::vector<std::size_t>> containing(n);
        for (std::size_t d = 0; d < left.size(); ++d)
            for (std::size_t x : left.subalgebras[d].members.indices()) containing[x].push_back(d);

        auto bl = blocks(l_);
        std::vector<std::size_t> in_blocks(n, 0);
        for (const auto& b : bl)
            for (std::size_t x : b.members.indices()) ++in_blocks[x];

        for (std::size_t x = 0; x < n; ++x) {
            if (x == l_.bottom() || x == l_.top()) continue;
            std::size_t xc = l_.ortho(x);
            if (l_.name(xc) < l_.name(x)) continue;  // represented by the lexicographically smaller name
            Pair pr{x, xc, {}, in_blocks[x]};

            // The 4-element subalgebra {0, x, x', 1} and its image.
            std::size_t dx = kUnset;
            for (std::size_t d : containing[x])
                if (left.subalgebras[d].size() == 4) dx = d;
            if (dx == kUnset) throw ReconstructError("InconsistentLevels", "no 4-element subalgebra holds '" + l_.name(x) + "'");
            const auto& target = right.subalgebras[j_(dx)];
            if (target.size() != 4)
                throw ReconstructError("InconsistentLevels", left.describe(dx) + " is not sent to a 4-element subalgebra");
            std::size_t c = target.atoms.at(0);
            for (auto [u, v] : {std::pair{c, m_.ortho(c)}, std::pair{m_.ortho(c), c}}) {
                bool fits = true;
                for (std::size_t d : containing[x])
                    if (!right.subalgebras[j_(d)].members.test(u)) fits = false;
                for (std::size_t d : containing[xc])
                    if (!right.subalgebras[j_(d)].members.test(v)) fits = false;
                if (fits) pr.options.emplace_back(u, v);
            }
            pairs_.push_back(std::move(pr));
        }
        std::stable_sort(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
            if (a.weight != b.weight) return a.weight > b.weight;
            return l_.name(a.rep) < l_.name(b.rep);
        });

        recurse(0);

        std::vector<OmlIso> out;
        std::sort(found_.begin(), found_.end());
        for (auto& m : found_) {
            auto k = OmlIso::make(j_.left().oml, j_.right().oml, m);
            if (induces(k, j_)) out.push_back(std::move(k));
        }
        return out;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    struct Pair {
        std::size_t rep, comp;
        std::vector<std::pair<std::size_t, std::size_t>> options;  // (image of rep, image of comp)
        std::size_t weight;
    };

    bool agrees(std::size_t u, std::size_t v) const {
        return l_.leq(u, v) == m_.leq(image_[u], image_[v]) && l_.leq(v, u) == m_.leq(image_[v], image_[u]);
    }

    void recurse(std::size_t depth) {
        if (depth == pairs_.size()) {
            found_.push_back(image_);
            return;
        }
        const Pair& p = pairs_[depth];
        for (auto [u, v] : p.options) {
            image_[p.rep] = u;
            image_[p.comp] = v;
            bool ok = true;
            for (std::size_t e = 0; e < depth && ok; ++e)
                for (std::size_t a : {p.rep, p.comp})
                    for (std::size_t b : {pairs_[e].rep, pairs_[e].comp})
                        if (!agrees(a, b)) ok = false;
            if (ok) recurse(depth + 1);
        }
        image_[p.rep] = image_[p.comp] = kUnset;
    }

    const BsubIso& j_;
    const Oml& l_;
    const Oml& m_;
    std::vector<Pair> pairs_;
    std::vector<std::size_t> image_;
    std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<OmlIso> reconstruct_oml_isos(const BsubIso& j) {
    auto out = OrientationSearch(j).run();
    if (out.empty()) throw ReconstructError("NoSolution", "no OML isomorphism induces the given map");
    return out;
}

OmlIso certify_unique(const BsubIso& j) {
    for (const Oml* side : {j.left().oml.get(), j.right().oml.get()})
        if (has_4element_block(*side))
            throw ReconstructError("HypothesisViolated", "a 4-element block is present; uniqueness is not guaranteed");
    auto all = reconstruct_oml_isos(j);
    if (all.size() != 1) {
        std::string witness;
        for (const auto& k : all) witness += "\n  " + k.describe();
        throw ReconstructError("UniquenessFailed",
                               std::to_string(all.size()) + " reconstructions without 4-element blocks:" + witness);
    }
    return all.front();
}

}  // namespace abelsub
