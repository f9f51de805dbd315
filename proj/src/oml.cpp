#include "abelsub/oml.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace abelsub {

Oml Oml::verify(PosetPtr order, std::vector<std::size_t> ortho) {
    const Poset& p = *order;
    const std::size_t n = p.size();
    if (n == 0) throw OmlError("NotLattice", "empty carrier");
    if (ortho.size() != n) throw OmlError("OrthoNotInvolutive", "ortho is not defined on every element");

    Oml l;
    l.order_ = order;
    auto bottom = p.meet(p.all());
    auto top = p.join(p.all());
    if (!bottom || !top) throw OmlError("NotLattice", "no bottom or no top element");
    l.bottom_ = *bottom;
    l.top_ = *top;

    l.meet_.resize(n * n);
    l.join_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            auto m = p.meet(a, b);
            auto j = p.join(a, b);
            if (!m || !j)
                throw OmlError("NotLattice", "'" + p.name(a) + "' and '" + p.name(b) + "' have no " +
                                                 (m ? "join" : "meet"));
            l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
            l.join_[a * n + b] = l.join_[b * n + a] = *j;
        }

    for (std::size_t x = 0; x < n; ++x) {
        if (ortho[x] >= n) throw OmlError("OrthoNotInvolutive", "ortho maps outside the carrier");
        if (ortho[ortho[x]] != x)
            throw OmlError("OrthoNotInvolutive", "x'' != x at '" + p.name(x) + "'");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.leq(a, b) && !p.leq(ortho[b], ortho[a]))
                throw OmlError("OrthoNotOrderReversing", "'" + p.name(a) + "' <= '" + p.name(b) + "' but not b' <= a'");
    l.ortho_ = std::move(ortho);
    for (std::size_t x = 0; x < n; ++x)
        if (l.meet(x, l.ortho_[x]) != l.bottom_ || l.join(x, l.ortho_[x]) != l.top_)
            throw OmlError("NotComplement", "'" + p.name(x) + "' and its ortho are not complements");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (p.leq(x, y) && l.join(x, l.meet(y, l.ortho_[x])) != y)
                throw OmlError("OrthomodularityFails",
                               "x = '" + p.name(x) + "' <= y = '" + p.name(y) + "' but y != x v (y ^ x')");
    return l;
}

Oml Oml::verify(std::vector<std::string> elements, const Poset::Relation& le,
                const std::vector<std::pair<std::string, std::string>>& ortho_pairs) {
    auto order = std::make_shared<const Poset>(Poset::verify(std::move(elements), le));
    const std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> ortho(order->size(), unset);
    auto assign = [&](std::size_t a, std::size_t b) {
        if (ortho[a] != unset && ortho[a] != b)
            throw OmlError("OrthoNotInvolutive", "'" + order->name(a) + "' has two orthocomplements");
        ortho[a] = b;
    };
    for (const auto& [x, y] : ortho_pairs) {
        std::size_t a = order->require(x), b = order->require(y);
        assign(a, b);
        assign(b, a);
    }
    for (std::size_t i = 0; i < ortho.size(); ++i)
        if (ortho[i] == unset) throw OmlError("OrthoNotInvolutive", "'" + order->name(i) + "' has no orthocomplement");
    return verify(std::move(order), std::move(ortho));
}

std::size_t Oml::join_all(const Bits& set) const {
    std::size_t acc = bottom_;
    for (std::size_t x : set.indices()) acc = join(acc, x);
    return acc;
}

bool Oml::commutes(std::size_t a, std::size_t b) const {
    return a == join(meet(a, b), meet(a, ortho(b)));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> atoms_of(const Oml& l, const Bits& members) {
    std::vector<std::size_t> out;
    for (std::size_t x : members.indices()) {
        if (x == l.bottom()) continue;
        bool minimal = true;
        for (std::size_t y : members.indices())
            if (y != l.bottom() && y != x && l.leq(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return out;
}

}  // namespace

BooleanSubalgebra subalgebra_from_partition(const Oml& l, const std::vector<std::size_t>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == l.bottom()) throw OmlError("NotPartition", "partition contains the bottom element");
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (!l.orthogonal(parts[i], parts[j]))
                throw OmlError("NotPartition", "'" + l.name(parts[i]) + "' and '" + l.name(parts[j]) + "' are not orthogonal");
    }
    BooleanSubalgebra b{Bits(l.size()), {}};
    const std::size_t k = parts.size();
    if (k >= 32) throw OmlError("NotPartition", "partition too large");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::size_t x = l.bottom();
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) x = l.join(x, parts[i]);
        b.members.set(x);
    }
    if (!b.members.test(l.top()) || (k == 0 && l.top() != l.bottom()))
        throw OmlError("NotPartition", "partition does not join to the top");
    b.atoms = atoms_of(l, b.members);
    return b;
}

bool is_boolean_subalgebra(const Oml& l, const Bits& members) {
    if (!members.test(l.bottom()) || !members.test(l.top())) return false;
    auto list = members.indices();
    for (std::size_t x : list)
        if (!members.test(l.ortho(x))) return false;
    for (std::size_t a : list)
        for (std::size_t b : list)
            if (!members.test(l.meet(a, b)) || !members.test(l.join(a, b))) return false;
    for (std::size_t a : list)
        for (std::size_t b : list)
            for (std::size_t c : list)
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
    return true;
}

std::vector<BooleanSubalgebra> blocks(const Oml& l) {
    const std::size_t n = l.size();
    std::vector<Bits> adj(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && l.commutes(a, b)) adj[a].set(b);

    // Bron-Kerbosch with pivoting on the commutation graph.
    std::vector<Bits> cliques;
    auto bk = [&](auto&& self, Bits r, Bits p, Bits x) -> void {
        if (p.none() && x.none()) {
            cliques.push_back(r);
            return;
        }
        std::size_t pivot = 0, best = 0;
        bool have = false;
        for (std::size_t u : (p | x).indices()) {
            std::size_t deg = p.intersection_count(adj[u]);
            if (!have || deg > best) {
                pivot = u;
                best = deg;
                have = true;
            }
        }
        for (std::size_t v : p.indices()) {
            if (adj[pivot].test(v)) continue;
            Bits r2 = r;
            r2.set(v);
            self(self, r2, p & adj[v], x & adj[v]);
            p.reset(v);
            x.set(v);
        }
    };
    bk(bk, Bits(n), l.all(), Bits(n));

    std::vector<BooleanSubalgebra> out;
    for (auto& c : cliques) {
        if (!is_boolean_subalgebra(l, c))
            throw OmlError("NotOrthomodular", "maximal commuting set is not a Boolean subalgebra");
        out.push_back(BooleanSubalgebra{c, atoms_of(l, c)});
    }
    std::sort(out.begin(), out.end(),
              [](const BooleanSubalgebra& a, const BooleanSubalgebra& b) { return a.members < b.members; });
    return out;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> BsubPoset::find(const Bits& members) const {
    for (std::size_t i = 0; i < subalgebras.size(); ++i)
        if (subalgebras[i].members == members) return i;
    return std::nullopt;
}

std::string BsubPoset::describe(std::size_t i) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t x : subalgebras[i].members.indices()) {
        if (!first) s += ",";
        s += oml->name(x);
        first = false;
    }
    return s + "}";
}

BsubPoset boolean_subalgebras(const OmlPtr& lp) {
    const Oml& l = *lp;
    std::vector<std::size_t> candidates;
    for (std::size_t x = 0; x < l.size(); ++x)
        if (x != l.bottom()) candidates.push_back(x);

    std::set<Bits> seen;
    std::vector<BooleanSubalgebra> found;
    std::vector<std::size_t> chosen;
    // Orthogonal families in increasing index order; a family joining to the
    // top admits no further nonzero element, so it is recorded and closed.
    auto rec = [&](auto&& self, std::size_t from, std::size_t joined) -> void {
        if (joined == l.top() && !chosen.empty()) {
            auto b = subalgebra_from_partition(l, chosen);
            if (seen.insert(b.members).second) found.push_back(std::move(b));
            return;
        }
        for (std::size_t k = from; k < candidates.size(); ++k) {
            std::size_t e = candidates[k];
            if (!l.orthogonal(e, joined)) continue;
            chosen.push_back(e);
            self(self, k + 1, l.join(joined, e));
            chosen.pop_back();
        }
    };
    rec(rec, 0, l.bottom());
    if (l.size() == 1) {
        Bits only(1);
        only.set(0);
        found.push_back(BooleanSubalgebra{only, {}});
    }

    std::sort(found.begin(), found.end(), [](const BooleanSubalgebra& a, const BooleanSubalgebra& b) {
        auto ca = a.size(), cb = b.size();
        if (ca != cb) return ca < cb;
        return a.members < b.members;
    });

    std::vector<std::string> names;
    std::vector<Bits> up(found.size(), Bits(found.size()));
    for (std::size_t i = 0; i < found.size(); ++i) {
        names.push_back("D" + std::to_string(i));
        for (std::size_t j = 0; j < found.size(); ++j)
            if (found[i].members.is_subset_of(found[j].members)) up[i].set(j);
    }
    BsubPoset out;
    out.oml = lp;
    out.poset = std::make_shared<const Poset>(Poset::from_rows(std::move(names), std::move(up)));
    out.subalgebras = std::move(found);
    return out;
}

// ---------------------------------------------------------------------------

void GreechieDiagram::validate() const {
    std::set<std::string> known;
    for (const auto& a : atoms) {
        if (a.empty() || a == "0" || a == "1" || a.find_first_of("'+{},") != std::string::npos)
            throw OmlError("InvalidDiagram", "atom name '" + a + "' is reserved or contains ' + { } ,");
        if (!known.insert(a).second) throw OmlError("InvalidDiagram", "atom '" + a + "' declared twice");
    }
    if (blocks.empty()) throw OmlError("InvalidDiagram", "no blocks");
    std::set<std::string> covered;
    std::vector<std::set<std::string>> sets;
    for (const auto& b : blocks) {
        std::set<std::string> s(b.begin(), b.end());
        if (s.size() != b.size()) throw OmlError("InvalidDiagram", "block repeats an atom");
        if (s.size() < 2) throw OmlError("InvalidDiagram", "block with fewer than two atoms");
        for (const auto& a : s) {
            if (!known.count(a)) throw OmlError("InvalidDiagram", "block uses undeclared atom '" + a + "'");
            covered.insert(a);
        }
        for (const auto& other : sets) {
            std::size_t shared = 0;
            for (const auto& a : s) shared += other.count(a);
            if (shared > 1) throw OmlError("InvalidDiagram", "two blocks share more than one atom");
        }
        sets.push_back(std::move(s));
    }
    if (covered.size() != known.size()) throw OmlError("InvalidDiagram", "some atom lies in no block");
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Oml from_greechie(const GreechieDiagram& d) {
    d.validate();
    std::map<std::string, std::size_t> atom_rank;
    for (std::size_t i = 0; i < d.atoms.size(); ++i) atom_rank[d.atoms[i]] = i;

    // One node per (block, subset of its atoms).
    struct Node {
        std::size_t block;
        std::uint32_t mask;
    };
    std::vector<Node> nodes;
    std::vector<std::size_t> base(d.blocks.size());
    std::vector<std::vector<std::string>> block_atoms;
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        auto atoms = d.blocks[b];
        std::sort(atoms.begin(), atoms.end(),
                  [&](const std::string& x, const std::string& y) { return atom_rank[x] < atom_rank[y]; });
        if (atoms.size() > 20) throw OmlError("InvalidDiagram", "block too large");
        block_atoms.push_back(atoms);
        base[b] = nodes.size();
        for (std::uint32_t m = 0; m < (1u << atoms.size()); ++m) nodes.push_back({b, m});
    }
    auto full = [&](std::size_t b) { return (1u << block_atoms[b].size()) - 1; };
    auto node_of = [&](std::size_t b, std::uint32_t m) { return base[b] + m; };

    DisjointSets ds(nodes.size());
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        for (std::size_t c = b + 1; c < d.blocks.size(); ++c) {
            ds.unite(node_of(b, 0), node_of(c, 0));
            ds.unite(node_of(b, full(b)), node_of(c, full(c)));
            for (std::size_t i = 0; i < block_atoms[b].size(); ++i)
                for (std::size_t j = 0; j < block_atoms[c].size(); ++j)
                    if (block_atoms[b][i] == block_atoms[c][j]) {
                        ds.unite(node_of(b, 1u << i), node_of(c, 1u << j));
                        ds.unite(node_of(b, full(b) ^ (1u << i)), node_of(c, full(c) ^ (1u << j)));
                    }
        }

    // Name each class by its most readable representative.
    auto candidate = [&](const Node& nd) -> std::pair<int, std::string> {
        const auto& atoms = block_atoms[nd.block];
        std::uint32_t m = nd.mask, f = full(nd.block);
        if (m == 0) return {0, "0"};
        if (m == f) return {5, "1"};
        if (std::popcount(m) == 1) return {1, atoms[static_cast<std::size_t>(std::countr_zero(m))]};
        if (std::popcount(f ^ m) == 1) return {2, atoms[static_cast<std::size_t>(std::countr_zero(f ^ m))] + "'"};
        std::string s;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (m >> i & 1) s += (s.empty() ? "" : "+") + atoms[i];
        return {3, s};
    };
    std::map<std::size_t, std::pair<int, std::string>> best;
    std::map<std::size_t, std::size_t> height;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::size_t r = ds.find(i);
        auto c = candidate(nodes[i]);
        auto it = best.find(r);
        auto better = [](const std::pair<int, std::string>& a, const std::pair<int, std::string>& b) {
            if (a.first != b.first) return a.first < b.first;
            if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
            return a.second < b.second;
        };
        if (it == best.end() || better(c, it->second)) best[r] = c;
        auto h = static_cast<std::size_t>(std::popcount(nodes[i].mask));
        auto [hit, fresh] = height.emplace(r, h);
        if (!fresh) hit->second = std::min(hit->second, h);
    }

    std::vector<std::size_t> classes;
    for (auto& [r, _] : best) classes.push_back(r);
    std::sort(classes.begin(), classes.end(), [&](std::size_t a, std::size_t b) {
        if (best[a].first == 5 || best[b].first == 5) return best[b].first == 5 && best[a].first != 5;
        if (height[a] != height[b]) return height[a] < height[b];
        if (best[a].first != best[b].first) return best[a].first < best[b].first;
        return best[a].second < best[b].second;
    });
    std::map<std::size_t, std::size_t> index_of_class;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        index_of_class[classes[i]] = i;
        names.push_back(best[classes[i]].second);
    }
    {
        std::set<std::string> unique(names.begin(), names.end());
        if (unique.size() != names.size()) throw OmlError("PastingNotOml", "pasting produced clashing element names");
    }

    Poset::Relation le;
    const std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> ortho(classes.size(), unset);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const std::uint32_t f = full(b);
        for (std::uint32_t s = 0; s <= f; ++s) {
            std::size_t cs = index_of_class[ds.find(node_of(b, s))];
            std::size_t co = index_of_class[ds.find(node_of(b, f ^ s))];
            if (ortho[cs] != unset && ortho[cs] != co)
                throw OmlError("PastingNotOml", "element '" + names[cs] + "' receives two orthocomplements");
            ortho[cs] = co;
            // supersets of s
            for (std::uint32_t t = s;; t = (t + 1) | s) {
                le.emplace_back(names[cs], names[index_of_class[ds.find(node_of(b, t))]]);
                if (t == f) break;
            }
        }
    }

    try {
        auto order = std::make_shared<const Poset>(Poset::verify(names, le));
        return Oml::verify(order, ortho);
    } catch (const Error& e) {
        throw OmlError("PastingNotOml", e.what());
    }
}

Oml standard(std::string_view name, std::size_t n) {
    auto letter = [](std::size_t i) {
        return i < 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i);
    };
    if (name == "boolean") {
        if (n == 0) throw OmlError("UnknownName", "boolean(0) is degenerate");
        if (n == 1) return Oml::verify({"0", "1"}, {{"0", "1"}}, {{"0", "1"}});
        GreechieDiagram d;
        for (std::size_t i = 0; i < n; ++i) d.atoms.push_back(letter(i));
        d.blocks.push_back(d.atoms);
        return from_greechie(d);
    }
    if (name == "mo") {
        if (n == 0) throw OmlError("UnknownName", "mo(0) is degenerate");
        std::vector<std::string> elems{"0"};
        Poset::Relation le;
        std::vector<std::pair<std::string, std::string>> ortho{{"0", "1"}};
        for (std::size_t i = 0; i < n; ++i) {
            std::string a = letter(i), c = letter(i) + "'";
            elems.push_back(a);
            elems.push_back(c);
            for (const auto& x : {a, c}) {
                le.emplace_back("0", x);
                le.emplace_back(x, "1");
            }
            ortho.emplace_back(a, c);
        }
        elems.push_back("1");
        return Oml::verify(elems, le, ortho);
    }
    if (name == "horizontal_sum_b8") {
        if (n == 0) throw OmlError("UnknownName", "horizontal_sum_b8(0) is degenerate");
        GreechieDiagram d;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::string> block;
            for (char c : {'a', 'b', 'c'}) block.push_back(std::string(1, c) + std::to_string(i + 1));
            d.atoms.insert(d.atoms.end(), block.begin(), block.end());
            d.blocks.push_back(block);
        }
        return from_greechie(d);
    }
    throw OmlError("UnknownName", "no standard OML named '" + std::string(name) + "'");
}

}  // namespace abelsub
