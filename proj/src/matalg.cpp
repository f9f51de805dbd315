#include "abelsub/matalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace abelsub {

AlgElement jordan_product(const AlgElement& a, const AlgElement& b) {
    return (a * b + b * a) * GaussScalar::ratio(1, 2);
}

namespace {

std::vector<AlgElement> basis_elements(const FinDimAlgebra& a) {
    std::vector<AlgElement> out;
    for (std::size_t s = 0; s < a.summands(); ++s) {
        std::size_t n = a.summand_dims()[s];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.push_back(AlgElement::matrix_unit(a, s, i, j));
    }
    return out;
}

std::vector<AlgElement> to_elements(const FinDimAlgebra& a, const std::vector<Vec>& vs) {
    std::vector<AlgElement> out;
    for (const auto& v : vs) out.push_back(AlgElement::from_coords(a, v));
    return out;
}

}  // namespace

std::vector<AlgElement> commutant(const FinDimAlgebra& a, const std::vector<AlgElement>& s) {
    std::size_t d = a.dimension();
    auto units = basis_elements(a);
    // rows of the system: one per (generator, coordinate)
    std::vector<Vec> rows;
    for (const auto& g : s) {
        if (!(g.parent() == a)) throw AlgebraError("ParentMismatch", "element of a different algebra");
        std::vector<Vec> cols;
        for (const auto& e : units) cols.push_back((e * g - g * e).coords());
        for (std::size_t r = 0; r < d; ++r) {
            Vec row(d);
            bool any = false;
            for (std::size_t k = 0; k < d; ++k) {
                row[k] = cols[k][r];
                any = any || !row[k].is_zero();
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    return to_elements(a, nullspace(rows, d));
}

namespace {

// Block-diagonal embedding into the full matrix ring on the concatenated space.
AlgElement to_full(const FinDimAlgebra& full, const AlgElement& x) {
    AlgElement out = AlgElement::zero(full);
    Matrix m(full.summand_dims()[0], full.summand_dims()[0]);
    std::size_t at = 0;
    for (const auto& b : x.blocks()) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) m(at + r, at + c) = b(r, c);
        at += b.rows();
    }
    return AlgElement(full, {m});
}

AlgElement from_full(const FinDimAlgebra& a, const AlgElement& x) {
    const Matrix& m = x.block(0);
    std::vector<Matrix> blocks;
    std::size_t at = 0;
    for (std::size_t n : a.summand_dims()) {
        Matrix b(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) b(r, c) = m(at + r, at + c);
        blocks.push_back(std::move(b));
        at += n;
    }
    AlgElement out(a, std::move(blocks));
    if (!(to_full(x.parent(), out) == x)) throw AlgebraError("NotBlockDiagonal", "element leaves the direct sum");
    return out;
}

}  // namespace

// Both commutants are taken in the full matrix ring of the defining
// representation; inside a direct sum the second one would also contain the
// centre.
std::vector<AlgElement> double_commutant(const FinDimAlgebra& a, const std::vector<AlgElement>& s) {
    std::size_t n = 0;
    for (std::size_t d : a.summand_dims()) n += d;
    FinDimAlgebra full({n});
    std::vector<AlgElement> lifted;
    for (const auto& x : s) {
        if (!(x.parent() == a)) throw AlgebraError("ParentMismatch", "element of a different algebra");
        lifted.push_back(to_full(full, x));
    }
    std::vector<AlgElement> out;
    for (const auto& x : commutant(full, commutant(full, lifted))) out.push_back(from_full(a, x));
    return out;
}

bool proj_leq(const AlgElement& p, const AlgElement& q) { return p * q == p; }

AlgElement proj_complement(const AlgElement& p) { return AlgElement::identity(p.parent()) - p; }

AlgElement proj_join(const AlgElement& p, const AlgElement& q) {
    require_same_parent(p, q);
    std::vector<Matrix> blocks;
    for (std::size_t s = 0; s < p.blocks().size(); ++s) {
        const Matrix& a = p.block(s);
        const Matrix& b = q.block(s);
        std::size_t n = a.rows();
        Span cols(n);
        std::vector<Vec> chosen;
        for (const Matrix* m : {&a, &b})
            for (std::size_t c = 0; c < n; ++c) {
                Vec v(n);
                for (std::size_t r = 0; r < n; ++r) v[r] = (*m)(r, c);
                if (cols.add(v)) chosen.push_back(std::move(v));
            }
        if (chosen.empty()) {
            blocks.emplace_back(n, n);
            continue;
        }
        Matrix B(n, chosen.size());
        for (std::size_t c = 0; c < chosen.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) B(r, c) = chosen[c][r];
        Matrix Bs = B.adjoint();
        blocks.push_back(B * inverse(Bs * B) * Bs);
    }
    return AlgElement(p.parent(), std::move(blocks));
}

AlgElement proj_meet(const AlgElement& p, const AlgElement& q) {
    return proj_complement(proj_join(proj_complement(p), proj_complement(q)));
}

// ---------------------------------------------------------------------------

PartitionOfUnity PartitionOfUnity::make(const FinDimAlgebra& parent, std::vector<AlgElement> atoms) {
    if (atoms.empty()) throw AlgebraError("NotPartition", "a partition of unity needs at least one atom");
    AlgElement sum = AlgElement::zero(parent);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& p = atoms[i];
        if (!(p.parent() == parent)) throw AlgebraError("ParentMismatch", "atom of a different algebra");
        if (p.is_zero()) throw AlgebraError("NotPartition", "atom " + std::to_string(i) + " is zero");
        if (!p.is_projection()) throw AlgebraError("NotPartition", "atom " + std::to_string(i) + " is not a projection");
        for (std::size_t j = 0; j < i; ++j)
            if (!(atoms[j] * p).is_zero())
                throw AlgebraError("NotPartition",
                                   "atoms " + std::to_string(j) + " and " + std::to_string(i) + " are not orthogonal");
        sum += p;
    }
    if (!(sum == AlgElement::identity(parent))) throw AlgebraError("NotPartition", "atoms do not sum to the identity");
    PartitionOfUnity out;
    out.parent_ = parent;
    out.sorted_ = atoms;
    std::sort(out.sorted_.begin(), out.sorted_.end());
    out.atoms_ = std::move(atoms);
    return out;
}

PartitionOfUnity PartitionOfUnity::trivial(const FinDimAlgebra& parent) {
    return make(parent, {AlgElement::identity(parent)});
}

bool PartitionOfUnity::coarser_than(const PartitionOfUnity& other) const {
    for (const auto& a : atoms_) {
        AlgElement sum = AlgElement::zero(parent_);
        for (const auto& q : other.atoms_)
            if (q * a == q) sum += q;
        if (!(sum == a)) return false;
    }
    return true;
}

PartitionOfUnity PartitionOfUnity::merge(const std::vector<std::vector<std::size_t>>& groups) const {
    std::vector<bool> seen(atoms_.size(), false);
    std::vector<AlgElement> merged;
    for (const auto& g : groups) {
        AlgElement sum = AlgElement::zero(parent_);
        for (std::size_t i : g) {
            if (i >= atoms_.size() || seen[i]) throw AlgebraError("BadGrouping", "grouping must cover each atom once");
            seen[i] = true;
            sum += atoms_[i];
        }
        merged.push_back(std::move(sum));
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw AlgebraError("BadGrouping", "grouping must cover each atom once");
    return make(parent_, std::move(merged));
}

AlgElement lambda_embed(const PartitionOfUnity& p, const std::vector<GaussScalar>& coeffs) {
    if (coeffs.size() != p.size())
        throw AlgebraError("ArityMismatch", std::to_string(coeffs.size()) + " coefficients for " +
                                                std::to_string(p.size()) + " atoms");
    AlgElement out = AlgElement::zero(p.parent());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += p.atoms()[i] * coeffs[i];
    return out;
}

std::vector<AlgElement> psi_project(const PartitionOfUnity& p) {
    std::size_t k = p.size();
    std::vector<AlgElement> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        AlgElement sum = AlgElement::zero(p.parent());
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) sum += p.atoms()[i];
        out.push_back(std::move(sum));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartitionOfUnity atoms_of_abelian(const FinDimAlgebra& a, const std::vector<AlgElement>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!(basis[i].parent() == a)) throw AlgebraError("ParentMismatch", "element of a different algebra");
        for (std::size_t j = 0; j <= i; ++j)
            if (!(basis[i] * basis[j] == basis[j] * basis[i]) ||
                !(basis[i].adjoint() * basis[j] == basis[j] * basis[i].adjoint()))
                throw AlgebraError("NotAbelian", "basis elements " + std::to_string(j) + " and " + std::to_string(i) +
                                                     " do not commute");
    }
    std::vector<AlgElement> atoms{AlgElement::identity(a)};
    auto refine = [&](const AlgElement& h) {
        SpectralElement sp = spectral_decompose(h);
        std::vector<AlgElement> next;
        for (const auto& p : atoms)
            for (const auto& [lambda, q] : sp.pairs()) {
                AlgElement r = p * q;
                if (!r.is_zero()) next.push_back(std::move(r));
            }
        atoms = std::move(next);
    };
    const GaussScalar half = GaussScalar::ratio(1, 2);
    for (const auto& b : basis) {
        refine((b + b.adjoint()) * half);
        refine((b - b.adjoint()) * (half / GaussScalar::i()));
    }
    return PartitionOfUnity::make(a, std::move(atoms));
}

std::vector<AlgElement> psi_project(const FinDimAlgebra& a, const std::vector<AlgElement>& basis) {
    return psi_project(atoms_of_abelian(a, basis));
}

// ---------------------------------------------------------------------------

SpectralElement SpectralElement::make(std::vector<std::pair<GaussScalar, AlgElement>> pairs) {
    if (pairs.empty()) throw AlgebraError("NotSpectral", "no spectral pairs");
    std::set<GaussScalar> seen;
    std::vector<AlgElement> projs;
    for (const auto& [lambda, p] : pairs) {
        if (!lambda.is_real()) throw AlgebraError("NotSpectral", "eigenvalue " + lambda.to_string() + " is not real");
        if (!seen.insert(lambda).second)
            throw AlgebraError("NotSpectral", "eigenvalue " + lambda.to_string() + " repeats");
        projs.push_back(p);
    }
    try {
        PartitionOfUnity::make(pairs.front().second.parent(), projs);
    } catch (const AlgebraError& e) {
        throw AlgebraError("NotSpectral", e.what());
    }
    std::sort(pairs.begin(), pairs.end());
    SpectralElement out;
    out.pairs_ = std::move(pairs);
    return out;
}

AlgElement SpectralElement::value() const {
    AlgElement out = AlgElement::zero(pairs_.front().second.parent());
    for (const auto& [lambda, p] : pairs_) out += p * lambda;
    return out;
}

namespace {

using Poly = std::vector<mpq_class>;  // low degree first

mpq_class eval(const Poly& p, const mpq_class& x) {
    mpq_class v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

std::vector<mpq_class> rational_roots(Poly p) {
    std::vector<mpq_class> roots;
    while (p.size() > 1) {
        if (p.front() == 0) {
            roots.emplace_back(0);
            p.erase(p.begin());
            continue;
        }
        mpz_class l = 1;
        for (const auto& c : p) l = lcm(l, c.get_den());
        mpz_class a0 = mpz_class(p.front() * l);
        mpz_class an = mpz_class(p.back() * l);
        std::optional<mpq_class> found;
        for (const auto& u : divisors(a0)) {
            for (const auto& v : divisors(an)) {
                for (int sign : {1, -1}) {
                    mpq_class x(u * sign, v);
                    x.canonicalize();
                    if (eval(p, x) == 0) {
                        found = x;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw AlgebraError("NonRationalSpectrum", "minimal polynomial has an irrational root");
        roots.push_back(*found);
        // synthetic division by (x - r)
        Poly q(p.size() - 1);
        mpq_class carry = 0;
        for (std::size_t k = p.size(); k-- > 1;) {
            carry = carry * *found + p[k];
            q[k - 1] = carry;
        }
        p = std::move(q);
    }
    return roots;
}

}  // namespace

SpectralElement spectral_decompose(const AlgElement& a) {
    if (!a.is_self_adjoint()) throw AlgebraError("NotSelfAdjoint", "spectral form needs a self-adjoint element");
    const FinDimAlgebra& alg = a.parent();
    Span powers(alg.dimension());
    AlgElement x = AlgElement::identity(alg);
    Poly minpoly;
    for (;;) {
        auto c = powers.combination(x.coords());
        if (c) {
            for (const auto& g : *c) {
                if (!g.is_real()) throw AlgebraError("NonRationalSpectrum", "minimal polynomial is not rational");
                minpoly.push_back(-g.re());
            }
            minpoly.emplace_back(1);
            break;
        }
        powers.add(x.coords());
        x = x * a;
    }
    auto roots = rational_roots(minpoly);
    std::sort(roots.begin(), roots.end());
    std::vector<std::pair<GaussScalar, AlgElement>> pairs;
    AlgElement one = AlgElement::identity(alg);
    for (const auto& lambda : roots) {
        AlgElement p = one;
        for (const auto& mu : roots) {
            if (mu == lambda) continue;
            p = p * ((a - one * GaussScalar(mu)) * (GaussScalar(1) / GaussScalar(lambda - mu)));
        }
        pairs.emplace_back(GaussScalar(lambda), std::move(p));
    }
    return SpectralElement::make(std::move(pairs));
}

// ---------------------------------------------------------------------------

AbelianFragment::AbelianFragment(FinDimAlgebra parent, std::vector<NamedPartition> parts, bool require_closed)
    : parent_(std::move(parent)) {
    std::set<std::string> names;
    for (auto& np : parts) {
        if (!(np.partition.parent() == parent_)) throw AlgebraError("ParentMismatch", "partition " + np.name);
        if (!names.insert(np.name).second) throw AlgebraError("DuplicateName", "partition name " + np.name + " repeats");
        if (find(np.partition))
            throw AlgebraError("DuplicatePartition", np.name + " equals " + find(np.partition)->name);
        parts_.push_back(std::move(np));
    }
    auto triv = PartitionOfUnity::trivial(parent_);
    if (!find(triv)) {
        if (names.count("1")) throw AlgebraError("DuplicateName", "name 1 is reserved for the trivial partition");
        parts_.insert(parts_.begin(), NamedPartition{"1", triv});
    }
    if (require_closed && !coarsening_closed())
        throw AlgebraError("NotCoarseningClosed", "fragment is not closed under merging atoms");
}

const NamedPartition* AbelianFragment::find(const std::string& name) const {
    for (const auto& np : parts_)
        if (np.name == name) return &np;
    return nullptr;
}

const NamedPartition* AbelianFragment::find(const PartitionOfUnity& p) const {
    for (const auto& np : parts_)
        if (np.partition == p) return &np;
    return nullptr;
}

namespace {

// Restricted growth strings of length n.
std::vector<std::vector<std::vector<std::size_t>>> groupings(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::size_t> rgs(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
        if (i == n) {
            std::vector<std::vector<std::size_t>> g(blocks);
            for (std::size_t k = 0; k < n; ++k) g[rgs[k]].push_back(k);
            out.push_back(std::move(g));
            return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    if (n > 0) {
        rgs[0] = 0;
        rec(rec, 1, 1);
    }
    return out;
}

std::string grouping_name(const std::vector<std::vector<std::size_t>>& g, std::size_t atoms) {
    bool wide = atoms > 10;
    std::string s;
    for (std::size_t b = 0; b < g.size(); ++b) {
        if (b) s += '|';
        for (std::size_t k : g[b]) {
            if (wide && k != g[b].front()) s += '.';
            s += std::to_string(k);
        }
    }
    return s;
}

}  // namespace

std::vector<std::vector<std::vector<std::size_t>>> atom_groupings(std::size_t n) { return groupings(n); }

bool AbelianFragment::coarsening_closed() const {
    for (const auto& np : parts_)
        for (const auto& g : groupings(np.partition.size()))
            if (!find(np.partition.merge(g))) return false;
    return true;
}

std::vector<AlgElement> AbelianFragment::projections() const {
    std::set<AlgElement> all;
    for (const auto& np : parts_)
        for (auto& p : psi_project(np.partition)) all.insert(std::move(p));
    return {all.begin(), all.end()};
}

AbelianFragment coarsening_closure(const AbelianFragment& f) {
    std::vector<NamedPartition> parts = f.partitions();
    auto known = [&](const PartitionOfUnity& p) {
        return std::any_of(parts.begin(), parts.end(), [&](const NamedPartition& np) { return np.partition == p; });
    };
    for (const auto& np : f.partitions())
        for (const auto& g : groupings(np.partition.size())) {
            PartitionOfUnity m = np.partition.merge(g);
            if (!known(m)) parts.push_back({np.name + ":" + grouping_name(g, np.partition.size()), std::move(m)});
        }
    return AbelianFragment(f.parent(), std::move(parts), true);
}

Poset fragment_poset(const AbelianFragment& f) {
    std::vector<std::string> names;
    Poset::Relation le;
    for (const auto& a : f.partitions()) {
        names.push_back(a.name);
        for (const auto& b : f.partitions())
            if (&a != &b && a.partition.coarser_than(b.partition)) le.emplace_back(a.name, b.name);
    }
    return Poset::verify(std::move(names), le);
}

bool is_type_I2_free(const FinDimAlgebra& a) {
    const auto& d = a.summand_dims();
    return std::find(d.begin(), d.end(), 2) == d.end();
}

}  // namespace abelsub
