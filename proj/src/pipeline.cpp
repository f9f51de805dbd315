#include "abelsub/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "abelsub/algebra_io.hpp"
#include "abelsub/text_formats.hpp"

namespace abelsub {

namespace {

PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

std::size_t partition_index(const AbelianFragment& f, const PartitionOfUnity& p) {
    const NamedPartition* np = f.find(p);
    if (!np) throw PipelineError("UnknownPartition", "partition missing from fragment");
    return static_cast<std::size_t>(np - f.partitions().data());
}

}  // namespace

TheoremInstance TheoremInstance::make(AbelianFragment fm, AbelianFragment fn,
                                      const std::vector<std::pair<std::string, std::string>>& fmap) {
    std::vector<std::optional<std::size_t>> map(fm.partitions().size());
    auto triv_m = partition_index(fm, PartitionOfUnity::trivial(fm.parent()));
    auto triv_n = partition_index(fn, PartitionOfUnity::trivial(fn.parent()));
    map[triv_m] = triv_n;
    for (const auto& [a, b] : fmap) {
        const NamedPartition* pa = fm.find(a);
        const NamedPartition* pb = fn.find(b);
        if (!pa) throw PipelineError("UnknownPartition", "no partition " + a + " on the left");
        if (!pb) throw PipelineError("UnknownPartition", "no partition " + b + " on the right");
        auto i = static_cast<std::size_t>(pa - fm.partitions().data());
        auto k = static_cast<std::size_t>(pb - fn.partitions().data());
        if (map[i] && *map[i] != k) {
            if (i == triv_m) throw PipelineError("TrivialNotFixed", "f must send the trivial subalgebra to itself");
            throw PipelineError("InconsistentMap", a + " is sent to two partitions");
        }
        map[i] = k;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (!map[i]) throw PipelineError("UnknownPartition", "no fmap line for " + fm.partitions()[i].name);
        out.push_back(*map[i]);
    }
    auto src = share(fragment_poset(fm));
    auto dst = share(fragment_poset(fn));
    OrderIso f = OrderIso::make(src, dst, std::move(out));
    return TheoremInstance{fm.parent(), fn.parent(), std::move(fm), std::move(fn), std::move(f)};
}

TheoremInstance TheoremInstance::forward(const JordanMap& g, const AbelianFragment& fm) {
    AbelianFragment fn = image_fragment(g, fm);
    OrderIso f = induced_subalgebra_map(g, fm, fn);
    return TheoremInstance{fm.parent(), fn.parent(), fm, std::move(fn), std::move(f)};
}

// ---------------------------------------------------------------------------

std::size_t ProjectionOml::index_of(const AlgElement& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p)) throw PipelineError("NotInLattice", p.to_string());
    return static_cast<std::size_t>(it - elements.begin());
}

ProjectionOml projection_oml(const FinDimAlgebra& a, const std::vector<AlgElement>& gens, std::size_t max_size) {
    std::set<AlgElement> seen;
    std::vector<AlgElement> all;
    auto push = [&](AlgElement p) {
        if (seen.insert(p).second) {
            all.push_back(std::move(p));
            if (all.size() > max_size)
                throw PipelineError("FragmentTooLarge", "generated projection lattice exceeds " +
                                                            std::to_string(max_size) + " elements");
        }
    };
    push(AlgElement::zero(a));
    push(AlgElement::identity(a));
    for (const auto& g : gens) {
        if (!g.is_projection()) throw PipelineError("NotProjection", g.to_string());
        push(g);
        push(proj_complement(g));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            // all may grow while we iterate; copies keep references valid
            AlgElement x = all[i], y = all[j];
            if (proj_leq(x, y) || proj_leq(y, x)) continue;
            AlgElement jn = proj_join(x, y);
            push(proj_complement(jn));
            push(std::move(jn));
            AlgElement mt = proj_meet(x, y);
            push(proj_complement(mt));
            push(std::move(mt));
        }
    ProjectionOml out;
    out.elements.assign(seen.begin(), seen.end());
    const AlgElement zero = AlgElement::zero(a), one = AlgElement::identity(a);
    std::vector<std::string> names;
    std::size_t k = 0;
    for (const auto& p : out.elements)
        names.push_back(p == zero ? "0" : p == one ? "1" : "p" + std::to_string(++k));
    Poset::Relation le;
    std::vector<std::pair<std::string, std::string>> ortho;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        ortho.emplace_back(names[i], names[out.index_of(proj_complement(out.elements[i]))]);
        for (std::size_t j = 0; j < out.elements.size(); ++j)
            if (i != j && proj_leq(out.elements[i], out.elements[j])) le.emplace_back(names[i], names[j]);
    }
    out.oml = std::make_shared<const Oml>(Oml::verify(names, le, ortho));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<SpectralElement> fragment_inputs(const AbelianFragment& f) {
    std::vector<SpectralElement> out;
    for (const auto& np : f.partitions()) {
        std::vector<GaussScalar> c;
        for (std::size_t i = 0; i < np.partition.size(); ++i) c.emplace_back(static_cast<long>(i + 1));
        out.push_back(spectral_decompose(lambda_embed(np.partition, c)));
    }
    return out;
}

Candidate extend_candidate(const TheoremInstance& t, const PipelineResult& r, OmlIso k) {
    Candidate c{std::move(k), std::nullopt, ""};
    try {
        std::vector<std::pair<AlgElement, AlgElement>> pairs;
        for (std::size_t x = 0; x < r.lm.elements.size(); ++x)
            pairs.emplace_back(r.lm.elements[x], r.ln.elements[c.k(x)]);
        auto psi = ProjMapFragment::make(t.m, t.n, std::move(pairs));
        c.map = spectral_extend(psi, fragment_inputs(t.fm));
    } catch (const Error& e) {
        c.error = e.what();
    }
    return c;
}

Bits members_of(const ProjectionOml& l, const PartitionOfUnity& p) {
    Bits b(l.elements.size());
    for (const auto& x : psi_project(p)) b.set(l.index_of(x));
    return b;
}

std::string count_of(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

}  // namespace

PipelineResult run_pipeline_traced(const TheoremInstance& t, const PipelineOptions& opt) {
    PipelineResult r;
    if (!is_type_I2_free(t.m) || !is_type_I2_free(t.n))
        r.warnings.push_back("an algebra has a 2x2 summand; reconstruction may be ambiguous");

    // g: restriction to subalgebras with finitely many projections
    auto fin = finite_part(t.f.source());
    r.g = t.f;
    r.log.push_back("g: restricted f to " + count_of(fin.size(), "of") + " " +
                    std::to_string(t.f.source().size()) + " fragment subalgebras (all are finite here)");

    r.lm = projection_oml(t.m, t.fm.projections(), opt.max_size);
    r.ln = projection_oml(t.n, t.fn.projections(), opt.max_size);
    r.bm = boolean_subalgebras(r.lm.oml);
    r.bn = boolean_subalgebras(r.ln.oml);
    r.log.push_back("lattices: left " + count_of(r.lm.elements.size(), "projections") + ", " +
                    count_of(blocks(*r.lm.oml).size(), "blocks") + ", " +
                    count_of(r.bm.size(), "Boolean subalgebras") + "; right " +
                    count_of(r.ln.elements.size(), "projections") + ", " + count_of(r.bn.size(), "Boolean subalgebras"));
    bool four = has_4element_block(*r.lm.oml) || has_4element_block(*r.ln.oml);
    if (four) r.warnings.push_back("a generated lattice has a 4-element block");

    // h: transport along S -> S ∩ Proj
    for (const auto& np : t.fm.partitions()) {
        auto d = r.bm.find(members_of(r.lm, np.partition));
        if (!d) throw PipelineError("NotBoolean", "projections of " + np.name + " are not a Boolean subalgebra");
        r.fragment_m.push_back(*d);
    }
    for (const auto& np : t.fn.partitions()) {
        auto d = r.bn.find(members_of(r.ln, np.partition));
        if (!d) throw PipelineError("NotBoolean", "projections of " + np.name + " are not a Boolean subalgebra");
        r.fragment_n.push_back(*d);
    }
    auto hs = share(r.bm.poset->induced(r.fragment_m));
    auto ht = share(r.bn.poset->induced(r.fragment_n));
    std::vector<std::size_t> hmap;
    for (std::size_t s = 0; s < t.fm.partitions().size(); ++s) hmap.push_back((*r.g)(s));
    r.h = OrderIso::make(hs, ht, hmap);
    for (std::size_t s = 0; s < t.fm.partitions().size(); ++s)
        if (!(members_of(r.ln, t.image(s)) == r.bn.subalgebras[r.fragment_n[(*r.h)(s)]].members))
            throw PipelineError("TransportFailed", "h(S ∩ Proj M) differs from g(S) ∩ Proj N at " +
                                                       t.fm.partitions()[s].name);
    r.log.push_back("h: " + count_of(hmap.size(), "fragment subalgebras") + " sent to " +
                    count_of(r.fragment_n.size(), "target subalgebras") + "; h(S ∩ Proj M) = g(S) ∩ Proj N checked");

    // j: extension through ideals to all Boolean subalgebras
    OrderIso jm = extend_iso_via_ideals(*r.h, r.bm.poset, r.bn.poset);
    r.j = BsubIso::make(r.bm, r.bn, jm.map());
    std::set<std::size_t> covered(r.fragment_m.begin(), r.fragment_m.end());
    r.log.push_back(std::string("j: extended to ") + count_of(r.bm.size(), "Boolean subalgebras") +
                    (covered.size() == r.bm.size() ? " (identity extension, fragment is all of BSub)"
                                                   : " (" + std::to_string(r.bm.size() - covered.size()) +
                                                         " reached through ideals)"));

    // k: reconstruction of the lattice isomorphism
    std::vector<OmlIso> ks;
    try {
        ks = reconstruct_oml_isos(*r.j);
    } catch (const ReconstructError& e) {
        if (e.code() != "NoSolution") throw;
    }
    r.log.push_back("k: " + count_of(ks.size(), "lattice isomorphisms") + " induce j" +
                    (four ? " (hypothesis without any 4-element blocks fails)" : ""));

    // F: spectral extension
    bool build_all = opt.diagnostic || ks.size() == 1;
    for (auto& k : ks) {
        if (build_all)
            r.candidates.push_back(extend_candidate(t, r, std::move(k)));
        else
            r.candidates.push_back(Candidate{std::move(k), std::nullopt, ""});
    }
    if (ks.size() == 1) {
        if (!r.candidates[0].map) throw PipelineError("ExtensionFailed", r.candidates[0].error);
        r.F = r.candidates[0].map;
        r.log.push_back("F: Jordan map on a span of dimension " + std::to_string(r.F->domain().dim()));
    }
    return r;
}

JordanMap run_pipeline(const TheoremInstance& t, const PipelineOptions& opt) {
    PipelineResult r = run_pipeline_traced(t, opt);
    if (!r.F)
        throw PipelineError("AmbiguousReconstruction",
                            count_of(r.candidates.size(), "candidate lattice isomorphisms") +
                                "; uniqueness needs an orthomodular lattice without any 4-element blocks");
    return *r.F;
}

// ---------------------------------------------------------------------------

Report verify_claims(const TheoremInstance& t, const JordanMap& F) {
    Finding c1{"claim1 projections", true, ""}, c2{"claim2 partition", true, ""}, c3{"claim3 subalgebra", true, ""};
    auto fail = [](Finding& f, const std::string& w) {
        if (f.pass) f.witness = w;
        f.pass = false;
    };
    for (std::size_t s = 0; s < t.fm.partitions().size(); ++s) {
        const auto& np = t.fm.partitions()[s];
        const PartitionOfUnity& fs = t.image(s);
        std::vector<AlgElement> mapped;
        bool ok = true;
        for (const auto& p : psi_project(np.partition)) {
            if (!F.covers(p)) {
                ok = false;
                break;
            }
            mapped.push_back(F(p));
        }
        if (!ok) {
            fail(c1, np.name + " is outside the domain of F");
            fail(c2, np.name + " is outside the domain of F");
            fail(c3, np.name + " is outside the domain of F");
            continue;
        }
        std::sort(mapped.begin(), mapped.end());
        if (!(mapped == psi_project(fs))) fail(c1, np.name);
        std::vector<AlgElement> atoms;
        for (const auto& a : np.partition.atoms()) atoms.push_back(F(a));
        try {
            PartitionOfUnity::make(t.n, atoms);
        } catch (const AlgebraError& e) {
            fail(c2, np.name + ": " + e.what());
        }
        if (!(span_of(t.n, atoms) == span_of(t.n, fs.atoms()))) fail(c3, np.name);
    }
    Report r;
    r.findings = {c1, c2, c3};
    return r;
}

Report verify_uniqueness(const TheoremInstance& t, const JordanMap& F, const PipelineOptions& opt) {
    PipelineOptions o = opt;
    o.diagnostic = false;
    PipelineResult r = run_pipeline_traced(t, o);
    Finding a{"unique k", r.candidates.size() == 1, ""};
    if (!a.pass) {
        a.witness = count_of(r.candidates.size(), "candidates");
        for (const auto& c : r.candidates) a.witness += "\n  " + c.k.describe();
    }
    // a linear map is fixed by its values on a spanning set
    Span frag = span_of(t.m, t.fm.projections());
    Finding b{"span determined", frag == F.domain(), ""};
    if (!b.pass)
        b.witness = "fragment projections span dimension " + std::to_string(frag.dim()) + ", F is defined on " +
                    std::to_string(F.domain().dim());
    Finding c{"F matches reconstruction", r.F && *r.F == F, r.F ? "" : "no unique reconstruction"};
    Report rep;
    rep.findings = {a, b, c};
    return rep;
}

// ---------------------------------------------------------------------------

InstanceFile parse_instance(std::string_view text, std::string_view source) {
    InstanceFile f;
    for (const auto& line : tokenize_lines(text)) {
        const auto& w = line.words;
        if (w[0] == "left" || w[0] == "right") {
            if (w.size() != 2) throw ParseError(source, line.number, w[0] + " takes one path");
            (w[0] == "left" ? f.left : f.right) = w[1];
        } else if (w[0] == "coarsen") {
            if (w.size() != 1) throw ParseError(source, line.number, "coarsen takes no arguments");
            f.coarsen = true;
        } else if (w[0] == "fmap") {
            if (w.size() != 3) throw ParseError(source, line.number, "fmap takes two partition names");
            f.fmap.emplace_back(w[1], w[2]);
        } else {
            throw ParseError(source, line.number, "unknown directive '" + w[0] + "'");
        }
    }
    if (f.left.empty() || f.right.empty()) throw ParseError(std::string(source) + ": missing left or right algebra");
    return f;
}

std::string write_instance(const InstanceFile& f) {
    std::ostringstream out;
    out << "left " << f.left << "\nright " << f.right << '\n';
    if (f.coarsen) out << "coarsen\n";
    for (const auto& [a, b] : f.fmap) out << "fmap " << a << ' ' << b << '\n';
    return out.str();
}

TheoremInstance build_instance(const InstanceFile& f, const AbelianFragment& fm, const AbelianFragment& fn) {
    if (!f.coarsen) return TheoremInstance::make(fm, fn, f.fmap);
    AbelianFragment cm = coarsening_closure(fm), cn = coarsening_closure(fn);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [a, b] : f.fmap) {
        const NamedPartition* pa = fm.find(a);
        const NamedPartition* pb = fn.find(b);
        if (!pa) throw PipelineError("UnknownPartition", "no partition " + a + " on the left");
        if (!pb) throw PipelineError("UnknownPartition", "no partition " + b + " on the right");
        if (pa->partition.size() != pb->partition.size())
            throw PipelineError("InconsistentMap", a + " and " + b + " have different atom counts");
        for (const auto& g : atom_groupings(pa->partition.size()))
            pairs.emplace_back(cm.find(pa->partition.merge(g))->name, cn.find(pb->partition.merge(g))->name);
    }
    return TheoremInstance::make(std::move(cm), std::move(cn), pairs);
}

TheoremInstance load_instance(const std::string& path) {
    InstanceFile f = parse_instance(read_file(path), path);
    auto base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path q(p);
        return (q.is_absolute() ? q : base / q).string();
    };
    AlgebraFile left = read_algebra(resolve(f.left));
    AlgebraFile right = read_algebra(resolve(f.right));
    return build_instance(f, left.fragment(), right.fragment());
}

}  // namespace abelsub
