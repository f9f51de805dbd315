#include "abelsub/jordan.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace abelsub {

ProjMapFragment ProjMapFragment::make(FinDimAlgebra source, FinDimAlgebra target,
                                      std::vector<std::pair<AlgElement, AlgElement>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& [p, q] : pairs) {
        if (!(p.parent() == source) || !(q.parent() == target))
            throw JordanError("ParentMismatch", "pair outside the declared algebras");
        if (!p.is_projection()) throw JordanError("NotProjection", "source " + p.to_string());
        if (!q.is_projection()) throw JordanError("NotProjection", "image " + q.to_string());
    }
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first)
            throw JordanError("NotFunction", pairs[i].first.to_string() + " has two images");
    ProjMapFragment out;
    out.source_ = std::move(source);
    out.target_ = std::move(target);
    out.pairs_ = std::move(pairs);
    const auto& ps = out.pairs_;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (ps[i].second == ps[j].second)
                throw JordanError("NotInjective", ps[j].first.to_string() + " and " + ps[i].first.to_string());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        auto c = out.image(proj_complement(ps[i].first));
        if (!c || !(*c == proj_complement(ps[i].second)))
            throw JordanError("NotOrthoPreserving", "complement of " + ps[i].first.to_string());
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (i == j) continue;
            if (proj_leq(ps[i].first, ps[j].first) && !proj_leq(ps[i].second, ps[j].second))
                throw JordanError("NotOrderPreserving", ps[i].first.to_string() + " <= " + ps[j].first.to_string());
            if (j < i && (ps[i].first * ps[j].first).is_zero()) {
                auto s = out.image(ps[i].first + ps[j].first);
                if (s && !(*s == ps[i].second + ps[j].second))
                    throw JordanError("NotAdditive", ps[i].first.to_string() + " + " + ps[j].first.to_string());
            }
        }
    }
    return out;
}

std::optional<AlgElement> ProjMapFragment::image(const AlgElement& p) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p,
                               [](const auto& pr, const AlgElement& x) { return pr.first < x; });
    if (it == pairs_.end() || !(it->first == p)) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------

JordanMap JordanMap::make(FinDimAlgebra source, FinDimAlgebra target, std::vector<AlgElement> generators,
                          std::vector<AlgElement> images) {
    if (generators.size() != images.size()) throw JordanError("ArityMismatch", "generator and image counts differ");
    JordanMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.span_ = Span(m.source_.dimension());
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (!(generators[k].parent() == m.source_) || !(images[k].parent() == m.target_))
            throw JordanError("ParentMismatch", "generator " + std::to_string(k));
        Vec v = generators[k].coords();
        if (auto c = m.span_.combination(v)) {
            AlgElement expect = AlgElement::zero(m.target_);
            for (std::size_t g = 0; g < c->size(); ++g)
                if (!(*c)[g].is_zero()) expect += m.images_[g] * (*c)[g];
            if (!(expect == images[k]))
                throw JordanError("SpanInconsistent", "generator " + generators[k].to_string() + " is a combination of " +
                                                          "earlier ones but its image " + images[k].to_string() +
                                                          " is not the same combination " + expect.to_string());
        }
        m.span_.add(v);
        m.gens_.push_back(std::move(generators[k]));
        m.images_.push_back(std::move(images[k]));
    }
    return m;
}

JordanMap JordanMap::full(const FinDimAlgebra& source, const FinDimAlgebra& target,
                          const std::function<AlgElement(const AlgElement&)>& f) {
    std::vector<AlgElement> gens, imgs;
    for (std::size_t s = 0; s < source.summands(); ++s) {
        std::size_t n = source.summand_dims()[s];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                gens.push_back(AlgElement::matrix_unit(source, s, i, j));
                imgs.push_back(f(gens.back()));
            }
    }
    return make(source, target, std::move(gens), std::move(imgs));
}

JordanMap JordanMap::identity(const FinDimAlgebra& a) {
    return full(a, a, [](const AlgElement& x) { return x; });
}

JordanMap JordanMap::transpose(const FinDimAlgebra& a) {
    return full(a, a, [](const AlgElement& x) { return x.transpose(); });
}

JordanMap JordanMap::conjugation(const AlgElement& u) {
    AlgElement us = u.adjoint();
    return full(u.parent(), u.parent(), [&](const AlgElement& x) { return u * x * us; });
}

bool JordanMap::covers(const AlgElement& x) const { return x.parent() == source_ && span_.contains(x.coords()); }

AlgElement JordanMap::operator()(const AlgElement& x) const {
    if (!(x.parent() == source_)) throw JordanError("ParentMismatch", "argument of a different algebra");
    auto c = span_.combination(x.coords());
    if (!c) throw JordanError("OutsideSpan", x.to_string() + " is outside the map's domain");
    AlgElement out = AlgElement::zero(target_);
    for (std::size_t g = 0; g < c->size(); ++g)
        if (!(*c)[g].is_zero()) out += images_[g] * (*c)[g];
    return out;
}

JordanMap JordanMap::after(const JordanMap& first) const {
    std::vector<AlgElement> imgs;
    for (const auto& y : first.images_) imgs.push_back((*this)(y));
    return make(first.source_, target_, first.gens_, std::move(imgs));
}

bool JordanMap::agrees_on(const JordanMap& other, const std::vector<AlgElement>& xs) const {
    for (const auto& x : xs) {
        if (!covers(x) || !other.covers(x)) return false;
        if (!((*this)(x) == other(x))) return false;
    }
    return true;
}

bool operator==(const JordanMap& a, const JordanMap& b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_) || !(a.span_ == b.span_)) return false;
    for (const auto& row : a.span_.basis()) {
        AlgElement x = AlgElement::from_coords(a.source_, row);
        if (!(a(x) == b(x))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

JordanMap spectral_extend(const ProjMapFragment& psi, const std::vector<SpectralElement>& inputs) {
    std::vector<AlgElement> gens, imgs;
    for (const auto& [p, q] : psi.pairs()) {
        gens.push_back(p);
        imgs.push_back(q);
    }
    for (const auto& s : inputs) {
        AlgElement img = AlgElement::zero(psi.target());
        for (const auto& [lambda, p] : s.pairs()) {
            auto q = psi.image(p);
            if (!q) throw JordanError("UncoveredProjection", p.to_string() + " is not in the fragment's domain");
            img += *q * lambda;
        }
        gens.push_back(s.value());
        imgs.push_back(std::move(img));
    }
    JordanMap m = JordanMap::make(psi.source(), psi.target(), std::move(gens), std::move(imgs));
    for (const auto& row : m.domain().basis()) {
        AlgElement x = AlgElement::from_coords(psi.source(), row);
        AlgElement xs = x.adjoint();
        if (!m.covers(xs) || !(m(xs) == m(x).adjoint()))
            throw JordanError("NotStarPreserving", "adjoint of " + x.to_string());
    }
    return m;
}

// ---------------------------------------------------------------------------

bool Report::ok() const {
    return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.pass; });
}

bool Report::passed(const std::string& property) const {
    for (const auto& f : findings)
        if (f.property == property) return f.pass;
    return false;
}

std::string Report::to_text() const {
    std::ostringstream out;
    for (const auto& f : findings) {
        out << (f.pass ? "PASS " : "FAIL ") << f.property;
        if (!f.pass && !f.witness.empty()) out << ": " << f.witness;
        out << '\n';
    }
    if (skipped) out << "note " << skipped << " products outside the domain span were not checked\n";
    return out.str();
}

Report verify_jordan(const JordanMap& phi, const std::vector<std::pair<AlgElement, AlgElement>>& samples) {
    Finding domain{"domain", true, ""}, linear{"linear", true, ""}, star{"involution", true, ""},
        unit{"unit", true, ""}, mult{"jordan", true, ""};
    auto fail = [](Finding& f, const std::string& w) {
        if (f.pass) f.witness = w;
        f.pass = false;
    };
    Report r;
    AlgElement one = AlgElement::identity(phi.source());
    if (!phi.covers(one))
        fail(unit, "1 is outside the domain");
    else if (!(phi(one) == AlgElement::identity(phi.target())))
        fail(unit, "1 -> " + phi(one).to_string());
    for (const auto& [a, b] : samples) {
        std::string w = "a=" + a.to_string() + " b=" + b.to_string();
        if (!phi.covers(a) || !phi.covers(b)) {
            fail(domain, w);
            continue;
        }
        AlgElement fa = phi(a), fb = phi(b);
        if (!(phi(a + b) == fa + fb) || !(phi(a * GaussScalar::i()) == fa * GaussScalar::i())) fail(linear, w);
        for (const AlgElement* x : {&a, &b}) {
            AlgElement xs = x->adjoint();
            if (!phi.covers(xs) || !(phi(xs) == phi(*x).adjoint())) fail(star, "x=" + x->to_string());
        }
        AlgElement ab = jordan_product(a, b);
        if (!phi.covers(ab)) {
            ++r.skipped;
            continue;
        }
        if (!(phi(ab) == jordan_product(fa, fb))) fail(mult, w);
    }
    r.findings = {domain, linear, star, unit, mult};
    return r;
}

JordanDecomposition decompose_jordan(const JordanMap& phi) {
    const FinDimAlgebra& a = phi.source();
    JordanDecomposition out{AlgElement::zero(a), AlgElement::zero(a), {}};
    for (std::size_t s = 0; s < a.summands(); ++s) {
        std::size_t n = a.summand_dims()[s];
        std::vector<AlgElement> units, images;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                units.push_back(AlgElement::matrix_unit(a, s, i, j));
                images.push_back(phi(units.back()));
            }
        bool iso = true, anti = true;
        for (std::size_t x = 0; x < units.size() && (iso || anti); ++x)
            for (std::size_t y = 0; y < units.size() && (iso || anti); ++y) {
                AlgElement fxy = phi(units[x] * units[y]);
                if (iso && !(fxy == images[x] * images[y])) iso = false;
                if (anti && !(fxy == images[y] * images[x])) anti = false;
            }
        if (!iso && !anti)
            throw JordanError("NeitherIsoNorAnti", "summand " + std::to_string(s) + " is neither multiplicative nor "
                                                                                     "anti-multiplicative");
        Multiplicativity m = iso ? Multiplicativity::iso : Multiplicativity::anti;
        out.labels.push_back(m);
        (m == Multiplicativity::iso ? out.p1 : out.p2) += AlgElement::central_unit(a, s);
    }
    return out;
}

// ---------------------------------------------------------------------------

AbelianFragment image_fragment(const JordanMap& g, const AbelianFragment& f) {
    std::vector<NamedPartition> parts;
    for (const auto& np : f.partitions()) {
        std::vector<AlgElement> atoms;
        for (const auto& a : np.partition.atoms()) atoms.push_back(g(a));
        try {
            parts.push_back({np.name, PartitionOfUnity::make(g.target(), std::move(atoms))});
        } catch (const AlgebraError& e) {
            throw JordanError("ImageNotPartition", "image of " + np.name + ": " + e.what());
        }
    }
    try {
        return AbelianFragment(g.target(), std::move(parts));
    } catch (const AlgebraError& e) {
        throw JordanError("ImageNotPartition", e.what());
    }
}

OrderIso induced_subalgebra_map(const JordanMap& g, const AbelianFragment& f, const AbelianFragment& target) {
    auto img = image_fragment(g, f);
    std::vector<std::size_t> map;
    for (const auto& np : img.partitions()) {
        const NamedPartition* hit = target.find(np.partition);
        if (!hit) throw JordanError("ImageNotInFragment", "image of " + np.name + " is not in the target fragment");
        map.push_back(static_cast<std::size_t>(hit - target.partitions().data()));
    }
    auto src = std::make_shared<const Poset>(fragment_poset(f));
    auto dst = std::make_shared<const Poset>(fragment_poset(target));
    return OrderIso::make(src, dst, std::move(map));
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

Matrix parse_block(std::string_view text) {
    std::vector<std::vector<GaussScalar>> rows;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '[') {
            if (++depth == 2) rows.emplace_back();
            else if (depth > 2) throw ParseError("nested brackets in matrix");
        } else if (ch == ']') {
            if (depth == 2) {
                rows.back().push_back(GaussScalar::parse(trim(cur)));
                cur.clear();
            }
            if (--depth < 0) throw ParseError("unbalanced brackets in matrix");
        } else if (ch == ',' && depth == 2) {
            rows.back().push_back(GaussScalar::parse(trim(cur)));
            cur.clear();
        } else if (depth == 2) {
            cur += ch;
        } else if (ch != ',' && ch != ' ') {
            throw ParseError(std::string("unexpected '") + ch + "' in matrix");
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in matrix");
    return Matrix::from_rows(rows);
}

std::vector<std::size_t> parse_dims(std::istringstream& in) {
    std::vector<std::size_t> d;
    long v;
    while (in >> v) {
        if (v <= 0) throw ParseError("dimensions must be positive");
        d.push_back(static_cast<std::size_t>(v));
    }
    return d;
}

}  // namespace

AlgElement parse_element_text(const FinDimAlgebra& a, std::string_view text) {
    std::vector<Matrix> blocks;
    std::size_t at = 0;
    for (;;) {
        std::size_t next = text.find("(+)", at);
        blocks.push_back(parse_block(text.substr(at, next == std::string_view::npos ? next : next - at)));
        if (next == std::string_view::npos) break;
        at = next + 3;
    }
    try {
        return AlgElement(a, std::move(blocks));
    } catch (const AlgebraError& e) {
        throw ParseError(e.what());
    }
}

std::string write_map(const JordanMap& m) {
    std::ostringstream out;
    auto dims = [&](const char* key, const FinDimAlgebra& a) {
        out << key;
        for (std::size_t n : a.summand_dims()) out << ' ' << n;
        out << '\n';
    };
    dims("source", m.source());
    dims("target", m.target());
    for (std::size_t k = 0; k < m.generators().size(); ++k)
        out << "proj g" << k << ' ' << m.generators()[k].to_string() << " -> " << m.images()[k].to_string() << '\n';
    return out.str();
}

JordanMap parse_map(std::string_view text, std::string_view source) {
    std::optional<FinDimAlgebra> src, dst;
    std::vector<AlgElement> gens, imgs;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::string t = trim(line);
        if (t.empty()) continue;
        std::istringstream words(t);
        std::string key;
        words >> key;
        try {
            if (key == "source" || key == "target") {
                auto d = parse_dims(words);
                if (d.empty()) throw ParseError("missing dimensions");
                (key == "source" ? src : dst) = FinDimAlgebra(d);
            } else if (key == "proj") {
                if (!src || !dst) throw ParseError("proj before source and target");
                std::string name;
                words >> name;
                std::string rest;
                std::getline(words, rest);
                auto arrow = rest.find("->");
                if (arrow == std::string::npos) throw ParseError("missing '->'");
                gens.push_back(parse_element_text(*src, rest.substr(0, arrow)));
                imgs.push_back(parse_element_text(*dst, rest.substr(arrow + 2)));
            } else {
                throw ParseError("unknown directive '" + key + "'");
            }
        } catch (const ParseError& e) {
            std::string w = e.what();
            const std::string prefix = "ParseError: ";
            if (w.rfind(prefix, 0) == 0) w = w.substr(prefix.size());
            throw ParseError(source, number, w);
        }
    }
    if (!src || !dst) throw ParseError(source, number, "missing source or target line");
    return JordanMap::make(*src, *dst, std::move(gens), std::move(imgs));
}

}  // namespace abelsub
