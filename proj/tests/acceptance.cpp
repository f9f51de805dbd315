// One PASS/FAIL line per acceptance criterion, with wall-clock limits.
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "abelsub/matalg.hpp"
#include "abelsub/pipeline.hpp"
#include "abelsub/reconstruct.hpp"
#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace abelsub;
using namespace fixture;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

OmlPtr share(Oml l) { return std::make_shared<const Oml>(std::move(l)); }

std::vector<int> identity_labels(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<AlgElement> span_basis(const JordanMap& m) {
    std::vector<AlgElement> out;
    for (const auto& row : m.domain().basis()) out.push_back(AlgElement::from_coords(m.source(), row));
    return out;
}

Outcome fragment_order_correspondence() {
    Outcome o;
    for (auto dims : std::vector<std::vector<std::size_t>>{{3}, {3, 1}}) {
        FinDimAlgebra a(dims);
        auto f = diagonal_only(a);
        Poset fp = fragment_poset(f);
        const auto& parts = f.partitions();
        std::vector<std::vector<AlgElement>> psis;
        for (const auto& p : parts) psis.push_back(psi_project(p.partition));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j) {
                bool incl = std::includes(psis[j].begin(), psis[j].end(), psis[i].begin(), psis[i].end());
                if (fp.leq(i, j) != incl) o.fail(parts[i].name + " vs " + parts[j].name);
                if (i != j && psis[i] == psis[j]) o.fail("psi not injective at " + parts[i].name);
            }
        if (parts.size() != oracle::bell(static_cast<int>(total_dim(a)))) o.fail("fragment size");
        o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(parts.size()) + " partitions";
    }
    return o;
}

Outcome double_commutant_spans() {
    Outcome o;
    std::size_t count = 0;
    for (auto dims : std::vector<std::vector<std::size_t>>{{3}, {2, 2}, {3, 1}}) {
        FinDimAlgebra a(dims);
        for (const auto& rgs : oracle::set_partitions(static_cast<int>(total_dim(a)))) {
            auto p = diagonal_partition(a, rgs);
            if (!(span_of(a, double_commutant(a, psi_project(p))) == span_of(a, p.atoms())))
                o.fail("mismatch for " + p.atoms().front().to_string());
            ++count;
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " subalgebras";
    return o;
}

std::vector<std::vector<std::size_t>> oracle_solutions(const BsubIso& j,
                                                       const std::vector<std::vector<std::size_t>>& candidates) {
    std::vector<std::vector<std::size_t>> left, right, out;
    for (std::size_t d = 0; d < j.left().size(); ++d) {
        left.push_back(j.left().subalgebras[d].members.indices());
        right.push_back(j.right().subalgebras[j(d)].members.indices());
    }
    for (const auto& k : candidates)
        if (oracle::maps_subalgebras(k, left, right)) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> solution_maps(const BsubIso& j) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& k : reconstruct_oml_isos(j)) out.push_back(k.map());
    return out;
}

// permutation oracle up to 8 elements, exhaustive backtracking above
std::vector<std::vector<std::size_t>> oracle_isos(const Oml& l) {
    return l.size() <= 8 ? oracle::brute_force_oml_isos(l, l) : oracle::backtrack_oml_isos(l, l);
}

Outcome unique_reconstruction() {
    Outcome o;
    std::vector<std::pair<std::string, std::size_t>> cases{
        {"horizontal_sum_b8", 2}, {"horizontal_sum_b8", 3}, {"boolean", 3}, {"boolean", 4}};
    for (const auto& [name, n] : cases) {
        auto l = share(standard(name, n));
        std::string tag = name + "(" + std::to_string(n) + ")";
        if (has_4element_block(*l)) o.fail(tag + " has a 4-element block");
        auto j = BsubIso::identity(boolean_subalgebras(l));
        auto sols = solution_maps(j);
        if (sols.size() != 1) o.fail(tag + ": " + std::to_string(sols.size()) + " solutions");
        if (l->size() <= 14 && sols != oracle_solutions(j, oracle_isos(*l))) o.fail(tag + ": oracle disagrees");
        o.detail += (o.detail.empty() ? "" : ", ") + tag + " " + std::to_string(l->size()) + " elements -> " +
                    std::to_string(sols.size());
    }
    return o;
}

Outcome four_element_counterexample() {
    Outcome o;
    for (auto [n, want] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {3, 8}}) {
        auto l = share(standard("mo", n));
        auto j = BsubIso::identity(boolean_subalgebras(l));
        auto sols = solution_maps(j);
        if (sols.size() != want) o.fail("mo(" + std::to_string(n) + "): " + std::to_string(sols.size()));
        if (sols != oracle_solutions(j, oracle_isos(*l))) o.fail("mo(" + std::to_string(n) + "): oracle disagrees");
        o.detail += (o.detail.empty() ? "" : ", ") + std::string("mo(") + std::to_string(n) + ") -> " +
                    std::to_string(sols.size());
    }
    return o;
}

Outcome sachs_and_bell() {
    Outcome o;
    std::vector<OmlPtr> algebras;
    std::vector<BsubPoset> subs;
    for (std::size_t n = 1; n <= 4; ++n) {
        algebras.push_back(share(standard("boolean", n)));
        subs.push_back(boolean_subalgebras(algebras.back()));
        std::size_t want = oracle::bell(static_cast<int>(n));
        if (subs.back().size() != want) o.fail("boolean(" + std::to_string(n) + ") count");
        o.detail += (o.detail.empty() ? "" : " ") + std::to_string(subs.back().size());
    }
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b) {
            bool bsub_iso = !enumerate_order_isos(subs[a].poset, subs[b].poset).empty();
            bool alg_iso = !enumerate_order_isos(algebras[a]->order_ptr(), algebras[b]->order_ptr()).empty();
            if (bsub_iso != alg_iso) o.fail("iso mismatch " + std::to_string(a) + "," + std::to_string(b));
        }
    o.detail = "counts " + o.detail;
    return o;
}

Outcome round_trips() {
    Outcome o;
    double slowest = 0;
    std::size_t instances = 0;
    for (auto dims : std::vector<std::vector<std::size_t>>{{3}, {3, 1}}) {
        FinDimAlgebra a(dims);
        auto frag = diagonal_plus_rotated(a);
        for (const auto& nm : round_trip_maps(a)) {
            std::string tag = nm.name + " on " + "dims(" + std::to_string(dims[0]) + (dims.size() > 1 ? "," + std::to_string(dims[1]) : std::string()) + ")";
            auto t0 = std::chrono::steady_clock::now();
            auto t = TheoremInstance::forward(nm.g, frag);
            auto F = run_pipeline(t);
            if (!(F.domain() == span_of(a, frag.projections()))) o.fail(tag + ": domain is not the fragment span");
            if (!F.agrees_on(nm.g, span_basis(F))) o.fail(tag + ": F differs from g");
            auto c = verify_claims(t, F);
            auto u = verify_uniqueness(t, F);
            if (!c.ok()) o.fail(tag + ": " + c.to_text());
            if (!u.ok()) o.fail(tag + ": " + u.to_text());
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (secs >= 60) o.fail(tag + " took " + std::to_string(secs) + " s");
            slowest = std::max(slowest, secs);
            ++instances;
        }
    }
    if (o.ok) {
        std::ostringstream s;
        s << instances << " instances, F = g on the fragment span, claims and uniqueness PASS, slowest " << slowest
          << " s";
        o.detail = s.str();
    }
    return o;
}

Outcome decomposition() {
    Outcome o;
    FinDimAlgebra a({3, 3});
    auto mixed = JordanMap::full(a, a, [&](const AlgElement& x) {
        return AlgElement(a, {x.block(0), x.block(1).transpose()});
    });
    auto dm = decompose_jordan(mixed);
    if (!(dm.p1 == AlgElement::central_unit(a, 0))) o.fail("P1 = " + dm.p1.to_string());
    if (!(dm.p2 == AlgElement::central_unit(a, 1))) o.fail("P2 = " + dm.p2.to_string());
    auto dt = decompose_jordan(JordanMap::transpose(a));
    if (!dt.p1.is_zero()) o.fail("transpose P1 = " + dt.p1.to_string());
    if (!(dt.p2 == AlgElement::identity(a))) o.fail("transpose P2 = " + dt.p2.to_string());
    if (o.ok) o.detail = "P1 = (1,0), P2 = (0,1); transpose P1 = 0";
    return o;
}

Outcome type_i2_failure() {
    Outcome o;
    auto r = run_cli("--format machine pipeline dims2.inst");
    if (r.code != 1) o.fail("exit " + std::to_string(r.code));
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    if (j.is_discarded()) {
        o.fail("output is not JSON");
        return o;
    }
    if (r.out.find("AmbiguousReconstruction") == std::string::npos) o.fail("no AmbiguousReconstruction");
    if (!j.contains("candidates") || j["candidates"] != 4) o.fail("candidates " + j.value("candidates", nlohmann::json()).dump());
    if (o.ok) o.detail = "exit 1, AmbiguousReconstruction, 4 candidates";
    return o;
}

AlgElement random_element(const FinDimAlgebra& a, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<GaussScalar> c;
    for (std::size_t k = 0; k < a.dimension(); ++k)
        c.emplace_back(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    return AlgElement::from_coords(a, c);
}

Outcome jordan_sanity() {
    Outcome o;
    FinDimAlgebra m3({3});
    std::mt19937 rng(2024);
    for (int t = 0; t < 100; ++t) {
        auto a = random_element(m3, rng), b = random_element(m3, rng);
        if (!(jordan_product(a, b) == jordan_product(b, a))) o.fail("not commutative at pair " + std::to_string(t));
    }
    bool witness = false;
    for (int t = 0; t < 100 && !witness; ++t) {
        auto a = random_element(m3, rng), b = random_element(m3, rng), c = random_element(m3, rng);
        if (!(jordan_product(jordan_product(a, b), c) == jordan_product(a, jordan_product(b, c)))) {
            witness = true;
            o.detail = "100 pairs commute; associativity fails at triple " + std::to_string(t);
        }
    }
    if (!witness) o.fail("no associativity witness");
    return o;
}

bool report(const std::string& name, double limit, const std::function<Outcome()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const Error& e) {
        o.fail(e.code() + ": " + e.what());
    } catch (const std::exception& e) {
        o.fail(e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit) {
        std::ostringstream s;
        s << "took " << secs << " s, limit " << limit << " s";
        o.fail(s.str());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << " s): " << o.detail << std::endl;
    return o.ok;
}

}  // namespace

int main() {
    bool all = true;
    all &= report("1 fragment order matches inclusion of projection algebras", 1, fragment_order_correspondence);
    all &= report("2 double commutant of projections spans the subalgebra", 5, double_commutant_spans);
    all &= report("3 unique reconstruction without 4-element blocks", 30, unique_reconstruction);
    all &= report("4 4-element-block counterexample counts", 10, four_element_counterexample);
    all &= report("5 Boolean subalgebra posets and Bell counts", 10, sachs_and_bell);

    all &= report("6 round trip through the pipeline", 8 * 60, round_trips);
    all &= report("7 iso/anti decomposition", 1, decomposition);
    all &= report("8 2x2 summand is ambiguous", 5, type_i2_failure);
    all &= report("9 Jordan product commutes but does not associate", 5, jordan_sanity);
    return all ? 0 : 1;
}
