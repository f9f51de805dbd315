#include "doctest.h"

#include <random>
#include <set>

#include "abelsub/algebra_io.hpp"
#include "abelsub/matalg.hpp"
#include "matrix_oracles.hpp"
#include "oracles.hpp"

using namespace abelsub;

namespace {

GaussScalar q(long n, long d = 1) { return GaussScalar::ratio(n, d); }

AlgElement diag(const FinDimAlgebra& a, std::initializer_list<long> entries) {
    std::vector<GaussScalar> v;
    for (long x : entries) v.emplace_back(x);
    return AlgElement::diagonal(a, v);
}

AlgElement single(const FinDimAlgebra& a, const oracle::QMat& m) {
    Matrix out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = GaussScalar(m[i][j]);
    return AlgElement(a, {out});
}

oracle::QMat real_part(const Matrix& m) {
    oracle::QMat out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            REQUIRE(m(i, j).is_real());
            out[i][j] = m(i, j).re();
        }
    return out;
}

AlgElement random_element(const FinDimAlgebra& a, std::mt19937& rng, bool complex = true) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::vector<GaussScalar> c;
    for (std::size_t k = 0; k < a.dimension(); ++k)
        c.emplace_back(mpq_class(num(rng), den(rng)), complex ? mpq_class(num(rng), den(rng)) : mpq_class(0));
    return AlgElement::from_coords(a, c);
}

// Diagonal partition of the concatenated space given an atom label per
// coordinate.
PartitionOfUnity diagonal_partition(const FinDimAlgebra& a, const std::vector<int>& label) {
    int k = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<AlgElement> atoms;
    for (int b = 0; b < k; ++b) {
        std::vector<GaussScalar> e;
        for (int l : label) e.emplace_back(l == b ? 1 : 0);
        atoms.push_back(AlgElement::diagonal(a, e));
    }
    return PartitionOfUnity::make(a, atoms);
}

}  // namespace

TEST_CASE("gauss scalar text round trip and arithmetic") {
    for (const char* s : {"0", "3/5", "-4/5 i", "1/2+1/3 i", "1/2-1/3 i", "i", "-7/3+5/11 i"}) {
        GaussScalar x = GaussScalar::parse(s);
        CHECK(GaussScalar::parse(x.to_string()) == x);
    }
    CHECK(GaussScalar::parse("i").to_string() == "1 i");
    CHECK(GaussScalar::parse("2 + 3i") == GaussScalar(2, 3));
    CHECK(GaussScalar::parse("0+1/2 i") == GaussScalar(0, mpq_class(1, 2)));
    CHECK_THROWS_AS(GaussScalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(GaussScalar::parse("abc"), ParseError);
    GaussScalar z(3, 4);
    CHECK(z * z.conj() == GaussScalar(25));
    CHECK(GaussScalar(1) / z == GaussScalar(mpq_class(3, 25), mpq_class(-4, 25)));
    CHECK_THROWS_AS(GaussScalar(1) / GaussScalar(0), std::domain_error);
}

TEST_CASE("span is canonical and solves combinations") {
    std::mt19937 rng(7);
    FinDimAlgebra a({2, 1});
    std::vector<AlgElement> xs;
    for (int i = 0; i < 3; ++i) xs.push_back(random_element(a, rng));
    std::vector<Vec> v;
    for (auto& x : xs) v.push_back(x.coords());
    Span s1 = span_of(a.dimension(), v);
    std::reverse(v.begin(), v.end());
    Span s2 = span_of(a.dimension(), v);
    CHECK(s1.dim() == 3);
    CHECK(s1 == s2);
    AlgElement t = xs[0] * q(2) - xs[2] * GaussScalar(0, 3);
    auto c = s1.combination(t.coords());
    REQUIRE(c);
    AlgElement back = xs[0] * (*c)[0] + xs[1] * (*c)[1] + xs[2] * (*c)[2];
    CHECK(back == t);
    CHECK_FALSE((s1.contains(AlgElement::matrix_unit(a, 1, 0, 0).coords()) &&
                s1.contains(AlgElement::matrix_unit(a, 0, 0, 1).coords()) &&
                s1.contains(AlgElement::matrix_unit(a, 0, 1, 0).coords())));
}

TEST_CASE("inverse of random matrices") {
    std::mt19937 rng(3);
    FinDimAlgebra a({3});
    for (int t = 0; t < 10; ++t) {
        Matrix m = random_element(a, rng).block(0);
        CHECK(m * inverse(m) == Matrix::identity(3));
    }
    CHECK_THROWS_AS(inverse(Matrix(2, 2)), AlgebraError);
}

TEST_CASE("algebra shape checks") {
    CHECK_THROWS_AS(FinDimAlgebra(std::vector<std::size_t>{}), AlgebraError);
    CHECK_THROWS_AS(FinDimAlgebra({2, 0}), AlgebraError);
    FinDimAlgebra a({2}), b({1, 1});
    CHECK(a.dimension() == 4);
    CHECK(b.dimension() == 2);
    CHECK_THROWS_AS(AlgElement::identity(a) + AlgElement::identity(b), AlgebraError);
    try {
        jordan_product(AlgElement::identity(a), AlgElement::identity(b));
        FAIL("expected ParentMismatch");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "ParentMismatch");
    }
}

TEST_CASE("jordan product examples") {
    FinDimAlgebra m2({2});
    AlgElement p = single(m2, oracle::qmat({{1, 0}, {0, 0}}));
    auto qo = oracle::qmat({{9, 12}, {12, 16}}, 25);
    AlgElement qq = single(m2, qo);
    auto po = oracle::qmat({{1, 0}, {0, 0}});
    auto expect = oracle::scale(oracle::add(oracle::mul(po, qo), oracle::mul(qo, po)), mpq_class(1, 2));
    CHECK(expect == oracle::qmat({{9, 6}, {6, 0}}, 25));
    CHECK(real_part(jordan_product(p, qq).block(0)) == expect);

    std::mt19937 rng(11);
    FinDimAlgebra m3({3});
    AlgElement b = random_element(m3, rng);
    CHECK(jordan_product(AlgElement::identity(m3), b) == b);
    AlgElement d1 = diag(m3, {1, 2, 3}), d2 = diag(m3, {4, -1, 2});
    CHECK(jordan_product(d1, d2) == d1 * d2);
}

TEST_CASE("jordan product is commutative but not associative in M3") {
    std::mt19937 rng(5);
    FinDimAlgebra m3({3});
    for (int t = 0; t < 100; ++t) {
        AlgElement a = random_element(m3, rng), b = random_element(m3, rng);
        CHECK(jordan_product(a, b) == jordan_product(b, a));
    }
    bool witness = false;
    std::vector<AlgElement> units;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) units.push_back(AlgElement::matrix_unit(m3, 0, i, j));
    for (const auto& a : units)
        for (const auto& b : units)
            for (const auto& c : units)
                if (!(jordan_product(jordan_product(a, b), c) == jordan_product(a, jordan_product(b, c)))) witness = true;
    CHECK(witness);
}

TEST_CASE("commutant dimensions") {
    FinDimAlgebra m3({3}), m2({2});
    CHECK(commutant(m3, {}).size() == 9);
    auto c = commutant(m2, {diag(m2, {1, 0})});
    CHECK(c.size() == oracle::commutant_dim({{1}, {1}}));
    for (const auto& x : c) CHECK(x == diag(m2, {0, 0}) + x.block(0)(0, 0) * diag(m2, {1, 0}) +
                                          x.block(0)(1, 1) * diag(m2, {0, 1}));
    std::vector<AlgElement> units;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) units.push_back(AlgElement::matrix_unit(m2, 0, i, j));
    auto sc = commutant(m2, units);
    REQUIRE(sc.size() == 1);
    CHECK(sc[0] * (GaussScalar(1) / sc[0].block(0)(0, 0)) == AlgElement::identity(m2));
}

TEST_CASE("commutant of diagonal partitions matches the block formula") {
    for (auto dims : std::vector<std::vector<std::size_t>>{{3}, {3, 1}, {2, 2}, {2, 1, 1}}) {
        FinDimAlgebra a(dims);
        std::size_t n = 0;
        for (auto d : dims) n += d;
        for (const auto& rgs : oracle::set_partitions(static_cast<int>(n))) {
            auto p = diagonal_partition(a, rgs);
            int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
            std::vector<std::vector<std::size_t>> ranks(static_cast<std::size_t>(k), std::vector<std::size_t>(dims.size()));
            std::size_t at = 0;
            for (std::size_t s = 0; s < dims.size(); ++s)
                for (std::size_t i = 0; i < dims[s]; ++i) ranks[static_cast<std::size_t>(rgs[at++])][s]++;
            auto c = commutant(a, p.atoms());
            CHECK(c.size() == oracle::commutant_dim(ranks));
            for (const auto& x : c)
                for (const auto& s : p.atoms()) CHECK(x * s == s * x);
        }
    }
}

TEST_CASE("double commutant examples") {
    FinDimAlgebra m3({3});
    auto p = diagonal_partition(m3, {0, 1, 1});
    auto dc = double_commutant(m3, p.atoms());
    CHECK(dc.size() == 2);
    CHECK(span_of(m3, dc) == span_of(m3, p.atoms()));

    auto sc = double_commutant(m3, {});
    CHECK(sc.size() == 1);
    CHECK(span_of(m3, sc) == span_of(m3, {AlgElement::identity(m3)}));

    FinDimAlgebra a({2, 1});
    std::vector<AlgElement> units;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) units.push_back(AlgElement::matrix_unit(a, 0, i, j));
    auto d5 = double_commutant(a, units);
    CHECK(d5.size() == 5);
    units.push_back(AlgElement::central_unit(a, 1));
    CHECK(span_of(a, d5) == span_of(a, units));
}

TEST_CASE("lambda embedding") {
    FinDimAlgebra m3({3});
    auto p = diagonal_partition(m3, {0, 1, 1});
    CHECK(lambda_embed(p, {q(1), q(1)}) == AlgElement::identity(m3));
    CHECK(lambda_embed(p, {q(2), q(3)}) == diag(m3, {2, 3, 3}));
    CHECK_THROWS_AS(lambda_embed(p, {q(1)}), AlgebraError);

    std::mt19937 rng(9);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    FinDimAlgebra a({3, 1});
    auto part = diagonal_partition(a, {0, 1, 0, 2});
    for (int t = 0; t < 20; ++t) {
        std::vector<GaussScalar> x, y, xy, xc;
        for (int i = 0; i < 3; ++i) {
            x.emplace_back(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
            y.emplace_back(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
            xy.push_back(x.back() * y.back());
            xc.push_back(x.back().conj());
        }
        CHECK(lambda_embed(part, x) * lambda_embed(part, y) == lambda_embed(part, xy));
        CHECK(lambda_embed(part, x).adjoint() == lambda_embed(part, xc));
        if (!(x == y)) CHECK_FALSE(lambda_embed(part, x) == lambda_embed(part, y));
    }
}

TEST_CASE("psi projection") {
    FinDimAlgebra m3({3});
    auto triv = PartitionOfUnity::trivial(m3);
    auto t = psi_project(triv);
    REQUIRE(t.size() == 2);
    CHECK(t[0].is_zero());
    CHECK(t[1] == AlgElement::identity(m3));
    auto d = diagonal_partition(m3, {0, 1, 2});
    auto eight = psi_project(d);
    CHECK(eight.size() == 8);
    CHECK(std::set<AlgElement>(eight.begin(), eight.end()).size() == 8);
    for (const auto& x : eight) CHECK(x.is_projection());
}

TEST_CASE("psi from a basis recovers the partition") {
    FinDimAlgebra a({3, 1});
    auto p = diagonal_partition(a, {0, 1, 0, 2});
    std::vector<AlgElement> basis{lambda_embed(p, {q(1), q(2), q(3)}), lambda_embed(p, {q(0), q(5), GaussScalar(0, 1)})};
    CHECK(atoms_of_abelian(a, basis) == p);
    CHECK(atoms_of_abelian(a, {}) == PartitionOfUnity::trivial(a));
    FinDimAlgebra m2({2});
    try {
        atoms_of_abelian(m2, {AlgElement::matrix_unit(m2, 0, 0, 1), AlgElement::matrix_unit(m2, 0, 0, 0)});
        FAIL("expected NotAbelian");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "NotAbelian");
    }
}

TEST_CASE("double commutant of psi spans the partition subalgebra") {
    for (auto dims : std::vector<std::vector<std::size_t>>{{3}, {2, 2}, {3, 1}}) {
        FinDimAlgebra a(dims);
        std::size_t n = 0;
        for (auto x : dims) n += x;
        for (const auto& rgs : oracle::set_partitions(static_cast<int>(n))) {
            auto p = diagonal_partition(a, rgs);
            CHECK(span_of(a, double_commutant(a, psi_project(p))) == span_of(a, p.atoms()));
        }
    }
}

TEST_CASE("spectral decomposition") {
    FinDimAlgebra m3({3});
    auto s = spectral_decompose(diag(m3, {2, 3, 3}));
    REQUIRE(s.pairs().size() == 2);
    CHECK(s.pairs()[0].first == q(2));
    CHECK(s.pairs()[0].second == diag(m3, {1, 0, 0}));
    CHECK(s.value() == diag(m3, {2, 3, 3}));

    FinDimAlgebra m2({2});
    AlgElement x = single(m2, oracle::qmat({{66, 12}, {12, 59}}, 25));
    auto sx = spectral_decompose(x);
    REQUIRE(sx.pairs().size() == 2);
    CHECK(sx.pairs()[0].first == q(2));
    CHECK(sx.pairs()[1].first == q(3));
    CHECK(sx.value() == x);

    CHECK_THROWS_AS(spectral_decompose(single(m2, oracle::qmat({{0, 1}, {1, 1}}))), AlgebraError);
    CHECK_THROWS_AS(spectral_decompose(AlgElement::matrix_unit(m2, 0, 0, 1)), AlgebraError);
    CHECK_THROWS_AS(SpectralElement::make({{q(1), diag(m2, {1, 0})}, {q(1), diag(m2, {0, 1})}}), AlgebraError);
    CHECK_THROWS_AS(SpectralElement::make({{GaussScalar::i(), diag(m2, {1, 1})}}), AlgebraError);
}

TEST_CASE("projection lattice operations") {
    FinDimAlgebra m3({3});
    CHECK(proj_join(diag(m3, {1, 0, 0}), diag(m3, {0, 1, 0})) == diag(m3, {1, 1, 0}));
    CHECK(proj_meet(diag(m3, {1, 1, 0}), diag(m3, {0, 1, 1})) == diag(m3, {0, 1, 0}));
    FinDimAlgebra m2({2});
    AlgElement r = single(m2, oracle::qmat({{9, 12}, {12, 16}}, 25));
    AlgElement e = diag(m2, {1, 0});
    CHECK(proj_join(r, e) == AlgElement::identity(m2));
    CHECK(proj_meet(r, e).is_zero());
    CHECK(proj_join(r, r) == r);
    CHECK(proj_leq(r, AlgElement::identity(m2)));
    CHECK_FALSE(proj_leq(r, e));
    // complex rank-one projection onto (3, 4i)/5
    Matrix c(2, 2);
    c(0, 0) = q(9, 25);
    c(0, 1) = GaussScalar(0, mpq_class(-12, 25));
    c(1, 0) = GaussScalar(0, mpq_class(12, 25));
    c(1, 1) = q(16, 25);
    AlgElement pc(m2, {c});
    CHECK(pc.is_projection());
    CHECK(proj_join(pc, proj_complement(pc)) == AlgElement::identity(m2));
    CHECK(proj_join(pc, r) == AlgElement::identity(m2));
}

TEST_CASE("partitions reject bad atoms") {
    FinDimAlgebra m2({2});
    auto code = [&](std::vector<AlgElement> atoms) {
        try {
            PartitionOfUnity::make(m2, atoms);
        } catch (const AlgebraError& e) {
            return e.code();
        }
        return std::string("ok");
    };
    CHECK(code({diag(m2, {1, 0})}) == "NotPartition");
    CHECK(code({diag(m2, {1, 0}), diag(m2, {1, 1})}) == "NotPartition");
    CHECK(code({diag(m2, {2, 0}), diag(m2, {-1, 1})}) == "NotPartition");
    CHECK(code({diag(m2, {1, 1}), diag(m2, {0, 0})}) == "NotPartition");
    CHECK(code({diag(m2, {0, 1}), diag(m2, {1, 0})}) == "ok");
    CHECK(PartitionOfUnity::make(m2, {diag(m2, {0, 1}), diag(m2, {1, 0})}) ==
          PartitionOfUnity::make(m2, {diag(m2, {1, 0}), diag(m2, {0, 1})}));
}

TEST_CASE("fragment posets") {
    FinDimAlgebra m3({3});
    std::vector<NamedPartition> parts;
    auto all = oracle::set_partitions(3);
    for (std::size_t i = 0; i < all.size(); ++i)
        parts.push_back({"p" + std::to_string(i), diagonal_partition(m3, all[i])});
    AbelianFragment f(m3, parts, true);
    CHECK(f.partitions().size() == 5);
    Poset fp = fragment_poset(f);
    CHECK_FALSE(oracle::brute_force_isos(fp, oracle::partition_lattice(3)).empty());

    AbelianFragment triv(m3, {});
    CHECK(fragment_poset(triv).size() == 1);
    AbelianFragment two(m3, {{"d", diagonal_partition(m3, {0, 1, 1})}});
    Poset tp = fragment_poset(two);
    CHECK(tp.size() == 2);
    CHECK_FALSE(oracle::brute_force_isos(tp, *oracle::chain(2)).empty());

    CHECK_THROWS_AS(AbelianFragment(m3, {{"d", diagonal_partition(m3, {0, 1, 2})}}, true), AlgebraError);
    CHECK_THROWS_AS(AbelianFragment(m3, {{"a", diagonal_partition(m3, {0, 1, 1})}, {"b", diagonal_partition(m3, {1, 0, 0})}}),
                    AlgebraError);
}

TEST_CASE("coarsening closure") {
    FinDimAlgebra m3({3});
    AbelianFragment f(m3, {{"d", diagonal_partition(m3, {0, 1, 2})}});
    auto c = coarsening_closure(f);
    CHECK(c.partitions().size() == oracle::bell(3));
    CHECK(c.coarsening_closed());
    CHECK(c.find("d:01|2"));
    FinDimAlgebra a({3, 1});
    AbelianFragment g(a, {{"d", diagonal_partition(a, {0, 1, 2, 3})}});
    CHECK(coarsening_closure(g).partitions().size() == oracle::bell(4));
}

TEST_CASE("fragment order equals inclusion of projection sets") {
    for (auto dims : std::vector<std::vector<std::size_t>>{{3}, {3, 1}}) {
        FinDimAlgebra a(dims);
        std::size_t n = 0;
        for (auto x : dims) n += x;
        std::vector<int> fine(n);
        std::iota(fine.begin(), fine.end(), 0);
        auto f = coarsening_closure(AbelianFragment(a, {{"d", diagonal_partition(a, fine)}}));
        Poset fp = fragment_poset(f);
        for (std::size_t i = 0; i < f.partitions().size(); ++i)
            for (std::size_t j = 0; j < f.partitions().size(); ++j) {
                auto pi = psi_project(f.partitions()[i].partition);
                auto pj = psi_project(f.partitions()[j].partition);
                bool incl = std::includes(pj.begin(), pj.end(), pi.begin(), pi.end());
                CHECK(fp.leq(i, j) == incl);
            }
    }
}

TEST_CASE("type I2 detection") {
    CHECK(is_type_I2_free(FinDimAlgebra({3})));
    CHECK_FALSE(is_type_I2_free(FinDimAlgebra({2})));
    CHECK_FALSE(is_type_I2_free(FinDimAlgebra({3, 2, 1})));
}

TEST_CASE("algebra file round trip") {
    FinDimAlgebra a({2, 1});
    Matrix c(2, 2);
    c(0, 0) = q(9, 25);
    c(0, 1) = GaussScalar(0, mpq_class(-12, 25));
    c(1, 0) = GaussScalar(0, mpq_class(12, 25));
    c(1, 1) = q(16, 25);
    Matrix one(1, 1);
    one(0, 0) = 1;
    AlgElement p(a, {c, Matrix(1, 1)});
    AlgElement pc = AlgElement::identity(a) - p - AlgElement(a, {Matrix(2, 2), one});
    AlgebraFile f;
    f.algebra = a;
    f.partitions.emplace_back("rot", std::vector<AlgElement>{p, pc, AlgElement(a, {Matrix(2, 2), one})});
    std::string text = write_algebra(f);
    AlgebraFile g = parse_algebra(text);
    CHECK(g.algebra == a);
    REQUIRE(g.partitions.size() == 1);
    CHECK(g.partitions[0].second == f.partitions[0].second);
    CHECK(write_algebra(g) == text);
    CHECK(g.fragment().partitions().size() == 2);

    auto err_line = [](const std::string& t) -> std::size_t {
        try {
            parse_algebra(t, "x.yaml");
        } catch (const ParseError& e) {
            std::string w = e.what();
            auto at = w.find("x.yaml:");
            return at == std::string::npos ? 0 : std::stoul(w.substr(at + 7));
        }
        return 0;
    };
    CHECK(err_line("summands: [2]\npartitions:\n  p:\n    - [[[\"1\",\"0\"],[\"0\",\"1/0\"]]]\n") == 4);
    CHECK(err_line("summands: [2]\nbogus: 1\n") == 2);
    CHECK(err_line("summands: [0]\n") == 1);
    CHECK(err_line("summands: [2\n") > 0);
    CHECK_THROWS_AS(parse_algebra("summands: [2]\npartitions:\n  p:\n    - [[[\"1\",\"0\"],[\"0\",\"0\"]]]\n").fragment(),
                    AlgebraError);
}
