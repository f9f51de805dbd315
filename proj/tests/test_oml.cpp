#include "doctest.h"

#include <set>

#include "abelsub/oml.hpp"
#include "abelsub/text_formats.hpp"
#include "oracles.hpp"

using namespace abelsub;

namespace {

OmlPtr share(Oml l) { return std::make_shared<const Oml>(std::move(l)); }

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

bool distributive(const Oml& l) { return is_boolean_subalgebra(l, l.all()); }

}  // namespace

TEST_CASE("verify_oml accepts the small standard lattices") {
    auto two = Oml::verify({"0", "1"}, {{"0", "1"}}, {{"0", "1"}});
    CHECK(two.size() == 2);
    CHECK(distributive(two));

    auto mo2 = standard("mo", 2);
    CHECK(mo2.size() == 6);
    CHECK_FALSE(distributive(mo2));
}

TEST_CASE("the pentagon admits no orthocomplementation") {
    auto n5 = std::make_shared<const Poset>(
        Poset::verify({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
    std::size_t rejected = 0, total = 0;
    std::vector<std::size_t> ortho(5, 0);
    for (std::size_t code = 0; code < 3125; ++code) {
        std::size_t c = code;
        for (auto& o : ortho) {
            o = c % 5;
            c /= 5;
        }
        ++total;
        try {
            Oml::verify(n5, ortho);
        } catch (const OmlError&) {
            ++rejected;
        }
    }
    CHECK(rejected == total);

    // the one involution that is order reversing on the chain fails on c
    std::vector<std::size_t> best{4, 2, 1, 3, 0};
    CHECK(error_code([&] { Oml::verify(n5, best); }) == "NotComplement");
}

TEST_CASE("verify_oml witnesses") {
    // 0 < a < 1 with a' = a is involutive but not a complement
    CHECK(error_code([] {
              Oml::verify({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, {{"0", "1"}, {"a", "a"}});
          }) == "NotComplement");
    CHECK(error_code([] { Oml::verify({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}, {{"0", "a"}, {"b", "b"}}); }) ==
          "NotLattice");
    CHECK(error_code([] { Oml::verify({"0", "1"}, {{"0", "1"}}, {{"0", "0"}, {"1", "1"}}); }) ==
          "OrthoNotOrderReversing");
    // Benzene-ring style hexagon: orthocomplemented lattice, not orthomodular.
    CHECK(error_code([] {
              Oml::verify({"0", "a", "b", "a'", "b'", "1"},
                          {{"0", "a"}, {"a", "b'"}, {"b'", "1"}, {"0", "b"}, {"b", "a'"}, {"a'", "1"}},
                          {{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
          }) == "OrthomodularityFails");
}

TEST_CASE("commutes") {
    auto b8 = standard("boolean", 3);
    for (std::size_t a = 0; a < b8.size(); ++a)
        for (std::size_t b = 0; b < b8.size(); ++b) CHECK(commutes(b8, a, b));
    auto mo2 = standard("mo", 2);
    CHECK_FALSE(commutes(mo2, mo2.require("a"), mo2.require("b")));
    CHECK(commutes(mo2, mo2.require("a"), mo2.require("a'")));
}

TEST_CASE("blocks") {
    auto b8 = standard("boolean", 3);
    auto bb = blocks(b8);
    REQUIRE(bb.size() == 1);
    CHECK(bb[0].size() == 8);

    auto mo2 = standard("mo", 2);
    auto bm = blocks(mo2);
    REQUIRE(bm.size() == 2);
    CHECK(bm[0].size() == 4);
    CHECK(bm[1].size() == 4);
    std::set<std::set<std::string>> names;
    for (auto& b : bm) {
        std::set<std::string> s;
        for (auto x : b.members.indices()) s.insert(mo2.name(x));
        names.insert(s);
    }
    CHECK(names == std::set<std::set<std::string>>{{"0", "a", "a'", "1"}, {"0", "b", "b'", "1"}});

    auto hs = standard("horizontal_sum_b8", 2);
    auto bh = blocks(hs);
    REQUIRE(bh.size() == 2);
    CHECK(bh[0].size() == 8);
    CHECK(bh[1].size() == 8);
}

TEST_CASE("BSub counts") {
    auto b8 = share(standard("boolean", 3));
    auto bsub = boolean_subalgebras(b8);
    CHECK(bsub.size() == 5);
    auto pi3 = std::make_shared<const Poset>(oracle::partition_lattice(3));
    CHECK_FALSE(enumerate_order_isos(bsub.poset, pi3).empty());

    for (std::size_t n = 1; n <= 4; ++n) CHECK(boolean_subalgebras(share(standard("mo", n))).size() == 1 + n);
    CHECK(boolean_subalgebras(share(standard("boolean", 4))).size() == 15);
    for (int n = 1; n <= 5; ++n)
        CHECK(boolean_subalgebras(share(standard("boolean", static_cast<std::size_t>(n)))).size() ==
              oracle::bell(n));
}

TEST_CASE("structural invariants over the standard family") {
    std::vector<OmlPtr> family;
    for (std::size_t n = 1; n <= 4; ++n) family.push_back(share(standard("boolean", n)));
    for (std::size_t n = 1; n <= 4; ++n) family.push_back(share(standard("mo", n)));
    for (std::size_t n = 1; n <= 3; ++n) family.push_back(share(standard("horizontal_sum_b8", n)));
    family.push_back(share(from_greechie({{"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"c", "d", "e"}}})));

    for (const auto& l : family) {
        auto bsub = boolean_subalgebras(l);
        for (const auto& d : bsub.subalgebras) {
            CHECK(is_boolean_subalgebra(*l, d.members));
            CHECK(d.size() == (std::size_t{1} << d.atoms.size()));
        }
        auto bl = blocks(*l);
        std::set<Bits> maximal;
        for (std::size_t i : bsub.poset->maximal_elements()) maximal.insert(bsub.subalgebras[i].members);
        std::set<Bits> found;
        Bits cover(l->size());
        for (const auto& b : bl) {
            found.insert(b.members);
            cover |= b.members;
        }
        CHECK(found == maximal);
        CHECK(cover == l->all());
    }
}

TEST_CASE("from_greechie") {
    auto b8 = from_greechie({{"a", "b", "c"}, {{"a", "b", "c"}}});
    CHECK(b8.size() == 8);
    CHECK(blocks(b8).size() == 1);

    auto mo2 = from_greechie({{"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}});
    CHECK(mo2.size() == 6);
    auto mo2_order = std::make_shared<const Poset>(standard("mo", 2).order());
    // the four middle elements form an antichain: 4! order isomorphisms
    CHECK(enumerate_order_isos(mo2.order_ptr(), mo2_order).size() == 24);

    // two 8-element blocks glued along one atom: 8 + 8 - |{0, c, c', 1}|
    auto two = from_greechie({{"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"c", "d", "e"}}});
    CHECK(two.size() == 12);
    CHECK(blocks(two).size() == 2);

    // loops of order 3 and 4 are not OMLs; order 5 is
    GreechieDiagram loop3{{"a", "b", "c", "d", "e", "f"}, {{"a", "b", "c"}, {"c", "d", "e"}, {"e", "f", "a"}}};
    CHECK(error_code([&] { from_greechie(loop3); }) == "PastingNotOml");
    GreechieDiagram loop4{{"a", "b", "c", "d", "e", "f", "g", "h"},
                          {{"a", "b", "c"}, {"c", "d", "e"}, {"e", "f", "g"}, {"g", "h", "a"}}};
    CHECK(error_code([&] { from_greechie(loop4); }) == "PastingNotOml");
    GreechieDiagram loop5{{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"},
                          {{"a", "b", "c"}, {"c", "d", "e"}, {"e", "f", "g"}, {"g", "h", "i"}, {"i", "j", "a"}}};
    auto pentagon = from_greechie(loop5);
    CHECK(pentagon.size() == 22);  // 0, 1, ten atoms, ten coatoms
    CHECK(blocks(pentagon).size() == 5);

    CHECK(error_code([] { from_greechie({{"a", "b"}, {{"a"}, {"a", "b"}}}); }) == "InvalidDiagram");
    CHECK(error_code([] { from_greechie({{"a", "b", "c"}, {{"a", "b", "c"}, {"a", "b"}}}); }) == "InvalidDiagram");
    CHECK(error_code([] { from_greechie({{"a", "b", "c"}, {{"a", "b"}}}); }) == "InvalidDiagram");
}

TEST_CASE("standard") {
    CHECK(standard("boolean", 1).size() == 2);
    CHECK(standard("mo", 2).size() == 6);
    CHECK(standard("horizontal_sum_b8", 2).size() == 14);
    CHECK(error_code([] { standard("pentagon", 1); }) == "UnknownName");
}

TEST_CASE("Boolean algebras are determined by their subalgebra posets") {
    std::vector<OmlPtr> algebras;
    for (std::size_t n = 1; n <= 4; ++n) algebras.push_back(share(standard("boolean", n)));
    for (std::size_t i = 0; i < algebras.size(); ++i)
        for (std::size_t j = 0; j < algebras.size(); ++j) {
            auto bi = boolean_subalgebras(algebras[i]);
            auto bj = boolean_subalgebras(algebras[j]);
            bool bsub_iso = !enumerate_order_isos(bi.poset, bj.poset).empty();
            bool algebra_iso = !enumerate_order_isos(algebras[i]->order_ptr(), algebras[j]->order_ptr()).empty();
            CHECK(bsub_iso == algebra_iso);
            CHECK(algebra_iso == (i == j));
        }
}

TEST_CASE("OML and Greechie text formats round-trip") {
    auto mo3 = standard("mo", 3);
    auto again = parse_oml(write_oml(mo3));
    CHECK(again.order() == mo3.order());
    CHECK(again.ortho_map() == mo3.ortho_map());

    GreechieDiagram d{{"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}};
    auto text = write_greechie(d);
    auto back = parse_greechie(text);
    CHECK(back.atoms == d.atoms);
    CHECK(back.blocks == d.blocks);
    CHECK(detect_kind(text) == TextKind::greechie);
    CHECK(detect_kind(write_oml(mo3)) == TextKind::oml);
    CHECK(detect_kind(write_poset(mo3.order())) == TextKind::poset);

    auto b = boolean_subalgebras(std::make_shared<const Oml>(mo3));
    auto dot = write_bsub_dot(b);
    CHECK(dot == write_bsub_dot(boolean_subalgebras(std::make_shared<const Oml>(again))));
    CHECK(dot.find("D0 -> D1;") != std::string::npos);
}
