#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <propcat/envelope.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace propcat;

TEST_CASE("identities wire every color straight through") {
    Envelope env(terminal_properad(2));
    EnvMorphism id = env.identity({1, 2});
    CHECK(id.src == Word{1, 2});
    CHECK(id.tgt == Word{1, 2});
    CHECK(id.shape == identity_cospan(2));
    REQUIRE(id.vertex_ops.size() == 2);
    CHECK(id.vertex_ops[0] == env.properad().identity(1));
    CHECK(id.vertex_ops[1] == env.properad().identity(2));
    CHECK(env.valid(id));
}

TEST_CASE("a corolla is the one-vertex morphism of its operation") {
    Envelope env(terminal_properad(2));
    Op p{{1, 2}, {2}, 0};
    EnvMorphism c = env.corolla(p);
    CHECK(c.src == Word{1, 2});
    CHECK(c.tgt == Word{2});
    CHECK(c.shape.middle() == 1);
    CHECK(c.vertex_ops == std::vector<Op>{p});
    CHECK(env.valid(c));
    CHECK(env.project(c) ==
          normalize(FinMap::constant(2, 1, 1), FinMap::constant(1, 1, 1)));
}

TEST_CASE("validity checks wiring profiles and payload membership") {
    Envelope env(weighted_properad(cyclic_table(2)));
    EnvMorphism ok = env.corolla(Op{{1, 1}, {1}, 1});
    CHECK(env.valid(ok));
    EnvMorphism bad_tag = ok;
    bad_tag.vertex_ops[0].tag = 9;
    CHECK_FALSE(env.valid(bad_tag));
    EnvMorphism bad_profile = ok;
    bad_profile.vertex_ops[0].inputs = {1};
    CHECK_FALSE(env.valid(bad_profile));
}

TEST_CASE("composition is associative and unital on bounded hom sets") {
    Envelope env(terminal_properad(1));
    Word w1{1};
    Word w2{1, 1};
    std::vector<EnvMorphism> f12 = env.hom_enum(w1, w2, 2);
    std::vector<EnvMorphism> f21 = env.hom_enum(w2, w1, 2);
    std::vector<EnvMorphism> f11 = env.hom_enum(w1, w1, 2);
    for (const EnvMorphism& f : f12) {
        REQUIRE(env.compose(env.identity(w1), f) == f);
        REQUIRE(env.compose(f, env.identity(w2)) == f);
        for (const EnvMorphism& g : f21) {
            EnvMorphism fg = env.compose(f, g);
            for (const EnvMorphism& h : f11) {
                REQUIRE(env.compose(fg, h) == env.compose(f, env.compose(g, h)));
            }
        }
    }
}

TEST_CASE("projection is functorial for compose and tensor") {
    Envelope env(terminal_properad(1));
    std::vector<EnvMorphism> fs = env.hom_enum({1}, {1, 1}, 2);
    std::vector<EnvMorphism> gs = env.hom_enum({1, 1}, {1}, 2);
    for (const EnvMorphism& f : fs) {
        for (const EnvMorphism& g : gs) {
            REQUIRE(env.project(env.compose(f, g)) ==
                    compose(env.project(f), env.project(g)));
            REQUIRE(env.project(env.tensor(f, g)) ==
                    tensor(env.project(f), env.project(g)));
        }
    }
}

TEST_CASE("the terminal envelope is the category of cospans") {
    Envelope env(terminal_properad(1));
    for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t m = 0; m <= 2; ++m) {
            std::vector<EnvMorphism> homs = env.hom_enum(Word(n, 1), Word(m, 1), 2);
            std::vector<Cospan> shapes = all_cospans(n, m, 2);
            REQUIRE(homs.size() == shapes.size());
            std::set<Cospan> seen;
            for (const EnvMorphism& f : homs) {
                REQUIRE(seen.insert(env.project(f)).second);
            }
        }
    }
    CHECK(env.hom_enum({}, {}, 2).size() == 3);
}

TEST_CASE("permutation morphisms are the discrete hom sets") {
    Envelope env(discrete_properad(3));
    CHECK(env.hom_enum({1, 1}, {1, 1}, 3).size() == 2);
    CHECK(env.hom_enum({1, 2}, {2, 1}, 3).size() == 1);
    CHECK(env.hom_enum({1, 1, 1}, {1, 1, 1}, 4).size() == 6);
    CHECK(env.hom_enum({1}, {2}, 3).empty());
}

TEST_CASE("symmetries square to the identity and generate twists") {
    Envelope env(terminal_properad(2));
    Word a{1, 2};
    Word b{2};
    EnvMorphism s = env.symmetry(a, b);
    CHECK(s.src == Word{1, 2, 2});
    CHECK(s.tgt == Word{2, 1, 2});
    CHECK(env.compose(s, env.symmetry(b, a)) == env.identity({1, 2, 2}));
    CHECK(env.symmetry(a, b) == env.twisted_tensor(env.identity(a), env.identity(b)));
}

TEST_CASE("the twisted tensor is a tensor followed by a symmetry") {
    Envelope env(weighted_properad(cyclic_table(2)));
    std::vector<EnvMorphism> fs = env.hom_enum({1}, {1}, 2);
    std::vector<EnvMorphism> gs = env.hom_enum({1, 1}, {1}, 2);
    for (const EnvMorphism& f : fs) {
        for (const EnvMorphism& g : gs) {
            EnvMorphism tw = env.twisted_tensor(f, g);
            REQUIRE(tw == env.compose(env.tensor(f, g), env.symmetry(f.tgt, g.tgt)));
            REQUIRE(tw.src == Word{1, 1, 1});
            REQUIRE(tw.tgt == Word{1, 1});
            REQUIRE(env.project(tw) ==
                    compose(tensor(env.project(f), env.project(g)),
                            symmetry(f.tgt.size(), g.tgt.size())));
        }
    }
}

TEST_CASE("symmetry is natural in both arguments") {
    Envelope env(terminal_properad(2));
    std::vector<EnvMorphism> fs = env.hom_enum({1}, {2}, 2);
    std::vector<EnvMorphism> gs = env.hom_enum({2}, {1, 1}, 2);
    for (const EnvMorphism& f : fs) {
        for (const EnvMorphism& g : gs) {
            REQUIRE(env.compose(env.tensor(f, g), env.symmetry(f.tgt, g.tgt)) ==
                    env.compose(env.symmetry(f.src, g.src), env.tensor(g, f)));
        }
    }
}

TEST_CASE("raw assembly renormalizes the middle and sorts closed payloads") {
    Envelope env(weighted_properad(cyclic_table(3)));
    // The same wiring under two middle numberings.
    EnvMorphism a = env.from_raw({1}, {1}, FinMap(1, 2, {1}), FinMap(1, 2, {1}),
                                 {Op{{1}, {1}, 2}, Op{{}, {}, 1}});
    EnvMorphism b = env.from_raw({1}, {1}, FinMap(1, 2, {2}), FinMap(1, 2, {2}),
                                 {Op{{}, {}, 1}, Op{{1}, {1}, 2}});
    CHECK(a == b);
    CHECK(a.shape.touched == 1);
    CHECK(a.shape.closed == 1);

    // Closed vertices carry no order: both insertion orders agree.
    EnvMorphism c1 = env.from_raw({}, {}, FinMap(0, 2, {}), FinMap(0, 2, {}),
                                  {Op{{}, {}, 2}, Op{{}, {}, 1}});
    EnvMorphism c2 = env.from_raw({}, {}, FinMap(0, 2, {}), FinMap(0, 2, {}),
                                  {Op{{}, {}, 1}, Op{{}, {}, 2}});
    CHECK(c1 == c2);
    CHECK(c1.vertex_ops[0].tag == 1);
    CHECK(c1.vertex_ops[1].tag == 2);
}

TEST_CASE("tensoring closed morphisms merges their payload multisets") {
    Envelope env(weighted_properad(cyclic_table(3)));
    EnvMorphism one = env.from_raw({}, {}, FinMap(0, 1, {}), FinMap(0, 1, {}),
                                   {Op{{}, {}, 2}});
    EnvMorphism other = env.from_raw({}, {}, FinMap(0, 1, {}), FinMap(0, 1, {}),
                                     {Op{{}, {}, 1}});
    EnvMorphism both = env.tensor(one, other);
    CHECK(both.shape == closed_points(2));
    CHECK(both.vertex_ops[0].tag == 1);
    CHECK(both.vertex_ops[1].tag == 2);
    CHECK(env.tensor(one, other) == env.tensor(other, one));
}

TEST_CASE("hom enumeration is sorted, unique, and valid") {
    Envelope env(weighted_properad(cyclic_table(2)));
    std::vector<EnvMorphism> homs = env.hom_enum({1}, {1}, 2);
    REQUIRE(std::is_sorted(homs.begin(), homs.end()));
    REQUIRE(std::adjacent_find(homs.begin(), homs.end()) == homs.end());
    for (const EnvMorphism& f : homs) {
        REQUIRE(env.valid(f));
        REQUIRE(f.src == Word{1});
        REQUIRE(f.tgt == Word{1});
        REQUIRE(f.shape.middle() <= 2);
    }
}

TEST_CASE("morphism text round trips") {
    Envelope env(terminal_properad(2));
    EnvMorphism s = env.symmetry({1, 2}, {2});
    std::string text = print_morphism(s);
    CHECK(text == "mor 1 2 2 -> 2 1 2 ; shape cospan 3 3 3 : 1 2 3 | 3 1 2 ; ops 0 0 0");
    CHECK(parse_morphism(text, env.properad()) == s);

    for (const EnvMorphism& f : env.hom_enum({1}, {2, 2}, 2)) {
        REQUIRE(parse_morphism(print_morphism(f), env.properad()) == f);
    }
}

TEST_CASE("morphism parsing reports structural problems") {
    Envelope env(terminal_properad(1));
    CHECK_THROWS_AS(parse_morphism("", env.properad()), ParseError);
    CHECK_THROWS_AS(parse_morphism("mor 1 -> 1", env.properad()), ParseError);
    // Too few operation tags for the middle.
    CHECK_THROWS_AS(
        parse_morphism("mor 1 -> 1 ; shape cospan 1 2 1 : 1 | 1 ; ops 0", env.properad()),
        ParseError);
    // A payload outside the properad.
    CHECK_THROWS_AS(
        parse_morphism("mor 1 -> 1 ; shape cospan 1 1 1 : 1 | 1 ; ops 7", env.properad()),
        ParseError);
    // Colors outside the palette.
    CHECK_THROWS_AS(
        parse_morphism("mor 3 -> 3 ; shape cospan 1 1 1 : 1 | 1 ; ops 0", env.properad()),
        ParseError);
}
