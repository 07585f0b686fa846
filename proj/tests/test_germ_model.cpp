#include <doctest.h>

#include <sstream>

#include <germforge/catalog.hpp>

#include "test_support.hpp"

using namespace germforge;

namespace {

Polynomial P(const Ring& r, const std::string& s) { return parse_poly(s, r); }

MapGerm germ(const Ring& r, std::initializer_list<const char*> comps)
{
    std::vector<Polynomial> v;
    for (auto* c : comps) v.push_back(parse_poly(c, r));
    return make_map_germ(r, std::move(v));
}

}  // namespace

TEST_CASE("map germ: construction rules")
{
    auto r = make_ring({"x", "y"});
    auto f = germ(r, {"x", "y^2", "x*y"});
    CHECK(f.source_dim() == 2);
    CHECK(f.target_dim() == 3);
    CHECK_THROWS_AS(germ(r, {"x"}), error);  // target smaller than source
    CHECK_THROWS_AS(germ(r, {"x+1", "y", "x"}), error);  // does not fix the origin
}

TEST_CASE("corank: kernel of the differential")
{
    auto r = make_ring({"x", "y"});
    CHECK(corank(germ(r, {"x", "y", "x*y"})) == 0);
    CHECK(corank(germ(r, {"x", "y^2", "y^3"})) == 1);
    CHECK(corank(germ(r, {"x^2", "y^2", "x*y"})) == 2);
    // mixed linear part of rank one
    CHECK(corank(germ(r, {"x+y", "x+y+x^2", "y^2"})) == 1);
}

TEST_CASE("corank: invariance under linear coordinate changes")
{
    gftest::Rng rng(71);
    auto r = make_ring({"x", "y"});
    auto f = germ(r, {"x", "y^2", "y^3+x^2*y"});
    int base = corank(f);
    for (int trial = 0; trial < 25; ++trial) {
        // random invertible 2x2 source change
        Q a, b, c, d;
        do {
            a = rng.rational();
            b = rng.rational();
            c = rng.rational();
            d = rng.rational();
        } while (a * d - b * c == 0);
        auto x = Polynomial::variable(r, "x"), y = Polynomial::variable(r, "y");
        std::map<std::string, Polynomial> lin{
            {"x", Polynomial::constant(r, a) * x + Polynomial::constant(r, b) * y},
            {"y", Polynomial::constant(r, c) * x + Polynomial::constant(r, d) * y}};
        std::vector<Polynomial> comps;
        for (const auto& p : f.components) comps.push_back(p.substitute(lin, r));
        CHECK(corank(make_map_germ(r, std::move(comps))) == base);
    }
}

TEST_CASE("multiplicity: local algebra dimension")
{
    auto r = make_ring({"y", "z"});
    // double point parabola: Q(f) = O/(y, z^2)
    auto f = germ(r, {"y", "z^2", "z^3"});
    auto q = multiplicity(f);
    REQUIRE(q.has_value());
    CHECK(*q == 2);
    auto curve_r = make_ring({"t"});
    CurveGerm mono = make_curve_germ(curve_r, {P(curve_r, "t^3")});
    auto qc = multiplicity(mono);
    REQUIRE(qc.has_value());
    CHECK(*qc == 3);
}

TEST_CASE("unfolding: base, specialization, full map")
{
    auto r = make_ring({"x", "y", "u"});
    Unfolding F = make_unfolding(r, 2, {P(r, "x"), P(r, "y^2"), P(r, "y^3+u*y")});
    CHECK(F.params() == 1);
    MapGerm base = unfolding_base(F);
    CHECK(to_string(base.components[2]) == to_string(P(make_ring({"x", "y"}), "y^3")));
    CHECK(is_unfolding_of(F, base));

    MapGerm full = unfolding_full_map(F);
    CHECK(full.target_dim() == 4);  // deformed components plus the parameter

    MapGerm at = specialize(F, {Q(0)});
    CHECK(to_string(at.components[2]) == to_string(base.components[2]));
}

TEST_CASE("augment: curve substitution into the parameters")
{
    auto r = make_ring({"x", "y", "u"});
    Unfolding F = make_unfolding(r, 2, {P(r, "x"), P(r, "y^2"), P(r, "y^3+u*y")});
    auto rw = make_ring({"w"});
    CurveGerm gamma = make_curve_germ(rw, {P(rw, "w^2")});
    MapGerm A = augment(F, gamma);
    CHECK(A.source_dim() == 3);
    CHECK(A.target_dim() == 4);
    auto rs = A.source;
    CHECK(to_string(A.components[2]) == to_string(P(rs, "y^3+w^2*y")));
    CHECK(to_string(A.components[3]) == to_string(P(rs, "w")));
}

TEST_CASE("augment: restriction to w = 0 recovers the base with a zero slot")
{
    gftest::Rng rng(72);
    auto r = make_ring({"x", "y", "u1", "u2"});
    Unfolding F =
        make_unfolding(r, 2, {P(r, "x"), P(r, "y^2+u1*y"), P(r, "y^3+u2*y")});
    auto rw = make_ring({"w"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> comps;
        for (int j = 0; j < 2; ++j) {
            Polynomial g = Polynomial::zero(rw);
            int terms = (int)rng.integer(0, 2);
            for (int t = 0; t < terms; ++t) {
                long e = rng.integer(1, 4);
                g = g + Polynomial::constant(rw, rng.rational()) *
                            P(rw, "w^" + std::to_string(e));
            }
            comps.push_back(g);
        }
        CurveGerm gamma = make_curve_germ(rw, comps);
        MapGerm A = augment(F, gamma);
        std::map<std::string, Polynomial> zero{{"w", Polynomial::zero(A.source)}};
        MapGerm base = unfolding_base(F);
        for (size_t i = 0; i < 3; ++i) {
            Polynomial restricted = A.components[i].substitute(zero, A.source);
            Polynomial expect = base.components[i].substitute({}, A.source);
            CHECK(to_string(restricted) == to_string(expect));
        }
        CHECK(A.components[3].substitute(zero, A.source).is_zero());
    }
}

TEST_CASE("germ file: parse and round trip")
{
    std::istringstream in(
        "# comment\n"
        "label demo\n"
        "vars x y\n"
        "weights 1 2\n"
        "component x\n"
        "component y^2+x^2*y\n"
        "component y^3\n");
    GermFile g = parse_germ_file(in);
    CHECK(g.label == "demo");
    CHECK(g.vars.size() == 2);
    CHECK(g.weights.size() == 2);
    CHECK_FALSE(g.is_unfolding());
    MapGerm f = g.as_map_germ();
    CHECK(f.source->weights[1] == 2);

    std::istringstream again(to_string(g));
    GermFile g2 = parse_germ_file(again);
    CHECK(g2.label == g.label);
    CHECK(g2.component_text == g.component_text);
}

TEST_CASE("germ file: rejects malformed input")
{
    std::istringstream no_vars("label a\ncomponent x\n");
    CHECK_THROWS_AS(parse_germ_file(no_vars), error);
    std::istringstream bad_weights("label a\nvars x y\nweights 1\ncomponent x\ncomponent y\n");
    CHECK_THROWS_AS(parse_germ_file(bad_weights), error);
}

TEST_CASE("catalog: every shipped file loads")
{
    Catalog cat = load_catalog();
    CHECK(cat.entries.size() >= 40);
    for (const auto& [label, gf] : cat.entries) {
        if (gf.is_unfolding())
            CHECK(gf.as_unfolding().label == label);
        else
            CHECK(gf.as_map_germ().label == label);
    }
    // spot checks against the tables
    CHECK(catalog_get(cat, "A2hat").weights == std::vector<long>{1, 2, 3});
    CHECK(catalog_get(cat, "F_A2hat").params.size() == 3);
    CHECK(catalog_get(cat, "F_A3hat").params.size() == 5);
    CHECK_THROWS_AS(catalog_get(cat, "nonexistent"), error);
}

TEST_CASE("catalog: series germs are corank two at the origin")
{
    Catalog cat = load_catalog();
    for (const char* label : {"A2hat", "A3hat", "B3hat", "hhat1"})
        CHECK(corank(catalog_get(cat, label).as_map_germ()) == 2);
}

TEST_CASE("curve template expansion")
{
    CHECK(expand_level("(0,w^l,0)", 3) == "(0,w^3,0)");
    CHECK(expand_level("(w^l,0,w^2l)", 2) == "(w^2,0,w^4)");
    CHECK(expand_level("(0,v^l,v^4l,v^3l)", 2) == "(0,v^2,v^8,v^6)");
    CHECK(expand_level("X^5*w^{l1}", 1) == "X^5*w^0");
    CurveGerm g = parse_curve("(x^l,-x^l,0,0,0)", 2, "x");
    CHECK(g.components.size() == 5);
    CHECK(to_string(g.components[1]) == to_string(P(make_ring({"x"}), "-x^2")));
}
