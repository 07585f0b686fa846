#include <doctest.h>

#include <germforge/gcd.hpp>
#include <germforge/poly_io.hpp>
#include <germforge/weights.hpp>

#include "test_support.hpp"

using namespace germforge;

namespace {
Ring xy() { return make_ring({"x", "y"}); }
Ring xyz() { return make_ring({"x", "y", "z"}); }

Polynomial P(const Ring& r, const std::string& s) { return parse_poly(s, r); }
}  // namespace

TEST_CASE("ring operations")
{
    auto r = xy();
    CHECK(P(r, "x+y") + P(r, "-x") == P(r, "y"));
    CHECK(P(r, "x+y") * P(r, "x-y") == P(r, "x^2-y^2"));
    auto r3 = xyz();
    CHECK(P(r3, "y^2+x*z") * P(r3, "1") == P(r3, "y^2+x*z"));
    CHECK_THROWS_AS(P(r, "x") + P(xyz(), "x"), error);
}

TEST_CASE("parser handles rationals, implicit products, parentheses")
{
    auto r = xy();
    CHECK(P(r, "3/2 x y^2") == P(r, "3/2*x*y^2"));
    CHECK(P(r, "-(x - y)^2") == P(r, "-x^2+2*x*y-y^2"));
    CHECK(P(r, "0") == Polynomial::zero(r));
    CHECK(to_string(P(r, "y^2 + 2x - 1/3")) == "y^2+2*x-1/3");
    CHECK_THROWS_AS(P(r, "x +"), error);
    CHECK_THROWS_AS(P(r, "w"), error);
}

TEST_CASE("differentiate")
{
    auto r = xyz();
    CHECK(P(r, "y^2+x*z").differentiate("z") == P(r, "x"));
    CHECK(P(r, "y^3").differentiate("x") == Polynomial::zero(r));
    CHECK(P(r, "z^2+y^3").differentiate("y") == P(r, "3*y^2"));
    CHECK_THROWS_AS(P(r, "x").differentiate("q"), error);
}

TEST_CASE("substitute")
{
    auto rw = make_ring({"U2", "q", "w"});
    auto p = P(rw, "U2*q");
    CHECK(p.substitute({{"U2", P(rw, "w^3")}}) == P(rw, "w^3*q"));

    auto rt = make_ring({"x", "y", "t"});
    auto cusp = P(rt, "y^2-x^3");
    CHECK(cusp.substitute({{"x", P(rt, "t^2")}, {"y", P(rt, "t^3")}}).is_zero());

    auto r = make_ring({"x", "y", "z", "w"});
    CHECK(P(r, "y^2+x*z+w*y").substitute({{"w", Polynomial::zero(r)}}) == P(r, "y^2+x*z"));
}

TEST_CASE("weighted degree")
{
    auto r = xyz();
    auto [d1, h1] = P(r, "y^2+x*z").weighted_degree({1, 2, 3});
    CHECK(d1 == 4);
    CHECK(h1);
    auto [d2, h2] = P(xy(), "x+y^2").weighted_degree({1, 1});
    CHECK_FALSE(h2);
    auto [d3, h3] = P(r, "z^2+y^3").weighted_degree({1, 2, 3});
    CHECK(d3 == 6);
    CHECK(h3);
    auto [d0, h0] = Polynomial::zero(r).weighted_degree({1, 1, 1});
    CHECK(d0 == 0);
    CHECK(h0);
}

TEST_CASE("find_weights")
{
    auto r = xyz();
    std::vector<Polynomial> a2 = {P(r, "x"), P(r, "y^2+x*z+x^2*y"), P(r, "y*z"),
                                  P(r, "z^2+y^3")};
    auto w = find_weights(a2);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<long>{1, 2, 3});

    std::vector<Polynomial> b3 = {P(r, "x"), P(r, "y^2+x*z"), P(r, "z^2-x*y"),
                                  P(r, "y^3+y^2*z+y*z^2-z^3")};
    auto wb = find_weights(b3);
    REQUIRE(wb.has_value());
    CHECK(*wb == std::vector<long>{1, 1, 1});

    auto r2 = xy();
    CHECK(find_weights({P(r2, "x+y^2")}).has_value());
    CHECK_FALSE(find_weights({P(r2, "x+y^2"), P(r2, "x^2+y^2")}).has_value());
}

TEST_CASE("gcd and squarefree part")
{
    auto ru = make_ring({"u"});
    CHECK(gcd(P(ru, "u^3"), P(ru, "u^4")) == P(ru, "u^3"));
    CHECK(gcd(P(ru, "u^2-u^3"), P(ru, "u^2")) == P(ru, "u^2"));
    auto ry = make_ring({"Y1", "Y2"});
    auto c = P(ry, "Y1^3-Y2^2");
    CHECK(squarefree_part(c * c) == c.monic());
}

TEST_CASE("property: ring axioms")
{
    gftest::Rng rng(20260825);
    auto r = xyz();
    for (int it = 0; it < 1000; ++it) {
        auto a = rng.polynomial(r), b = rng.polynomial(r), c = rng.polynomial(r);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("property: Leibniz rule")
{
    gftest::Rng rng(20260826);
    auto r = xyz();
    for (int it = 0; it < 1000; ++it) {
        auto p = rng.polynomial(r), q = rng.polynomial(r);
        int v = (int)rng.integer(0, 2);
        CHECK((p * q).differentiate(v) ==
              p * q.differentiate(v) + q * p.differentiate(v));
    }
}

TEST_CASE("property: Euler relation for weighted homogeneous polynomials")
{
    gftest::Rng rng(20260827);
    auto r = xyz();
    std::vector<long> w = {1, 2, 3};
    for (int it = 0; it < 1000; ++it) {
        // build a homogeneous polynomial of random weighted degree
        long target = rng.integer(1, 9);
        std::vector<Term> ts;
        for (int k = 0; k < 6; ++k) {
            Monomial m = rng.monomial(3, 6);
            if (m.wdegree(w) == target) ts.push_back({m, rng.rational()});
        }
        Polynomial p = Polynomial::from_terms(r, ts);
        auto [d, hom] = p.weighted_degree(w);
        REQUIRE(hom);
        Polynomial sum = Polynomial::zero(r);
        for (int i = 0; i < 3; ++i)
            sum = sum + Polynomial::variable(r, r->vars[i]) * p.differentiate(i) * Q(w[i]);
        CHECK(sum == p * Q(d));
    }
}

TEST_CASE("property: substitution is a ring homomorphism")
{
    gftest::Rng rng(20260828);
    auto r = xyz();
    for (int it = 0; it < 1000; ++it) {
        auto p = rng.polynomial(r), q = rng.polynomial(r);
        std::map<std::string, Polynomial> img = {
            {"x", rng.polynomial(r, 3, 2)},
            {"y", rng.polynomial(r, 3, 2)},
        };
        CHECK((p + q).substitute(img) == p.substitute(img) + q.substitute(img));
        CHECK((p * q).substitute(img) == p.substitute(img) * q.substitute(img));
    }
}

TEST_CASE("property: gcd divides both arguments")
{
    gftest::Rng rng(20260829);
    auto r = xy();
    for (int it = 0; it < 200; ++it) {
        auto a = rng.polynomial(r, 3, 3), b = rng.polynomial(r, 3, 3);
        auto common = rng.nonzero_polynomial(r, 2, 2);
        auto p = a * common, q = b * common;
        if (p.is_zero() && q.is_zero()) continue;
        auto g = gcd(p, q);
        CHECK(divides(g, p));
        CHECK(divides(g, q));
        CHECK(divides(common, g));
    }
}
