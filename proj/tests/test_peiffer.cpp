#include "doctest.h"

#include "fixtures.hpp"
#include "hopf2x/peiffer.hpp"

using namespace hopf2x;
using fixtures::Q;

namespace {

HopfAlgebra kg(const FiniteGroup& g, Field f = Q()) { return group_algebra(g, f); }

std::vector<std::string> strs(const std::vector<SurjIndex>& xs)
{
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

std::string pair_str(const PeifferPair& p) { return p.alpha.str() + p.beta.str(); }

std::vector<HopfXMod> xmod_fixtures()
{
    HopfAlgebra c2 = kg(FiniteGroup::cyclic(2));
    return {fixtures::c4_c2(), fixtures::identity_xmod(kg(FiniteGroup::symmetric3())),
            HopfXMod{c2, c2, zero_morphism(c2, c2), trivial_action(c2, c2)}};
}

Subspace nh(const TruncatedSimplicialHopf& t, std::size_t k) { return image_of(moore_projection(t, k)); }

}  // namespace

TEST_CASE("enumerate_s examples")
{
    CHECK(strs(enumerate_s(2)) == std::vector<std::string>{"∅", "(1)", "(0)", "(1,0)"});
    CHECK(strs(enumerate_s(3)) ==
          std::vector<std::string>{"∅", "(2)", "(1)", "(2,1)", "(0)", "(2,0)", "(1,0)", "(2,1,0)"});
    auto s4 = strs(enumerate_s(4));
    REQUIRE(s4.size() == 16);
    CHECK(std::vector<std::string>(s4.begin(), s4.begin() + 4) == std::vector<std::string>{"∅", "(3)", "(2)", "(3,2)"});
    CHECK(strs(enumerate_s(0)) == std::vector<std::string>{"∅"});
}

TEST_CASE("property: S(n) has 2^n elements and one of full length")
{
    for (std::size_t n = 0; n <= 8; ++n) {
        auto s = enumerate_s(n);
        CHECK(s.size() == std::size_t{1} << n);
        std::vector<SurjIndex> full;
        for (const auto& a : s)
            if (a.length() == n) full.push_back(a);
        REQUIRE(full.size() == 1);
        std::vector<std::size_t> down;
        for (std::size_t i = n; i-- > 0;) down.push_back(i);
        CHECK(full[0].indices() == down);
        CHECK(s.back() == full[0]);
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
    }
}

TEST_CASE("SurjIndex validation")
{
    CHECK_THROWS_AS(SurjIndex(3, {0, 1}), PreconditionError);
    CHECK_THROWS_AS(SurjIndex(3, {3}), PreconditionError);
    CHECK_THROWS_AS(SurjIndex(3, {1, 1}), PreconditionError);
    CHECK(SurjIndex(3, {2, 0}).disjoint(SurjIndex(3, {1})));
    CHECK_FALSE(SurjIndex(3, {2, 0}).disjoint(SurjIndex(3, {0})));
}

TEST_CASE("enumerate_p examples")
{
    auto p2 = enumerate_p(2);
    REQUIRE(p2.size() == 1);
    CHECK(pair_str(p2[0]) == "(0)(1)");

    std::vector<std::string> p3;
    for (const auto& p : enumerate_p(3)) p3.push_back(pair_str(p));
    for (const std::string want : {"(1,0)(2)", "(2,0)(1)", "(0)(2,1)", "(0)(1)", "(0)(2)", "(1)(2)"})
        CHECK_MESSAGE(std::find(p3.begin(), p3.end(), want) != p3.end(), want);
    for (const auto& p : enumerate_p(3)) {
        CHECK(p.alpha.disjoint(p.beta));
        CHECK(p.beta < p.alpha);
        CHECK_FALSE(p.alpha.empty());
        CHECK_FALSE(p.beta.empty());
    }
    CHECK(enumerate_p(0).empty());
    CHECK(enumerate_p(1).empty());
}

TEST_CASE("generator_map_f examples")
{
    HopfAlgebra s3 = kg(FiniteGroup::symmetric3());
    TruncatedSimplicialHopf c = constant_simplicial(s3, 2);
    for (std::size_t k = 1; k <= 2; ++k)
        for (std::size_t i = 0; i < k; ++i) {
            LinearMap f = generator_map_f(c, k, i);
            for (Index x = 0; x < 6; ++x) CHECK(f.column(x) == s3.one().scaled(s3.counit(x)));
        }
    CHECK_THROWS(generator_map_f(c, 2, 2));

    for (const auto& x : xmod_fixtures()) {
        TruncatedSimplicialHopf t = g1(x);
        for (std::size_t k = 1; k <= 2; ++k)
            for (std::size_t i = 0; i < k; ++i) {
                LinearMap f = generator_map_f(t, k, i);
                const HopfAlgebra& lower = t.levels[k - 1];
                for (Index y = 0; y < lower.dim(); ++y)
                    CHECK(f.apply(t.s(k, i)(y)) == t.levels[k].one().scaled(lower.counit(y)));
                Subspace ker = hopf_kernel(t.d(k, i));
                for (const auto& col : f.columns()) CHECK(ker.contains(col));
            }
    }
}

TEST_CASE("pairing on the constant simplicial object")
{
    HopfAlgebra s3 = kg(FiniteGroup::symmetric3());
    TruncatedSimplicialHopf c = constant_simplicial(s3, 3);
    const Subspace full = Subspace::full(Q(), 6);
    for (std::size_t n : {2, 3})
        for (const auto& p : enumerate_p(n))
            for (Index x = 0; x < 6; ++x)
                for (Index y = 0; y < 6; ++y)
                    CHECK(pairing(c, n, p, s3.basis(x), s3.basis(y), full) == s3.one());
    CHECK(closed_form_check(c, 2).ok());
    CHECK(closed_form_check(c, 3).ok());
}

TEST_CASE("F_(0)(1) on group-likes is the linearized Peiffer commutator")
{
    for (const auto& x : xmod_fixtures()) {
        TruncatedSimplicialHopf t = g1(x);
        const HopfAlgebra& h2 = t.levels[2];
        GroupLikes g = group_likes(h2);
        REQUIRE(g.elements.size() == h2.dim());
        auto idx = [&](const Vec& v) {
            REQUIRE(v.size() == 1);
            REQUIRE(v.terms()[0].coef.is_one());
            return v.leading();
        };
        auto mul = [&](std::size_t a, std::size_t b) { return g.table[a][b]; };
        auto conj = [&](std::size_t a, std::size_t b) { return mul(mul(a, b), g.inverse[a]); };
        const Subspace nh1 = nh(t, 1), nh2 = nh(t, 2);
        const PeifferPair p = enumerate_p(2).at(0);
        for (const auto& u : nh1.rows())
            for (const auto& v : nh1.rows()) {
                std::size_t a = idx(t.s(2, 0)(u)), b = idx(t.s(2, 1)(v)), c = idx(t.s(2, 1)(u));
                std::size_t want = mul(conj(a, b), g.inverse[conj(c, b)]);
                CHECK(pairing(t, 2, p, u, v, nh2) == h2.basis(want));
            }
    }
}

TEST_CASE("property: pairings land in NH_n and vanish under the top face at Moore length 1")
{
    for (const auto& x : xmod_fixtures()) {
        TruncatedSimplicialHopf t = g1(x);
        const Subspace nh1 = nh(t, 1), nh2 = nh(t, 2);
        for (const auto& p : enumerate_p(2))
            for (const auto& u : nh1.rows())
                for (const auto& v : nh1.rows()) {
                    Vec f = pairing(t, 2, p, u, v, nh2);
                    CHECK(nh2.contains(f));
                    const Scalar e = t.levels[1].counit(u) * t.levels[1].counit(v);
                    CHECK(t.d(2, 2)(f) == t.levels[1].one().scaled(e));
                }
    }
}

TEST_CASE("property: reversed pairs are antipode images")
{
    for (const auto& x : xmod_fixtures()) {
        TruncatedSimplicialHopf t = g1(x);
        const HopfAlgebra& h2 = t.levels[2];
        const Subspace nh1 = nh(t, 1), nh2 = nh(t, 2);
        const PeifferPair p = enumerate_p(2).at(0);
        const PeifferPair rev{p.beta, p.alpha};
        for (const auto& u : nh1.rows())
            for (const auto& v : nh1.rows())
                CHECK(pairing(t, 2, rev, v, u, nh2) == h2.antipode(pairing(t, 2, p, u, v, nh2)));
    }
}

TEST_CASE("closed_form_check on G1 and G2 outputs")
{
    for (const auto& x : xmod_fixtures()) {
        Report r = closed_form_check(g1(x), 2);
        CHECK(r.ok());
        CHECK(r.find("F(0)(1)")->status == Status::pass);
        CHECK(r.find("F(0)(1)-in-NH")->status == Status::pass);
    }
    TruncatedSimplicialHopf t = g2(linearize_group_2xmod(fixtures::c2c4c2(), Q()));
    Report r = closed_form_check(t, 3);
    CHECK(r.ok());
    CHECK(r.size() == 12);
    for (const std::string f : {"F(1,0)(2)", "F(2,0)(1)", "F(0)(2,1)", "F(0)(1)", "F(0)(2)", "F(1)(2)"})
        CHECK_MESSAGE(r.find(f)->status == Status::pass, f);
    CHECK_THROWS_AS(closed_form_check(t, 4), PreconditionError);
    CHECK_THROWS_AS(closed_form_check(g1(fixtures::c4_c2()), 3), PreconditionError);
}
