#include "doctest.h"

#include "fixtures.hpp"

using namespace hopf2x;
using fixtures::Q;

namespace {

HopfAlgebra kg(const FiniteGroup& g, Field f = Q()) { return group_algebra(g, f); }

const CheckRecord& rec(const Report& r, const std::string& id)
{
    const CheckRecord* p = r.find(id);
    REQUIRE_MESSAGE(p, id);
    return *p;
}

// L = E = S3 over G = 1, d2 = id, {e,f} = e f e^-1 f^-1.
Group2XMod s3_self()
{
    FiniteGroup S3 = FiniteGroup::symmetric3(), one = FiniteGroup::trivial();
    Table lift(6, std::vector<std::size_t>(6));
    for (std::size_t e = 0; e < 6; ++e)
        for (std::size_t f = 0; f < 6; ++f) lift[e][f] = S3.mul(S3.mul(e, f), S3.mul(S3.inverse(e), S3.inverse(f)));
    return Group2XMod{S3, S3, one, {0, 1, 2, 3, 4, 5}, std::vector<std::size_t>(6, 0), trivial_group_action(one, S3),
                      trivial_group_action(one, S3), lift};
}

// kappa[D4] -> kappa[C2] by the reflection sign, trivial action: precrossed only.
HopfXMod d4_sign()
{
    FiniteGroup D4 = FiniteGroup::dihedral(4), C2 = FiniteGroup::cyclic(2);
    HopfAlgebra I = kg(D4), H = kg(C2);
    return HopfXMod{I, H, group_algebra_hom(I, H, {D4, C2, {0, 0, 0, 0, 1, 1, 1, 1}}), trivial_action(H, I)};
}

// kappa -> kappa -> H
Hopf2XMod trivial_over(const HopfAlgebra& h)
{
    HopfAlgebra k = trivial_hopf(h.field());
    return trivial_2xmod(HopfXMod{k, h, zero_morphism(k, h), trivial_action(h, k)});
}

Vec eps_eps_one(const HopfAlgebra& a, Index i, Index j, const HopfAlgebra& target)
{
    return target.one().scaled(a.counit(i) * a.counit(j));
}

// sum (x' |>_ad y') (d1(x'') |> S(y'')) in I
Vec axiom2_rhs(const Hopf2XMod& x, Index i, Index j)
{
    const HopfAlgebra& I = x.I;
    const Index d = I.dim();
    VecBuilder vb;
    const Vec dx = I.comul(i), dy = I.comul(j);
    for (const auto& a : dx.terms())
        for (const auto& b : dy.terms()) {
            Vec left = adjoint(I, I.basis(a.index / d), I.basis(b.index / d));
            Vec right = x.on_I.act(x.d1(a.index % d), I.antipode(b.index % d));
            vb.add(I.mul(left, right), a.coef * b.coef);
        }
    return vb.build();
}

std::vector<Hopf2XMod> hopf2x_fixtures()
{
    return {linearize_group_2xmod(fixtures::c2c4c2(), Q()), linearize_group_2xmod(fixtures::d4(), Q()),
            linearize_group_2xmod(s3_self(), Q()), from_precrossed(d4_sign()),
            fixtures::self_2xmod(fixtures::restricted_xy())};
}

bool constant_on(const TruncatedSimplicialHopf& t, const HopfAlgebra& h)
{
    for (std::size_t k = 0; k <= t.truncation(); ++k) {
        if (t.levels[k].dim() != h.dim()) return false;
        const LinearMap id = LinearMap::identity(h.field(), h.dim());
        for (std::size_t i = 0; i <= k && k > 0; ++i)
            if (!(t.d(k, i).map() == id)) return false;
        for (std::size_t j = 0; j < k; ++j)
            if (!(t.s(k, j).map() == id)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("restricted fixture is a cocommutative Hopf algebra with two primitives")
{
    HopfAlgebra u = fixtures::restricted_xy();
    CHECK(verify_hopf(u).ok());
    CHECK(is_cocommutative(u));
    Primitives p = primitives(u);
    CHECK(p.space == Subspace::span(u.field(), 4, std::vector{u.basis(1), u.basis(2)}));
    CHECK(verify_lie(prim_project(u)).ok());
}

TEST_CASE("verify_xmod examples")
{
    CHECK(verify_xmod(fixtures::c4_c2()).ok());
    CHECK(verify_xmod(fixtures::identity_xmod(kg(FiniteGroup::symmetric3()))).ok());
    CHECK(verify_xmod(fixtures::identity_xmod(fixtures::restricted_xy())).ok());

    HopfXMod x = fixtures::c4_c2();
    const HopfAlgebra I = x.I, H = x.H;
    ActionTensor negated(H, I, Bilinear(Trilinear::build(Q(), 2, 4, 4, [&](Index g, Index u) {
                             return g == 1 && u == 1 ? I.basis(u).scaled(Scalar(Q(), -1)) : I.basis(u);
                         })));
    Report r = verify_xmod(HopfXMod{I, H, x.boundary, negated});
    CHECK(rec(r, "equivariance").status == Status::fail);
    CHECK_FALSE(r.ok());

    Report pre = verify_xmod(d4_sign(), XModMode::precrossed);
    CHECK(pre.ok());
    CHECK(rec(pre, "peiffer").status == Status::skipped);
    CHECK(rec(verify_xmod(d4_sign()), "peiffer").status == Status::fail);

    CHECK_THROWS_AS(verify_xmod(HopfXMod{H, I, x.boundary, x.action}), DimensionMismatch);
}

TEST_CASE("verify_2xmod examples")
{
    Hopf2XMod p = from_precrossed(fixtures::c4_c2());
    CHECK(verify_2xmod(p).ok());
    CHECK(verify_2xmod(linearize_group_2xmod(fixtures::d4(), Q())).ok());

    Hopf2XMod s = linearize_group_2xmod(s3_self(), Q());
    REQUIRE(verify_group_2xmod(s3_self()).ok());
    REQUIRE(verify_2xmod(s).ok());
    const HopfAlgebra K = s.K;
    s.lift = Bilinear(Trilinear::build(Q(), 6, 6, 6, [&](Index i, Index j) { return eps_eps_one(s.I, i, j, K); }));
    Report r = verify_2xmod(s);
    CHECK(rec(r, "axiom-3").status == Status::fail);
}

TEST_CASE("property: d2 of the lifting is the axiom-2 right-hand side")
{
    for (const auto& x : hopf2x_fixtures()) {
        Report r = verify_2xmod(x);
        CHECK(r.ok());
        CHECK(r.count(Status::fail) == 0);
        for (Index i = 0; i < x.I.dim(); ++i)
            for (Index j = 0; j < x.I.dim(); ++j) CHECK(x.d2(x.lift.value(i, j)) == axiom2_rhs(x, i, j));
    }
}

TEST_CASE("derived_action examples")
{
    Hopf2XMod p = from_precrossed(fixtures::c4_c2());
    ActionTensor t = derived_action(p);
    ActionTensor triv = trivial_action(p.I, p.K);
    for (Index x = 0; x < p.I.dim(); ++x)
        for (Index k = 0; k < p.K.dim(); ++k) CHECK(t.act(x, k) == triv.act(x, k));

    // group-likes: x |>' k = k {d2(k^-1), x}
    Group2XMod g = fixtures::d4();
    Hopf2XMod lin = linearize_group_2xmod(g, Q());
    ActionTensor d = derived_action(lin);
    CHECK(verify_module_bialgebra(d).ok());
    for (std::size_t e = 0; e < g.E.order(); ++e)
        for (std::size_t l = 0; l < g.L.order(); ++l)
            CHECK(d.act(e, l) == lin.K.basis(g.L.mul(l, g.lift[g.d2[g.L.inverse(l)]][e])));

    // primitives: x |>' k = -{d2(k), x}
    Hopf2XMod u = fixtures::self_2xmod(fixtures::restricted_xy());
    ActionTensor du = derived_action(u);
    CHECK(verify_module_bialgebra(du).ok());
    const Primitives pk = primitives(u.K), pi = primitives(u.I);
    for (const auto& x : pi.space.rows())
        for (const auto& k : pk.space.rows()) {
            CHECK(du.act(x, k) == u.lift.apply(u.d2(k), x).scaled(Scalar(u.K.field(), -1)));
        }
    // not trivial here: x |>' y = [x, y] = y
    CHECK(du.act(u.I.basis(1), u.K.basis(2)) == u.K.basis(2));
}

TEST_CASE("from_precrossed examples")
{
    Hopf2XMod p = from_precrossed(fixtures::c4_c2());
    CHECK(p.K.dim() == 2);
    CHECK(fixtures::same_structure(p.K, kg(FiniteGroup::cyclic(2))));
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) CHECK(p.lift.value(i, j) == eps_eps_one(p.I, i, j, p.K));

    Hopf2XMod id = from_precrossed(fixtures::identity_xmod(kg(FiniteGroup::symmetric3())));
    CHECK(id.K.dim() == 1);
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j) CHECK(id.lift.value(i, j) == eps_eps_one(id.I, i, j, id.K));

    // D4 -> C2 by sign: K is the rotation subgroup and the lifting is the commutator.
    FiniteGroup D4 = FiniteGroup::dihedral(4);
    Hopf2XMod d = from_precrossed(d4_sign());
    CHECK(d.K.dim() == 4);
    CHECK(verify_2xmod(d).ok());
    for (Index e = 0; e < 8; ++e)
        for (Index f = 0; f < 8; ++f) {
            std::size_t c = D4.mul(D4.mul(e, f), D4.mul(D4.inverse(e), D4.inverse(f)));
            CHECK(d.d2(d.lift.value(e, f)) == d.I.basis(c));
        }

    // id: C4 -> C4 with the generator acting by inversion is not equivariant,
    // and {g, g} = g g^-1 (g |> g^-1) = g^2 leaves HKer(id) = kappa.
    FiniteGroup C4 = FiniteGroup::cyclic(4);
    HopfAlgebra c4 = kg(C4);
    Table inv(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t e = 0; e < 4; ++e) inv[a][e] = a % 2 ? (4 - e) % 4 : e;
    HopfXMod bad{c4, c4, HopfMorphism::identity(c4), group_algebra_action(c4, c4, {C4, C4, inv})};
    CHECK(rec(verify_xmod(bad, XModMode::precrossed), "equivariance").status == Status::fail);
    CHECK_THROWS_AS(from_precrossed(bad), Error);
}

TEST_CASE("g1 examples")
{
    TruncatedSimplicialHopf t = g1(fixtures::c4_c2());
    CHECK(t.truncation() == 2);
    CHECK(t.levels[0].dim() == 2);
    CHECK(t.levels[1].dim() == 8);
    CHECK(t.levels[2].dim() == 32);
    CHECK(verify_simplicial(t).ok());
    MooreComplex m = moore_complex(t, MooreMode::both);
    CHECK(m.terms[2].dim() == 1);
    CHECK(moore_length_at_most(m, 1));

    HopfAlgebra s3 = kg(FiniteGroup::symmetric3());
    HopfAlgebra k = trivial_hopf(Q());
    CHECK(constant_on(g1(HopfXMod{k, s3, zero_morphism(k, s3), trivial_action(s3, k)}), s3));
    CHECK(verify_simplicial(g1(fixtures::identity_xmod(s3))).ok());
    CHECK(verify_simplicial(g1(fixtures::identity_xmod(fixtures::restricted_xy()))).ok());
}

TEST_CASE("x1 examples")
{
    X1Result r = x1(g1(fixtures::c4_c2()));
    CHECK(r.report.ok());
    CHECK(rec(r.report, "d2-F01-trivial").status == Status::pass);
    CHECK(r.xmod.I.dim() == 4);
    CHECK(verify_xmod(r.xmod).ok());

    X1Result c = x1(constant_simplicial(kg(FiniteGroup::cyclic(4)), 2));
    CHECK(c.xmod.I.dim() == 1);
    CHECK(c.xmod.H.dim() == 4);
    CHECK(c.report.ok());

    CHECK_THROWS_AS(x1(g2(linearize_group_2xmod(fixtures::c2c4c2(), Q()))), PreconditionError);
    CHECK_THROWS_AS(x1(constant_simplicial(kg(FiniteGroup::cyclic(2)), 1)), PreconditionError);
}

TEST_CASE("g2 examples")
{
    HopfAlgebra c4 = kg(FiniteGroup::cyclic(4));
    CHECK(constant_on(g2(trivial_over(c4)), c4));

    Hopf2XMod x = linearize_group_2xmod(fixtures::c2c4c2(), Q());
    TruncatedSimplicialHopf t = g2(x);
    REQUIRE(t.truncation() == 3);
    CHECK(t.levels[0].dim() == 2);
    CHECK(t.levels[1].dim() == 8);
    CHECK(t.levels[2].dim() == 64);
    CHECK(t.levels[3].dim() == 1024);
    Report v = verify_simplicial(t);
    CHECK(v.ok());
    CHECK(v.count(Status::skipped) == 0);

    MooreComplex m = moore_complex(t, MooreMode::projection);
    const Index dk = x.K.dim(), di = x.I.dim(), dh = x.H.dim();
    std::vector<Vec> nh1, nh2;
    for (Index u = 0; u < di; ++u) nh1.push_back(tensor(x.I.basis(u), x.H.one(), dh));
    for (Index k = 0; k < dk; ++k) nh2.push_back(Vec::unit(Q(), ((k * di + 0) * di + 0) * dh + 0));
    CHECK(m.terms[1] == Subspace::span(Q(), t.levels[1].dim(), nh1));
    CHECK(m.terms[2] == Subspace::span(Q(), t.levels[2].dim(), nh2));
    CHECK(m.terms[3].dim() == 1);
}

TEST_CASE("x2 examples")
{
    X2Result r = x2(g2(linearize_group_2xmod(fixtures::c2c4c2(), Q())));
    CHECK(r.report.ok());
    CHECK(rec(r.report, "lifting-in-NH2").status == Status::pass);
    CHECK(rec(r.report, "lifting-faces").status == Status::pass);
    CHECK(rec(r.report, "cond5").status == Status::pass);
    CHECK(verify_2xmod(r.xmod).ok());

    // Moore length one at truncation three: the lifting collapses.
    X2Result one = x2(g2(trivial_2xmod(fixtures::c4_c2())));
    CHECK(one.report.ok());
    CHECK(one.xmod.K.dim() == 1);
    for (Index i = 0; i < one.xmod.I.dim(); ++i)
        for (Index j = 0; j < one.xmod.I.dim(); ++j)
            CHECK(one.xmod.lift.value(i, j) == eps_eps_one(one.xmod.I, i, j, one.xmod.K));

    X2Result c = x2(constant_simplicial(kg(FiniteGroup::cyclic(2)), 3));
    CHECK(c.xmod.K.dim() == 1);
    CHECK(c.xmod.I.dim() == 1);
    CHECK(c.report.ok());

    CHECK_THROWS_AS(x2(g1(fixtures::c4_c2())), PreconditionError);
}

TEST_CASE("roundtrip_check examples")
{
    Report r1 = roundtrip_check(fixtures::c4_c2());
    CHECK(r1.ok());
    CHECK(rec(r1, "boundary").status == Status::pass);
    CHECK(rec(r1, "action").status == Status::pass);
    CHECK(roundtrip_check(fixtures::identity_xmod(fixtures::restricted_xy())).ok());
    HopfAlgebra s3 = kg(FiniteGroup::symmetric3());
    HopfAlgebra k = trivial_hopf(Q());
    CHECK(roundtrip_check(HopfXMod{k, s3, zero_morphism(k, s3), trivial_action(s3, k)}).ok());

    Report r2 = roundtrip_check(linearize_group_2xmod(fixtures::c2c4c2(), Q()));
    CHECK(r2.ok());
    CHECK(rec(r2, "lifting").status == Status::pass);
    CHECK(rec(r2, "d2").status == Status::pass);
    CHECK(roundtrip_check(trivial_over(s3)).ok());
    CHECK(roundtrip_check(fixtures::self_2xmod(fixtures::restricted_xy())).ok());

    CHECK(roundtrip_check(g1(fixtures::c4_c2()), 1).ok());
    Report rt = roundtrip_check(g2(linearize_group_2xmod(fixtures::c2c4c2(), Q())), 2);
    CHECK(rt.ok());
    CHECK(rec(rt, "level-dimensions").status == Status::pass);
}

TEST_CASE("gl_2xmod and prim_2xmod")
{
    for (const auto& g : {fixtures::d4(), fixtures::c2c4c2(), s3_self()}) {
        Group2XMod back = gl_2xmod(linearize_group_2xmod(g, Q()));
        CHECK(back.L == g.L);
        CHECK(back.E == g.E);
        CHECK(back.G == g.G);
        CHECK(back.d2 == g.d2);
        CHECK(back.d1 == g.d1);
        CHECK(back.on_L.perm == g.on_L.perm);
        CHECK(back.on_E.perm == g.on_E.perm);
        CHECK(back.lift == g.lift);
        CHECK(verify_group_2xmod(back).ok());

        Lie2XMod p = prim_2xmod(linearize_group_2xmod(g, Q()));
        CHECK(p.l.dim() == 0);
        CHECK(p.e.dim() == 0);
        CHECK(p.g.dim() == 0);
        CHECK(verify_lie_2xmod(p).ok());
    }

    Group2XMod t = gl_2xmod(trivial_over(trivial_hopf(Q())));
    CHECK(t.L.order() == 1);
    CHECK(t.E.order() == 1);
    CHECK(t.G.order() == 1);
    CHECK(verify_group_2xmod(t).ok());

    Lie2XMod u = prim_2xmod(fixtures::self_2xmod(fixtures::restricted_xy()));
    CHECK(u.l.dim() == 2);
    CHECK(u.e.dim() == 2);
    CHECK(u.g.dim() == 0);
    CHECK(verify_lie_2xmod(u).ok());
    // the lifting restricts to the bracket: {x, y} = [x, y] = y
    CHECK(u.lift.value(0, 1) == Vec::unit(u.l.field(), 1));
}

TEST_CASE("antipode_cancellation")
{
    HopfAlgebra c2 = kg(FiniteGroup::cyclic(2)), c4 = kg(FiniteGroup::cyclic(4));
    Bilinear mul = c4.data().mul;
    Bilinear f(Trilinear::build(Q(), 2, 2, 4, [&](Index i, Index j) { return c4.basis((i + j) % 4); }));
    Report same = antipode_cancellation(c2, c2, c4, f, f);
    CHECK(rec(same, "hypothesis").status == Status::pass);
    CHECK(rec(same, "conclusion").status == Status::pass);

    Bilinear g(Trilinear::build(Q(), 2, 2, 4, [&](Index i, Index j) { return c4.basis((i + 2 * j) % 4); }));
    Report diff = antipode_cancellation(c2, c2, c4, f, g);
    CHECK(rec(diff, "hypothesis").status == Status::skipped);
    CHECK(rec(diff, "conclusion").status == Status::skipped);
    CHECK(rec(diff, "hypothesis").note.rfind("unmet at", 0) == 0);
}

TEST_CASE("appendix_checks on G2 outputs")
{
    for (const auto& x : {linearize_group_2xmod(fixtures::c2c4c2(), Q()), fixtures::self_2xmod(fixtures::restricted_xy())}) {
        Report r = appendix_checks(g2(x));
        CHECK(r.ok());
        for (const auto& c : r.records())
            if (c.status == Status::skipped)
                CHECK_MESSAGE((c.id == "x2/moore/mode-agreement-3" || c.id == "x2/2xmod/d1-precrossed/peiffer"), c.id);
        std::size_t a4 = 0, a4act = 0, a5 = 0;
        for (const auto& c : r.records()) {
            if (c.id.rfind("axiom-4-action-", 0) == 0)
                ++a4act;
            else if (c.id.rfind("axiom-4-", 0) == 0)
                ++a4;
            else if (c.id.rfind("axiom-5-", 0) == 0)
                ++a5;
        }
        CHECK(a4act == 6);
        CHECK(a4 == 7);
        CHECK(a5 == 13);
    }
}

TEST_CASE("property: G2 outputs satisfy every simplicial identity")
{
    for (const auto& x : {fixtures::self_2xmod(fixtures::restricted_xy()), from_precrossed(fixtures::c4_c2())}) {
        TruncatedSimplicialHopf t = g2(x);
        CHECK(verify_simplicial(t).ok());
        CHECK(moore_length_at_most(moore_complex(t, MooreMode::projection), 2));
    }
}
