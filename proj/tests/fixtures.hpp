#pragma once

#include "hopf2x/xmodules.hpp"

namespace fixtures {

using namespace hopf2x;

inline Field Q() { return Field::rationals(); }

// F_2[x]/(x^2) with x primitive and S(x) = x.
inline HopfAlgebra dual_numbers()
{
    const Field f2 = Field::prime(2);
    HopfAlgebra::Data d;
    d.field = f2;
    d.labels = {"1", "x"};
    d.mul = Bilinear(Trilinear::build(f2, 2, 2, 2, [&](Index i, Index j) {
        if (i + j >= 2) return Vec();
        return Vec::unit(f2, i + j);
    }));
    d.unit = Vec::unit(f2, 0);
    VecBuilder dx;
    dx.add(pair_index(1, 0, 2), Scalar::one(f2));
    dx.add(pair_index(0, 1, 2), Scalar::one(f2));
    d.comul = LinearMap(f2, 4, {Vec::unit(f2, 0), dx.build()});
    d.counit = {Scalar::one(f2), Scalar::zero(f2)};
    d.antipode = LinearMap::identity(f2, 2);
    d.cocommutative = true;
    return HopfAlgebra(std::move(d));
}

// Over F_2: x, y primitive with [x, y] = y, x^2 = x, y^2 = 0. Basis 1, x, y, xy.
inline HopfAlgebra restricted_xy()
{
    const Field f2 = Field::prime(2);
    HopfAlgebra::Data d;
    d.field = f2;
    d.labels = {"1", "x", "y", "xy"};
    auto v = [&](std::initializer_list<Index> idx) {
        VecBuilder vb;
        for (auto i : idx) vb.add(i, Scalar::one(f2));
        return vb.build();
    };
    // rows: left factor 1, x, y, xy; yx = xy + y
    const std::vector<std::vector<Vec>> table{
        {v({0}), v({1}), v({2}), v({3})},
        {v({1}), v({1}), v({3}), v({3})},
        {v({2}), v({2, 3}), Vec(), Vec()},
        {v({3}), Vec(), Vec(), Vec()},
    };
    d.mul = Bilinear(Trilinear::build(f2, 4, 4, 4, [&](Index i, Index j) { return table[i][j]; }));
    d.unit = v({0});
    auto t = [](Index a, Index b) { return pair_index(a, b, 4); };
    d.comul = LinearMap(f2, 16,
                        {v({t(0, 0)}), v({t(1, 0), t(0, 1)}), v({t(2, 0), t(0, 2)}),
                         v({t(3, 0), t(1, 2), t(2, 1), t(0, 3)})});
    d.counit = {Scalar::one(f2), Scalar::zero(f2), Scalar::zero(f2), Scalar::zero(f2)};
    d.antipode = LinearMap(f2, 4, {v({0}), v({1}), v({2}), v({2, 3})});
    d.cocommutative = true;
    return HopfAlgebra(std::move(d));
}

// h -> h -> kappa with d2 = id and {a, b} = sum (a |>_ad b') S(b'').
inline Hopf2XMod self_2xmod(const HopfAlgebra& h)
{
    const Field f = h.field();
    const Index d = h.dim();
    HopfAlgebra k = trivial_hopf(f);
    Bilinear lift(Trilinear::build(f, d, d, d, [&](Index a, Index b) {
        VecBuilder vb;
        const Vec db = h.comul(h.basis(b));
        for (const auto& term : db.terms())
            vb.add(h.mul(adjoint(h, h.basis(a), h.basis(term.index / d)), h.antipode(term.index % d)), term.coef);
        return vb.build();
    }));
    return Hopf2XMod{h, h, k, HopfMorphism::identity(h), zero_morphism(h, k), trivial_action(k, h), trivial_action(k, h),
                     lift};
}

// Every structure constant agrees on the shared basis.
inline bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b)
{
    if (a.dim() != b.dim()) return false;
    for (Index i = 0; i < a.dim(); ++i) {
        if (!(a.comul(i) == b.comul(i)) || !(a.counit(i) == b.counit(i)) || !(a.antipode(i) == b.antipode(i)))
            return false;
        for (Index j = 0; j < a.dim(); ++j)
            if (!(a.mul(i, j) == b.mul(i, j))) return false;
    }
    return a.one() == b.one();
}

// C2 -> C4 -> C2: d2(l) = 2l, d1(e) = e mod 2, G inverts C4 and fixes C2,
// {e,f} = (e mod 2)(f mod 2).
inline Group2XMod c2c4c2()
{
    FiniteGroup L = FiniteGroup::cyclic(2), E = FiniteGroup::cyclic(4), G = FiniteGroup::cyclic(2);
    Table on_e(2, std::vector<std::size_t>(4));
    for (std::size_t e = 0; e < 4; ++e) {
        on_e[0][e] = e;
        on_e[1][e] = (4 - e) % 4;
    }
    Table lift(4, std::vector<std::size_t>(4));
    for (std::size_t e = 0; e < 4; ++e)
        for (std::size_t f = 0; f < 4; ++f) lift[e][f] = (e % 2) * (f % 2);
    return Group2XMod{L, E, G, {0, 2}, {0, 1, 0, 1}, trivial_group_action(G, L), GroupAction{G, E, on_e}, lift};
}

// C4 -> D4 -> C2: rotations include, reflections map to the generator,
// trivial actions, {e,f} = e f e^-1 f^-1.
inline Group2XMod d4()
{
    FiniteGroup L = FiniteGroup::cyclic(4), E = FiniteGroup::dihedral(4), G = FiniteGroup::cyclic(2);
    std::vector<std::size_t> d2{0, 1, 2, 3}, d1(8);
    for (std::size_t e = 0; e < 8; ++e) d1[e] = e / 4;
    Table lift(8, std::vector<std::size_t>(8));
    for (std::size_t e = 0; e < 8; ++e)
        for (std::size_t f = 0; f < 8; ++f) lift[e][f] = E.mul(E.mul(e, f), E.mul(E.inverse(e), E.inverse(f)));
    return Group2XMod{L, E, G, d2, d1, trivial_group_action(G, L), trivial_group_action(G, E), lift};
}

// kappa[C4] -> kappa[C2], reduction mod 2, trivial action.
inline HopfXMod c4_c2(Field f = Q())
{
    HopfAlgebra I = group_algebra(FiniteGroup::cyclic(4), f);
    HopfAlgebra H = group_algebra(FiniteGroup::cyclic(2), f);
    HopfMorphism d = group_algebra_hom(I, H, {FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), {0, 1, 0, 1}});
    return HopfXMod{I, H, d, trivial_action(H, I)};
}

// id: H -> H with the adjoint action.
inline HopfXMod identity_xmod(const HopfAlgebra& h) { return HopfXMod{h, h, HopfMorphism::identity(h), adjoint_action(h)}; }

}  // namespace fixtures
