#include "hopf2x/xmodules.hpp"

#include <optional>

#include "check_util.hpp"
#include "hopf2x/peiffer.hpp"
#include "sweedler_util.hpp"

namespace hopf2x {

using detail::digits;
using detail::first_mismatch;
using detail::Parts;
using detail::Sides;
using detail::sweedler_sum;

namespace {

std::string tuple_str(std::initializer_list<std::string> xs)
{
    std::string s = "(";
    bool first = true;
    for (const auto& x : xs) {
        if (!first) s += ", ";
        s += x;
        first = false;
    }
    return s + ")";
}

Vec scalar_vec(const Scalar& c)
{
    VecBuilder vb;
    vb.add(0, c);
    return vb.build();
}

// Ambient vector of a coordinate vector against the rows of s.
Vec ambient(const Subspace& s, const Vec& coords)
{
    VecBuilder vb;
    for (const auto& t : coords.terms()) vb.add(s.rows()[t.index], t.coef);
    return vb.build();
}

Vec coords_or_throw(const Subspace& s, const Vec& v, const std::string& what)
{
    try {
        return s.coordinates(v);
    } catch (const NotInSubspace&) {
        throw ClosureError(what);
    }
}

std::string first_failure_text(const Report& r)
{
    for (const auto& rec : r.records())
        if (rec.status == Status::fail) return rec.id + " at " + rec.witness->tuple;
    return {};
}

}  // namespace

// ---- crossed modules ---------------------------------------------------------------

Report verify_xmod(const HopfXMod& x, XModMode mode)
{
    const HopfAlgebra &I = x.I, &H = x.H;
    const Index di = I.dim(), dh = H.dim();
    if (x.boundary.source().dim() != di || x.boundary.target().dim() != dh || x.action.acting().dim() != dh ||
        x.action.carrier().dim() != di)
        throw DimensionMismatch("crossed module components do not fit together");
    Report r;
    r.merge(verify_module_bialgebra(x.action), "action");
    r.merge(verify_morphism(x.boundary), "boundary");
    r.check("equivariance", "crossed module / ∂(a▷v) = a▷_ad ∂(v)",
            first_mismatch(
                dh * di,
                [&](std::size_t k) {
                    Index a = k / di, v = k % di;
                    return Sides{x.boundary(x.action.act(a, v)), adjoint(H, H.basis(a), x.boundary(v))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({H.label(k / di), I.label(k % di)}), format(H, s.lhs), format(H, s.rhs)};
                }));
    if (mode == XModMode::precrossed) {
        r.skip("peiffer", "crossed module / ∂(u)▷v = u▷_ad v", "precrossed mode");
        return r;
    }
    r.check("peiffer", "crossed module / ∂(u)▷v = u▷_ad v",
            first_mismatch(
                di * di,
                [&](std::size_t k) {
                    Index u = k / di, v = k % di;
                    return Sides{x.action.act(x.boundary(u), I.basis(v)), adjoint(I, I.basis(u), I.basis(v))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({I.label(k / di), I.label(k % di)}), format(I, s.lhs), format(I, s.rhs)};
                }));
    return r;
}

ActionTensor derived_action(const Hopf2XMod& x)
{
    const HopfAlgebra &K = x.K, &I = x.I;
    const Field F = K.field();
    return ActionTensor(I, K, Bilinear(Trilinear::build(F, I.dim(), K.dim(), K.dim(), [&](Index i, Index k) {
                            VecBuilder vb;
                            for (const auto& t : sweedler(K, K.basis(k), 2))
                                K.mul_into(K.basis(t.parts[0]),
                                           x.lift.apply(x.d2(K.antipode(t.parts[1])), I.basis(i)), t.coef, vb);
                            return vb.build();
                        })));
}

Report verify_2xmod(const Hopf2XMod& x)
{
    const HopfAlgebra &K = x.K, &I = x.I, &H = x.H;
    const Index dk = K.dim(), di = I.dim(), dh = H.dim();
    auto aI = [&](const Vec& a, const Vec& v) { return x.on_I.act(a, v); };
    auto aK = [&](const Vec& a, const Vec& v) { return x.on_K.act(a, v); };
    auto L = [&](const Vec& u, const Vec& v) { return x.lift.apply(u, v); };
    auto eK = [&](Index i) { return K.basis(i); };
    auto eI = [&](Index i) { return I.basis(i); };
    auto eH = [&](Index i) { return H.basis(i); };
    auto fK = [&](const Vec& v) { return format(K, v); };
    auto fI = [&](const Vec& v) { return format(I, v); };
    auto fH = [&](const Vec& v) { return format(H, v); };
    const ActionTensor dact = derived_action(x);

    Report r;
    r.merge(verify_morphism(x.d2), "d2");
    r.merge(verify_morphism(x.d1), "d1");
    r.merge(verify_module_bialgebra(x.on_I), "action-I");
    r.merge(verify_module_bialgebra(x.on_K), "action-K");

    r.check("chain", "2-crossed module / ∂₁∂₂(k) = ε(k)1",
            first_mismatch(
                dk, [&](std::size_t k) { return Sides{x.d1(x.d2(k)), H.one().scaled(K.counit(k))}; },
                [&](std::size_t k, const Sides& s) { return Witness{K.label(k), fH(s.lhs), fH(s.rhs)}; }));

    r.check("axiom-1-d2", "2-crossed module / 1) ∂₂(a▷k) = a▷∂₂(k)",
            first_mismatch(
                dh * dk,
                [&](std::size_t k) {
                    Index a = k / dk, l = k % dk;
                    return Sides{x.d2(aK(eH(a), eK(l))), aI(eH(a), x.d2(l))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({H.label(k / dk), K.label(k % dk)}), fI(s.lhs), fI(s.rhs)};
                }));

    r.check("axiom-1-d1", "2-crossed module / 1) ∂₁(a▷x) = a▷_ad ∂₁(x)",
            first_mismatch(
                dh * di,
                [&](std::size_t k) {
                    Index a = k / di, v = k % di;
                    return Sides{x.d1(aI(eH(a), eI(v))), adjoint(H, eH(a), x.d1(v))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({H.label(k / di), I.label(k % di)}), fH(s.lhs), fH(s.rhs)};
                }));

    r.check("lifting-equivariance", "2-crossed module / a▷{x,y} = Σ{a'▷x, a''▷y}",
            first_mismatch(
                dh * di * di,
                [&](std::size_t k) {
                    auto ix = digits(k, {dh, di, di});
                    Vec rhs = sweedler_sum({{H, eH(ix[0]), 2}}, [&](const std::vector<Parts>& p) {
                        return L(aI(eH(p[0][0]), eI(ix[1])), aI(eH(p[0][1]), eI(ix[2])));
                    });
                    return Sides{aK(eH(ix[0]), L(eI(ix[1]), eI(ix[2]))), rhs};
                },
                [&](std::size_t k, const Sides& s) {
                    auto ix = digits(k, {dh, di, di});
                    return Witness{tuple_str({H.label(ix[0]), I.label(ix[1]), I.label(ix[2])}), fK(s.lhs), fK(s.rhs)};
                }));

    auto pair_I = [&](std::size_t k) { return tuple_str({I.label(k / di), I.label(k % di)}); };

    r.check("axiom-2", "2-crossed module / 2) ∂₂{x,y} = Σ(x'▷_ad y')(∂₁(x'')▷S(y''))",
            first_mismatch(
                di * di,
                [&](std::size_t k) {
                    Vec u = eI(k / di), v = eI(k % di);
                    Vec rhs = sweedler_sum({{I, u, 2}, {I, v, 2}}, [&](const std::vector<Parts>& p) {
                        return I.mul(adjoint(I, eI(p[0][0]), eI(p[1][0])), aI(x.d1(p[0][1]), I.antipode(p[1][1])));
                    });
                    return Sides{x.d2(L(u, v)), rhs};
                },
                [&](std::size_t k, const Sides& s) { return Witness{pair_I(k), fI(s.lhs), fI(s.rhs)}; }));

    r.check("axiom-3", "2-crossed module / 3) {∂₂k,∂₂l} = Σ(k▷_ad l')S(l'')",
            first_mismatch(
                dk * dk,
                [&](std::size_t k) {
                    Vec a = eK(k / dk), b = eK(k % dk);
                    Vec rhs = sweedler_sum({{K, b, 2}}, [&](const std::vector<Parts>& p) {
                        return K.mul(adjoint(K, a, eK(p[0][0])), K.antipode(p[0][1]));
                    });
                    return Sides{L(x.d2(a), x.d2(b)), rhs};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({K.label(k / dk), K.label(k % dk)}), fK(s.lhs), fK(s.rhs)};
                }));

    auto triple_I = [&](std::size_t k) {
        auto ix = digits(k, {di, di, di});
        return tuple_str({I.label(ix[0]), I.label(ix[1]), I.label(ix[2])});
    };

    r.check("axiom-4", "2-crossed module / 4) {x,yz} = Σ{x',y'}((∂₁(x'')▷y'')▷'{x''',z})",
            first_mismatch(
                di * di * di,
                [&](std::size_t k) {
                    auto ix = digits(k, {di, di, di});
                    Vec u = eI(ix[0]), v = eI(ix[1]), w = eI(ix[2]);
                    Vec rhs = sweedler_sum({{I, u, 3}, {I, v, 2}}, [&](const std::vector<Parts>& p) {
                        Vec moved = aI(x.d1(p[0][1]), eI(p[1][1]));
                        return K.mul(L(eI(p[0][0]), eI(p[1][0])), dact.act(moved, L(eI(p[0][2]), w)));
                    });
                    return Sides{L(u, I.mul(v, w)), rhs};
                },
                [&](std::size_t k, const Sides& s) { return Witness{triple_I(k), fK(s.lhs), fK(s.rhs)}; }));

    r.check("axiom-5", "2-crossed module / 5) {xy,z} = Σ{x',y'▷_ad z'}(∂₁(x'')▷{y'',z''})",
            first_mismatch(
                di * di * di,
                [&](std::size_t k) {
                    auto ix = digits(k, {di, di, di});
                    Vec u = eI(ix[0]), v = eI(ix[1]), w = eI(ix[2]);
                    Vec rhs = sweedler_sum({{I, u, 2}, {I, v, 2}, {I, w, 2}}, [&](const std::vector<Parts>& p) {
                        Vec left = L(eI(p[0][0]), adjoint(I, eI(p[1][0]), eI(p[2][0])));
                        return K.mul(left, aK(x.d1(p[0][1]), L(eI(p[1][1]), eI(p[2][1]))));
                    });
                    return Sides{L(I.mul(u, v), w), rhs};
                },
                [&](std::size_t k, const Sides& s) { return Witness{triple_I(k), fK(s.lhs), fK(s.rhs)}; }));

    r.check("axiom-6", "2-crossed module / 6) Σ{∂₂k',x'}{x'',∂₂k''} = Σk'(∂₁(x)▷S(k''))",
            first_mismatch(
                dk * di,
                [&](std::size_t k) {
                    Vec a = eK(k / di), u = eI(k % di);
                    Vec lhs = sweedler_sum({{K, a, 2}, {I, u, 2}}, [&](const std::vector<Parts>& p) {
                        return K.mul(L(x.d2(p[0][0]), eI(p[1][0])), L(eI(p[1][1]), x.d2(p[0][1])));
                    });
                    Vec rhs = sweedler_sum({{K, a, 2}}, [&](const std::vector<Parts>& p) {
                        return K.mul(eK(p[0][0]), aK(x.d1(u), K.antipode(p[0][1])));
                    });
                    return Sides{lhs, rhs};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({K.label(k / di), I.label(k % di)}), fK(s.lhs), fK(s.rhs)};
                }));

    r.merge(verify_xmod(HopfXMod{K, I, x.d2, dact}, XModMode::crossed), "derived-xmod");
    r.merge(verify_xmod(HopfXMod{I, H, x.d1, x.on_I}, XModMode::precrossed), "d1-precrossed");
    return r;
}

Hopf2XMod from_precrossed(const HopfXMod& x)
{
    Report pre = verify_xmod(x, XModMode::precrossed);
    if (!pre.ok()) throw PreconditionError("not a precrossed module: " + first_failure_text(pre));
    const HopfAlgebra &I = x.I, &H = x.H;
    const Field F = I.field();
    const Subspace ks = hopf_kernel(x.boundary);
    HopfAlgebra K = sub_hopf(I, ks);
    const auto& rows = ks.rows();
    const Index di = I.dim(), dk = K.dim(), dh = H.dim();

    ActionTensor on_K(H, K, Bilinear(Trilinear::build(F, dh, dk, dk, [&](Index a, Index k) {
                          return coords_or_throw(ks, x.action.act(H.basis(a), rows[k]), "action leaves HKer(∂)");
                      })));
    Trilinear lift = Trilinear::build(F, di, di, dk, [&](Index i, Index j) {
        Vec v = sweedler_sum({{I, I.basis(i), 2}, {I, I.basis(j), 2}}, [&](const std::vector<Parts>& p) {
            return I.mul(adjoint(I, I.basis(p[0][0]), I.basis(p[1][0])),
                         x.action.act(x.boundary(p[0][1]), I.antipode(p[1][1])));
        });
        return coords_or_throw(ks, v, "lifting of (" + I.label(i) + ", " + I.label(j) + ") escapes HKer(∂)");
    });
    return Hopf2XMod{K, I, H, HopfMorphism(K, I, ks.inclusion()), x.boundary, x.action, on_K, Bilinear(std::move(lift))};
}

Hopf2XMod trivial_2xmod(const HopfXMod& x)
{
    const HopfAlgebra &I = x.I, &H = x.H;
    const Field F = I.field();
    HopfAlgebra K = trivial_hopf(F);
    HopfMorphism d2(K, I, LinearMap(F, I.dim(), {I.one()}));
    Trilinear lift = Trilinear::build(F, I.dim(), I.dim(), 1,
                                      [&](Index i, Index j) { return scalar_vec(I.counit(i) * I.counit(j)); });
    return Hopf2XMod{K, I, H, d2, x.boundary, x.action, trivial_action(H, K), Bilinear(std::move(lift))};
}

// ---- X1 / G1 ------------------------------------------------------------------------

X1Result x1(const TruncatedSimplicialHopf& t)
{
    if (t.truncation() < 2) throw PreconditionError("x1 needs levels 0..2");
    MooreComplex m = moore_complex(t, MooreMode::both);
    if (!moore_length_at_most(m, 1)) throw PreconditionError("Moore complex is longer than one");
    const HopfAlgebra &H0 = t.levels[0], &H1 = t.levels[1];
    const Field F = H0.field();
    const Subspace& nh1 = m.terms[1];
    const auto& rows = nh1.rows();
    HopfAlgebra I = sub_hopf(H1, nh1);
    const Index di = I.dim(), dh = H0.dim();

    HopfMorphism boundary(I, H0, LinearMap::from_function(F, dh, di, [&](Index i) { return t.d(1, 1)(rows[i]); }));
    ActionTensor action(H0, I, Bilinear(Trilinear::build(F, dh, di, di, [&](Index a, Index i) {
                            return coords_or_throw(nh1, adjoint(H1, t.s(1, 0)(H0.basis(a)), rows[i]),
                                                   "s₀-conjugation leaves NH₁");
                        })));

    X1Result out{HopfXMod{I, H0, boundary, action}, nh1, {}};
    out.report.merge(m.report, "moore");
    const PeifferPair p{SurjIndex(2, {0}), SurjIndex(2, {1})};
    std::optional<Witness> w;
    for (std::size_t k = 0; k < di * di && !w; ++k) {
        const Vec &u = rows[k / di], &v = rows[k % di];
        Vec expected = H1.one().scaled(H1.counit(u) * H1.counit(v));
        try {
            Vec got = t.d(2, 2)(pairing(t, 2, p, u, v, m.terms[2]));
            if (!(got == expected)) w = Witness{tuple_str({format(H1, u), format(H1, v)}), format(H1, got), format(H1, expected)};
        } catch (const ClosureError& e) {
            w = Witness{tuple_str({format(H1, u), format(H1, v)}), e.what(), "an element of NH₂"};
        }
    }
    out.report.check("d2-F01-trivial", "length one / d₂F_{(0)(1)}(x,y) = ε(x)ε(y)1", w);
    out.report.merge(verify_xmod(out.xmod, XModMode::crossed), "xmod");
    return out;
}

TruncatedSimplicialHopf g1(const HopfXMod& x)
{
    Report pre = verify_xmod(x, XModMode::crossed);
    if (!pre.ok()) throw PreconditionError("not a crossed module: " + first_failure_text(pre));
    const HopfAlgebra &I = x.I, &H = x.H;
    const Field F = I.field();
    const Index di = I.dim(), dh = H.dim();
    HopfAlgebra H1 = smash_product(x.action);
    const Index dh1 = H1.dim();
    // (u (x) y) |> v = (d(u) y) |> v
    ActionTensor star(H1, I, Bilinear(Trilinear::build(F, dh1, di, di, [&](Index p, Index v) {
                          return x.action.act(H.mul(x.boundary(p / dh), H.basis(p % dh)), I.basis(v));
                      })));
    HopfAlgebra H2 = smash_product(star);

    auto map = [&](const HopfAlgebra& s, const HopfAlgebra& d, std::function<Vec(Index)> col) {
        return HopfMorphism(s, d, LinearMap::from_function(F, d.dim(), s.dim(), col));
    };
    auto h1 = [&](const Vec& u, const Vec& y) { return tensor(u, y, dh); };

    TruncatedSimplicialHopf t;
    t.levels = {H, H1, H2};
    t.faces.resize(3);
    t.degens.resize(3);
    t.faces[1] = {map(H1, H, [&](Index p) { return H.basis(p % dh).scaled(I.counit(p / dh)); }),
                  map(H1, H, [&](Index p) { return H.mul(x.boundary(p / dh), H.basis(p % dh)); })};
    t.degens[1] = {map(H, H1, [&](Index a) { return h1(I.one(), H.basis(a)); })};
    // H2 basis (u, v, y) at u * dh1 + v * dh + y
    t.faces[2] = {map(H2, H1, [&](Index q) { return H1.basis(q % dh1).scaled(I.counit(q / dh1)); }),
                  map(H2, H1,
                      [&](Index q) {
                          Index u = q / dh1, v = (q % dh1) / dh, y = q % dh;
                          return h1(I.mul(u, v), H.basis(y));
                      }),
                  map(H2, H1, [&](Index q) {
                      Index u = q / dh1, v = (q % dh1) / dh, y = q % dh;
                      return h1(I.basis(u), H.mul(x.boundary(v), H.basis(y)));
                  })};
    t.degens[2] = {map(H1, H2, [&](Index p) { return tensor(I.one(), H1.basis(p), dh1); }),
                   map(H1, H2, [&](Index p) { return tensor(I.basis(p / dh), h1(I.one(), H.basis(p % dh)), dh1); })};
    return t;
}

// ---- X2 / G2 ------------------------------------------------------------------------

X2Result x2(const TruncatedSimplicialHopf& t)
{
    if (t.truncation() < 3) throw PreconditionError("x2 needs levels 0..3");
    MooreComplex m = moore_complex(t, MooreMode::both);
    if (!moore_length_at_most(m, 2)) throw PreconditionError("Moore complex is longer than two");
    const HopfAlgebra &H0 = t.levels[0], &H1 = t.levels[1], &H2 = t.levels[2];
    const Field F = H0.field();
    const Subspace &nh1 = m.terms[1], &nh2 = m.terms[2];
    const auto &r1 = nh1.rows(), &r2 = nh2.rows();
    HopfAlgebra I = sub_hopf(H1, nh1);
    HopfAlgebra K = sub_hopf(H2, nh2);
    const Index dh = H0.dim(), di = I.dim(), dk = K.dim();
    const HopfMorphism &s0 = t.s(2, 0), &s1 = t.s(2, 1);

    HopfMorphism d1(I, H0, LinearMap::from_function(F, dh, di, [&](Index i) { return t.d(1, 1)(r1[i]); }));
    HopfMorphism d2(K, I, LinearMap::from_function(F, di, dk, [&](Index k) {
                        return coords_or_throw(nh1, t.d(2, 2)(r2[k]), "d₂ leaves NH₁");
                    }));
    ActionTensor on_I(H0, I, Bilinear(Trilinear::build(F, dh, di, di, [&](Index a, Index i) {
                          return coords_or_throw(nh1, adjoint(H1, t.s(1, 0)(H0.basis(a)), r1[i]),
                                                 "s₀-conjugation leaves NH₁");
                      })));
    ActionTensor on_K(H0, K, Bilinear(Trilinear::build(F, dh, dk, dk, [&](Index a, Index k) {
                          return coords_or_throw(nh2, adjoint(H2, s1(t.s(1, 0)(H0.basis(a))), r2[k]),
                                                 "s₁s₀-conjugation leaves NH₂");
                      })));

    auto lift_ambient = [&](const Vec& u, const Vec& v) {
        return sweedler_sum({{H1, u, 2}, {H1, v, 2}}, [&](const std::vector<Parts>& p) {
            return H2.mul(adjoint(H2, s1(p[0][0]), s1(p[1][0])),
                          H2.antipode(adjoint(H2, s0(p[0][1]), s1(p[1][1]))));
        });
    };
    std::vector<Vec> lift_values(di * di);
    kernels::for_each_index(di * di, [&](std::size_t k) { lift_values[k] = lift_ambient(r1[k / di], r1[k % di]); });
    Trilinear lift = Trilinear::build(F, di, di, dk, [&](Index i, Index j) {
        return coords_or_throw(nh2, lift_values[i * di + j],
                               "lifting of (" + format(H1, r1[i]) + ", " + format(H1, r1[j]) + ") escapes NH₂");
    });

    X2Result out{Hopf2XMod{K, I, H0, d2, d1, on_I, on_K, Bilinear(std::move(lift))}, nh1, nh2, {}};
    Report& r = out.report;
    r.merge(m.report, "moore");
    r.pass("lifting-in-NH2", "length two / {x,y} lies in NH₂", std::to_string(di * di) + " basis pairs");
    r.check("lifting-faces", "length two / d₀{x,y} = d₁{x,y} = ε(x)ε(y)1",
            first_mismatch(
                2 * di * di,
                [&](std::size_t k) {
                    std::size_t face = k / (di * di), pair = k % (di * di);
                    Vec e = H1.one().scaled(H1.counit(r1[pair / di]) * H1.counit(r1[pair % di]));
                    return Sides{t.d(2, face)(lift_values[pair]), e};
                },
                [&](std::size_t k, const Sides& s) {
                    std::size_t pair = k % (di * di);
                    return Witness{"d" + std::to_string(k / (di * di)) + " at " +
                                       tuple_str({format(H1, r1[pair / di]), format(H1, r1[pair % di])}),
                                   format(H1, s.lhs), format(H1, s.rhs)};
                }));
    r.check("cond5", "length two / s₁s₀∂₁(x)▷_ad k = s₀(x)▷_ad k on NH₂",
            first_mismatch(
                di * dk,
                [&](std::size_t k) {
                    const Vec &u = r1[k / dk], &v = r2[k % dk];
                    return Sides{adjoint(H2, s1(t.s(1, 0)(t.d(1, 1)(u))), v), adjoint(H2, s0(u), v)};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({format(H1, r1[k / dk]), format(H2, r2[k % dk])}), format(H2, s.lhs),
                                   format(H2, s.rhs)};
                }));
    r.merge(verify_2xmod(out.xmod), "2xmod");
    return out;
}

namespace {

// Index helpers for the levels built by g2. KI = K (x)_rho' I at k*dI + x,
// H1 = I (x)_rho H at y*dH + a, H2 = KI (x)_* H1, A = K (x)_star KI,
// H3 = A (x)_bullet H2.
struct G2Dims {
    Index dk, di, dh;
    Index ki() const { return dk * di; }
    Index h1() const { return di * dh; }
    Index h2() const { return ki() * h1(); }
    Index a() const { return dk * ki(); }
};

}  // namespace

TruncatedSimplicialHopf g2(const Hopf2XMod& x)
{
    Report pre = verify_2xmod(x);
    if (!pre.ok()) throw PreconditionError("not a 2-crossed module: " + first_failure_text(pre));
    const HopfAlgebra &K = x.K, &I = x.I, &H = x.H;
    const Field F = K.field();
    const G2Dims D{K.dim(), I.dim(), H.dim()};
    const Index dk = D.dk, di = D.di, dh = D.dh, dki = D.ki(), dh1 = D.h1(), dh2 = D.h2();

    auto eK = [&](Index i) { return K.basis(i); };
    auto eI = [&](Index i) { return I.basis(i); };
    auto eH = [&](Index i) { return H.basis(i); };
    auto aI = [&](const Vec& a, const Vec& v) { return x.on_I.act(a, v); };
    auto aK = [&](const Vec& a, const Vec& v) { return x.on_K.act(a, v); };
    auto L = [&](const Vec& u, const Vec& v) { return x.lift.apply(u, v); };
    auto SK = [&](const Vec& v) { return K.antipode(v); };
    const ActionTensor dact = derived_action(x);

    auto h1 = [&](const Vec& y, const Vec& a) { return tensor(y, a, dh); };
    auto ki = [&](const Vec& k, const Vec& v) { return tensor(k, v, di); };
    auto h2 = [&](const Vec& k, const Vec& v, const Vec& y, const Vec& a) { return tensor(ki(k, v), h1(y, a), dh1); };
    auto a3 = [&](const Vec& l, const Vec& m, const Vec& z) { return tensor(l, ki(m, z), dki); };

    HopfAlgebra KI = smash_product(dact);
    HopfAlgebra H1 = smash_product(x.on_I);

    // (y (x) a) |>_* (k (x) v)
    ActionTensor star_act(H1, KI, Bilinear(Trilinear::build(F, dh1, dki, dki, [&](Index p, Index q) {
                              Index y = p / dh, a = p % dh, k = q / di, v = q % di;
                              return sweedler_sum({{I, eI(y), 3}, {H, eH(a), 3}, {I, eI(v), 2}},
                                                  [&](const std::vector<Parts>& s) {
                                                      const Parts &ys = s[0], &as = s[1], &vs = s[2];
                                                      Vec kp = K.mul(aK(H.mul(x.d1(ys[0]), eH(as[0])), eK(k)),
                                                                     SK(L(eI(ys[1]), aI(eH(as[1]), eI(vs[0])))));
                                                      Vec ip = adjoint(I, eI(ys[2]), aI(eH(as[2]), eI(vs[1])));
                                                      return ki(kp, ip);
                                                  });
                          })));
    HopfAlgebra H2 = smash_product(star_act);

    // (k (x) v) |>_star l = k |>_ad (v |>' l)
    ActionTensor star_K(KI, K, Bilinear(Trilinear::build(F, dki, dk, dk, [&](Index q, Index l) {
                            return adjoint(K, eK(q / di), dact.act(q % di, l));
                        })));
    HopfAlgebra A = smash_product(star_K);

    // Applies op to every basis term (l, m, z) of w.
    auto on_terms = [&](const Vec& w, auto&& op) {
        VecBuilder vb;
        for (const auto& t : w.terms()) vb.add(op(t.index / dki, (t.index % dki) / di, t.index % di), t.coef);
        return vb.build();
    };
    auto dagger2 = [&](Index a, const Vec& w) {
        return on_terms(w, [&](Index l, Index m, Index z) {
            return sweedler_sum({{H, eH(a), 3}}, [&](const std::vector<Parts>& s) {
                return a3(aK(eH(s[0][0]), eK(l)), aK(eH(s[0][1]), eK(m)), aI(eH(s[0][2]), eI(z)));
            });
        });
    };
    auto dagger1 = [&](Index y, const Vec& w) {
        return on_terms(w, [&](Index l, Index m, Index z) {
            return sweedler_sum({{I, eI(y), 4}, {I, eI(z), 2}}, [&](const std::vector<Parts>& s) {
                const Parts &ys = s[0], &zs = s[1];
                return a3(aK(x.d1(ys[0]), eK(l)), K.mul(aK(x.d1(ys[1]), eK(m)), SK(L(eI(ys[2]), eI(zs[0])))),
                          adjoint(I, eI(ys[3]), eI(zs[1])));
            });
        });
    };
    auto ddag2 = [&](Index v, const Vec& w) {
        return on_terms(w, [&](Index l, Index m, Index z) {
            return sweedler_sum({{I, eI(v), 4}, {K, eK(m), 2}, {I, eI(z), 2}}, [&](const std::vector<Parts>& s) {
                const Parts &vs = s[0], &ms = s[1], &zs = s[2];
                Vec lp = K.mul(aK(x.d1(vs[0]), eK(l)), SK(L(eI(vs[1]), I.mul(x.d2(ms[0]), eI(zs[0])))));
                return a3(lp, dact.act(eI(vs[2]), eK(ms[1])), adjoint(I, eI(vs[3]), eI(zs[1])));
            });
        });
    };
    auto ddag1 = [&](Index k, const Vec& w) {
        return on_terms(w, [&](Index l, Index m, Index z) {
            return sweedler_sum({{K, eK(k), 3}, {K, eK(m), 2}, {I, eI(z), 3}}, [&](const std::vector<Parts>& s) {
                const Parts &ks = s[0], &ms = s[1], &zs = s[2];
                Vec lp = K.mul(eK(l), SK(L(x.d2(ks[0]), I.mul(x.d2(ms[0]), eI(zs[0])))));
                Vec mp = K.mul(adjoint(K, eK(ks[1]), eK(ms[1])), L(x.d2(ks[2]), eI(zs[1])));
                return a3(lp, mp, eI(zs[2]));
            });
        });
    };
    // (k, v, y, a) |>_bullet w = ddag1(k) ddag2(v) dagger1(y) dagger2(a) w
    ActionTensor bullet(H2, A, Bilinear(Trilinear::build(F, dh2, D.a(), D.a(), [&](Index q, Index w) {
                            auto ix = digits(q, {dk, di, di, dh});
                            return ddag1(ix[0], ddag2(ix[1], dagger1(ix[2], dagger2(ix[3], A.basis(w)))));
                        })));
    HopfAlgebra H3 = smash_product(bullet);

    auto map = [&](const HopfAlgebra& s, const HopfAlgebra& d, std::function<Vec(Index)> col) {
        return HopfMorphism(s, d, LinearMap::from_function(F, d.dim(), s.dim(), col));
    };
    const Vec oneK = K.one(), oneI = I.one();

    TruncatedSimplicialHopf t;
    t.levels = {H, H1, H2, H3};
    t.faces.resize(4);
    t.degens.resize(4);
    t.faces[1] = {map(H1, H, [&](Index p) { return eH(p % dh).scaled(I.counit(p / dh)); }),
                  map(H1, H, [&](Index p) { return H.mul(x.d1(p / dh), eH(p % dh)); })};
    t.degens[1] = {map(H, H1, [&](Index a) { return h1(oneI, eH(a)); })};

    t.faces[2] = {map(H2, H1,
                      [&](Index q) {
                          auto ix = digits(q, {dk, di, di, dh});
                          return H1.basis(q % dh1).scaled(K.counit(ix[0]) * I.counit(ix[1]));
                      }),
                  map(H2, H1,
                      [&](Index q) {
                          auto ix = digits(q, {dk, di, di, dh});
                          return h1(I.mul(ix[1], ix[2]), eH(ix[3])).scaled(K.counit(ix[0]));
                      }),
                  map(H2, H1, [&](Index q) {
                      auto ix = digits(q, {dk, di, di, dh});
                      return h1(I.mul(x.d2(ix[0]), eI(ix[1])), H.mul(x.d1(ix[2]), eH(ix[3])));
                  })};
    t.degens[2] = {map(H1, H2, [&](Index p) { return h2(oneK, oneI, eI(p / dh), eH(p % dh)); }),
                   map(H1, H2, [&](Index p) { return h2(oneK, eI(p / dh), oneI, eH(p % dh)); })};

    // H3 basis (l, m, z, k, v, y, a)
    auto digits7 = [&](Index q) { return digits(q, {dk, dk, di, dk, di, di, dh}); };
    t.faces[3] = {map(H3, H2,
                      [&](Index q) {
                          auto ix = digits7(q);
                          return H2.basis(q % dh2).scaled(K.counit(ix[0]) * K.counit(ix[1]) * I.counit(ix[2]));
                      }),
                  map(H3, H2,
                      [&](Index q) {
                          auto ix = digits7(q);
                          Vec v = sweedler_sum({{I, eI(ix[2]), 2}}, [&](const std::vector<Parts>& s) {
                              return h2(K.mul(eK(ix[1]), dact.act(eI(s[0][0]), eK(ix[3]))), I.mul(s[0][1], ix[4]),
                                        eI(ix[5]), eH(ix[6]));
                          });
                          return v.scaled(K.counit(ix[0]));
                      }),
                  map(H3, H2,
                      [&](Index q) {
                          auto ix = digits7(q);
                          return h2(K.mul(ix[0], ix[1]), eI(ix[2]), I.mul(ix[4], ix[5]), eH(ix[6])).scaled(K.counit(ix[3]));
                      }),
                  map(H3, H2, [&](Index q) {
                      auto ix = digits7(q);
                      return h2(eK(ix[0]), I.mul(x.d2(ix[1]), eI(ix[2])), I.mul(x.d2(ix[3]), eI(ix[4])),
                                H.mul(x.d1(ix[5]), eH(ix[6])));
                  })};
    t.degens[3] = {map(H2, H3, [&](Index q) { return tensor(a3(oneK, oneK, oneI), H2.basis(q), dh2); }),
                   map(H2, H3,
                       [&](Index q) {
                           auto ix = digits(q, {dk, di, di, dh});
                           return tensor(a3(oneK, eK(ix[0]), eI(ix[1])), h2(oneK, oneI, eI(ix[2]), eH(ix[3])), dh2);
                       }),
                   map(H2, H3, [&](Index q) {
                       auto ix = digits(q, {dk, di, di, dh});
                       return tensor(a3(eK(ix[0]), oneK, eI(ix[1])), h2(oneK, eI(ix[2]), oneI, eH(ix[3])), dh2);
                   })};
    return t;
}

// ---- round trips ------------------------------------------------------------------

namespace {

std::optional<Witness> subspace_witness(const std::string& name, const Subspace& got, const Subspace& want)
{
    if (got == want) return std::nullopt;
    return Witness{name, "dim " + std::to_string(got.dim()), "canonical image of dim " + std::to_string(want.dim())};
}

// Coordinates of the canonical insertions inside nh, as a map source -> nh.
LinearMap insertion(const Subspace& nh, const std::vector<Vec>& images)
{
    return LinearMap::from_function(nh.field(), nh.dim(), images.size(), [&](Index i) { return nh.coordinates(images[i]); });
}

void check_insertion(Report& r, const std::string& name, const HopfAlgebra& src, const HopfAlgebra& dst,
                     const LinearMap& c)
{
    r.merge(verify_morphism(HopfMorphism(src, dst, c)), name);
    std::optional<Witness> w;
    if (src.dim() != dst.dim() || rank(c) != src.dim())
        w = Witness{name, "rank " + std::to_string(rank(c)), "dim " + std::to_string(src.dim())};
    r.check(name + "-bijective", "round trip / canonical insertion is bijective", w);
}

}  // namespace

Report roundtrip_check(const HopfXMod& x)
{
    const HopfAlgebra &I = x.I, &H = x.H;
    const Index di = I.dim(), dh = H.dim();
    Report r;
    TruncatedSimplicialHopf t = g1(x);
    X1Result back = x1(t);
    r.merge(back.report, "x1");

    std::vector<Vec> ins;
    for (Index u = 0; u < di; ++u) ins.push_back(tensor(I.basis(u), H.one(), dh));
    const Subspace canon = Subspace::span(I.field(), t.levels[1].dim(), ins);
    auto w = subspace_witness("NH_1", back.nh1, canon);
    r.check("nh1-canonical", "round trip / NH₁ = {u⊗1}", w);
    if (w) return r;
    const LinearMap c = insertion(back.nh1, ins);
    check_insertion(r, "insertion-I", I, back.xmod.I, c);
    const HopfAlgebra& I2 = back.xmod.I;

    r.check("boundary", "round trip / ∂ agrees along u↦u⊗1",
            first_mismatch(
                di, [&](std::size_t u) { return Sides{back.xmod.boundary(c.column(u)), x.boundary(u)}; },
                [&](std::size_t u, const Sides& s) { return Witness{I.label(u), format(H, s.lhs), format(H, s.rhs)}; }));
    r.check("action", "round trip / action agrees along u↦u⊗1",
            first_mismatch(
                dh * di,
                [&](std::size_t k) {
                    Index a = k / di, u = k % di;
                    return Sides{back.xmod.action.act(H.basis(a), c.column(u)), c.apply(x.action.act(a, u))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({H.label(k / di), I.label(k % di)}), format(I2, s.lhs), format(I2, s.rhs)};
                }));
    return r;
}

Report roundtrip_check(const Hopf2XMod& x)
{
    const HopfAlgebra &K = x.K, &I = x.I, &H = x.H;
    const Index dk = K.dim(), di = I.dim(), dh = H.dim();
    const Index dh1 = di * dh;
    Report r;
    TruncatedSimplicialHopf t = g2(x);
    X2Result back = x2(t);
    r.merge(back.report, "x2");

    std::vector<Vec> ins_I, ins_K;
    for (Index u = 0; u < di; ++u) ins_I.push_back(tensor(I.basis(u), H.one(), dh));
    for (Index k = 0; k < dk; ++k)
        ins_K.push_back(tensor(tensor(K.basis(k), I.one(), di), tensor(I.one(), H.one(), dh), dh1));
    const Subspace canon_I = Subspace::span(I.field(), t.levels[1].dim(), ins_I);
    const Subspace canon_K = Subspace::span(I.field(), t.levels[2].dim(), ins_K);
    auto w1 = subspace_witness("NH_1", back.nh1, canon_I);
    auto w2 = subspace_witness("NH_2", back.nh2, canon_K);
    r.check("nh1-canonical", "round trip / NH₁ = {u⊗1}", w1);
    r.check("nh2-canonical", "round trip / NH₂ = {k⊗1⊗1⊗1}", w2);
    if (w1 || w2) return r;
    const LinearMap cI = insertion(back.nh1, ins_I), cK = insertion(back.nh2, ins_K);
    check_insertion(r, "insertion-I", I, back.xmod.I, cI);
    check_insertion(r, "insertion-K", K, back.xmod.K, cK);
    const Hopf2XMod& y = back.xmod;

    r.check("d1", "round trip / ∂₁ agrees along the insertions",
            first_mismatch(
                di, [&](std::size_t u) { return Sides{y.d1(cI.column(u)), x.d1(u)}; },
                [&](std::size_t u, const Sides& s) { return Witness{I.label(u), format(H, s.lhs), format(H, s.rhs)}; }));
    r.check("d2", "round trip / ∂₂ agrees along the insertions",
            first_mismatch(
                dk, [&](std::size_t k) { return Sides{y.d2(cK.column(k)), cI.apply(x.d2(k))}; },
                [&](std::size_t k, const Sides& s) { return Witness{K.label(k), format(y.I, s.lhs), format(y.I, s.rhs)}; }));
    r.check("action-I", "round trip / action on I agrees along the insertions",
            first_mismatch(
                dh * di,
                [&](std::size_t k) {
                    Index a = k / di, u = k % di;
                    return Sides{y.on_I.act(H.basis(a), cI.column(u)), cI.apply(x.on_I.act(a, u))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({H.label(k / di), I.label(k % di)}), format(y.I, s.lhs), format(y.I, s.rhs)};
                }));
    r.check("action-K", "round trip / action on K agrees along the insertions",
            first_mismatch(
                dh * dk,
                [&](std::size_t k) {
                    Index a = k / dk, l = k % dk;
                    return Sides{y.on_K.act(H.basis(a), cK.column(l)), cK.apply(x.on_K.act(a, l))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({H.label(k / dk), K.label(k % dk)}), format(y.K, s.lhs), format(y.K, s.rhs)};
                }));
    r.check("lifting", "round trip / Peiffer lifting agrees along the insertions",
            first_mismatch(
                di * di,
                [&](std::size_t k) {
                    Index u = k / di, v = k % di;
                    return Sides{y.lift.apply(cI.column(u), cI.column(v)), cK.apply(x.lift.value(u, v))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{tuple_str({I.label(k / di), I.label(k % di)}), format(y.K, s.lhs), format(y.K, s.rhs)};
                }));
    return r;
}

Report roundtrip_check(const TruncatedSimplicialHopf& t, int level)
{
    if (level != 1 && level != 2) throw PreconditionError("round trip level must be 1 or 2");
    Report r;
    TruncatedSimplicialHopf g;
    if (level == 1) {
        X1Result x = x1(t);
        r.merge(x.report, "x1");
        g = g1(x.xmod);
    } else {
        X2Result x = x2(t);
        r.merge(x.report, "x2");
        g = g2(x.xmod);
    }
    std::optional<Witness> w;
    const std::size_t top = std::min(t.truncation(), g.truncation());
    for (std::size_t k = 0; k <= top && !w; ++k)
        if (t.levels[k].dim() != g.levels[k].dim())
            w = Witness{"level " + std::to_string(k), "dim " + std::to_string(g.levels[k].dim()),
                        "dim " + std::to_string(t.levels[k].dim())};
    r.check("level-dimensions", "round trip / G(X(t)) has the level dimensions of t", w);
    r.merge(verify_simplicial(g), "simplicial");
    return r;
}

// ---- Gl / Prim ----------------------------------------------------------------------

Group2XMod gl_2xmod(const Hopf2XMod& x)
{
    GroupLikes gk = group_likes(x.K), gi = group_likes(x.I), gh = group_likes(x.H);
    auto find = [](const GroupLikes& g, const Vec& v, const std::string& what) {
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            if (g.elements[i] == v) return i;
        throw ClosureError(what + " is not group-like");
    };
    FiniteGroup L(gk.table, gk.labels), E(gi.table, gi.labels), G(gh.table, gh.labels);
    Group2XMod out{L, E, G, {}, {}, {G, L, {}}, {G, E, {}}, {}};
    for (const auto& k : gk.elements) out.d2.push_back(find(gi, x.d2(k), "∂₂ of a group-like"));
    for (const auto& e : gi.elements) out.d1.push_back(find(gh, x.d1(e), "∂₁ of a group-like"));
    for (const auto& g : gh.elements) {
        std::vector<std::size_t> pl, pe;
        for (const auto& k : gk.elements) pl.push_back(find(gk, x.on_K.act(g, k), "action on K"));
        for (const auto& e : gi.elements) pe.push_back(find(gi, x.on_I.act(g, e), "action on I"));
        out.on_L.perm.push_back(std::move(pl));
        out.on_E.perm.push_back(std::move(pe));
    }
    for (const auto& e : gi.elements) {
        std::vector<std::size_t> row;
        for (const auto& f : gi.elements) row.push_back(find(gk, x.lift.apply(e, f), "Peiffer lifting"));
        out.lift.push_back(std::move(row));
    }
    return out;
}

Lie2XMod prim_2xmod(const Hopf2XMod& x)
{
    Primitives pk = primitives(x.K), pi = primitives(x.I), ph = primitives(x.H);
    auto lie = [](const HopfAlgebra& h, const Primitives& p) {
        std::vector<std::string> labels;
        for (const auto& row : p.space.rows()) labels.push_back(format(h, row));
        LieAlgebra g(p.bracket, std::move(labels));
        if (!verify_lie(g).ok()) throw ClosureError("primitive bracket is not a Lie bracket");
        return g;
    };
    const Field F = x.K.field();
    const auto &rk = pk.space.rows(), &ri = pi.space.rows(), &rh = ph.space.rows();
    const Index nk = rk.size(), ni = ri.size(), nh = rh.size();
    LinearMap d2 = LinearMap::from_function(F, ni, nk, [&](Index k) {
        return coords_or_throw(pi.space, x.d2(rk[k]), "∂₂ of a primitive is not primitive");
    });
    LinearMap d1 = LinearMap::from_function(F, nh, ni, [&](Index i) {
        return coords_or_throw(ph.space, x.d1(ri[i]), "∂₁ of a primitive is not primitive");
    });
    Trilinear on_l = Trilinear::build(F, nh, nk, nk, [&](Index a, Index k) {
        return coords_or_throw(pk.space, x.on_K.act(rh[a], rk[k]), "action on K leaves the primitives");
    });
    Trilinear on_e = Trilinear::build(F, nh, ni, ni, [&](Index a, Index i) {
        return coords_or_throw(pi.space, x.on_I.act(rh[a], ri[i]), "action on I leaves the primitives");
    });
    Trilinear lift = Trilinear::build(F, ni, ni, nk, [&](Index i, Index j) {
        return coords_or_throw(pk.space, x.lift.apply(ri[i], ri[j]), "Peiffer lifting leaves the primitives");
    });
    return Lie2XMod{lie(x.K, pk), lie(x.I, pi), lie(x.H, ph), d2, d1, on_l, on_e, lift};
}

// ---- expansion identities ---------------------------------------------------------------

Report antipode_cancellation(const HopfAlgebra& a, const HopfAlgebra& b, const HopfAlgebra& target, const Bilinear& f,
                             const Bilinear& g)
{
    const Index da = a.dim(), db = b.dim();
    const std::string anchor = "antipode cancellation / Σf(x'⊗y')S(g(x''⊗y'')) = ε(x)ε(y)1 ⇒ f = g";
    auto where = [&](std::size_t k) { return tuple_str({a.label(k / db), b.label(k % db)}); };
    Report r;
    auto hyp = first_mismatch(
        da * db,
        [&](std::size_t k) {
            Index i = k / db, j = k % db;
            Vec lhs = sweedler_sum({{a, a.basis(i), 2}, {b, b.basis(j), 2}}, [&](const std::vector<Parts>& p) {
                return target.mul(f.value(p[0][0], p[1][0]), target.antipode(g.value(p[0][1], p[1][1])));
            });
            return Sides{lhs, target.one().scaled(a.counit(i) * b.counit(j))};
        },
        [&](std::size_t k, const Sides& s) { return Witness{where(k), format(target, s.lhs), format(target, s.rhs)}; });
    if (hyp) {
        r.skip("hypothesis", anchor, "unmet at " + hyp->tuple + ": " + hyp->lhs + " instead of " + hyp->rhs);
        r.skip("conclusion", anchor, "hypothesis unmet");
        return r;
    }
    r.pass("hypothesis", anchor, std::to_string(da * db) + " basis pairs");
    r.check("conclusion", anchor,
            first_mismatch(
                da * db, [&](std::size_t k) { return Sides{f.value(k / db, k % db), g.value(k / db, k % db)}; },
                [&](std::size_t k, const Sides& s) {
                    return Witness{where(k), format(target, s.lhs), format(target, s.rhs)};
                }));
    return r;
}

namespace {

// Everything the expansions need, evaluated in the ambient levels H_1, H_2.
struct Ambient {
    const TruncatedSimplicialHopf& t;
    const X2Result& x;
    ActionTensor dact;

    const HopfAlgebra& H1() const { return t.levels[1]; }
    const HopfAlgebra& H2() const { return t.levels[2]; }
    const HopfAlgebra& I() const { return x.xmod.I; }
    Vec n1(Index i) const { return x.nh1.rows()[i]; }
    Vec n2(Index i) const { return x.nh2.rows()[i]; }
    Vec s0(const Vec& v) const { return t.s(2, 0)(v); }
    Vec s1(const Vec& v) const { return t.s(2, 1)(v); }
    Vec s0d1(const Vec& v) const { return t.s(1, 0)(t.d(1, 1)(v)); }
    Vec d1(const Vec& v) const { return t.d(1, 1)(v); }
    Vec ad1(const Vec& a, const Vec& b) const { return adjoint(H1(), a, b); }
    Vec ad2(const Vec& a, const Vec& b) const { return adjoint(H2(), a, b); }
    Vec m1(const Vec& a, const Vec& b) const { return H1().mul(a, b); }
    Vec m2(const Vec& a, const Vec& b) const { return H2().mul(a, b); }
    Vec S2(const Vec& a) const { return H2().antipode(a); }
    // (s1 a |>_ad s1 b) or its s0 variant
    Vec p11(const Vec& a, const Vec& b) const { return ad2(s1(a), s1(b)); }
    Vec p01(const Vec& a, const Vec& b) const { return ad2(s0(a), s1(b)); }

    // Structures of the extracted 2-crossed module, moved to ambient vectors.
    Vec lift(const Vec& a, const Vec& b) const
    {
        return ambient(x.nh2, x.xmod.lift.apply(x.nh1.coordinates(a), x.nh1.coordinates(b)));
    }
    Vec derived(const Vec& a, const Vec& k) const
    {
        return ambient(x.nh2, dact.act(x.nh1.coordinates(a), x.nh2.coordinates(k)));
    }
    Vec on_I(const Vec& h, const Vec& y) const { return ambient(x.nh1, x.xmod.on_I.act(h, x.nh1.coordinates(y))); }
    Vec on_K(const Vec& h, const Vec& k) const { return ambient(x.nh2, x.xmod.on_K.act(h, x.nh2.coordinates(k))); }
    // u |>' k for u in H_1 outside NH_1, read as s1(u) |>_ad k.
    Vec ext(const Vec& u, const Vec& k) const { return ad2(s1(u), k); }
};

using Line = std::function<Vec(const std::vector<Index>&)>;

// Evaluates every line on every tuple and records, per consecutive pair of
// lines, the first tuple where they differ.
void check_lines(Report& r, const std::string& prefix, const std::string& anchor, std::size_t count,
                 std::initializer_list<std::size_t> radices, const std::vector<Line>& lines,
                 const std::function<std::string(const std::vector<Index>&)>& where, const HopfAlgebra& target)
{
    const std::size_t nl = lines.size();
    std::vector<std::vector<std::optional<Vec>>> values(count, std::vector<std::optional<Vec>>(nl));
    std::vector<std::vector<std::string>> errors(count, std::vector<std::string>(nl));
    std::vector<std::size_t> rad(radices);
    kernels::for_each_index(count, [&](std::size_t k) {
        std::vector<Index> ix(rad.size());
        std::size_t rest = k;
        for (std::size_t p = rad.size(); p-- > 0;) {
            ix[p] = rest % rad[p];
            rest /= rad[p];
        }
        for (std::size_t l = 0; l < nl; ++l) {
            try {
                values[k][l] = lines[l](ix);
            } catch (const Error& e) {
                errors[k][l] = e.what();
            }
        }
    });
    for (std::size_t l = 1; l < nl; ++l) {
        std::optional<Witness> w;
        for (std::size_t k = 0; k < count && !w; ++k) {
            const auto &a = values[k][l - 1], &b = values[k][l];
            if (a && b && *a == *b) continue;
            std::vector<Index> ix(rad.size());
            std::size_t rest = k;
            for (std::size_t p = rad.size(); p-- > 0;) {
                ix[p] = rest % rad[p];
                rest /= rad[p];
            }
            w = Witness{where(ix), a ? format(target, *a) : errors[k][l - 1], b ? format(target, *b) : errors[k][l]};
        }
        r.check(prefix + "-" + std::to_string(l) + "-" + std::to_string(l + 1),
                anchor + ", line " + std::to_string(l) + " = line " + std::to_string(l + 1), w,
                std::to_string(count) + " basis tuples");
    }
}

}  // namespace

Report appendix_checks(const TruncatedSimplicialHopf& t)
{
    const X2Result xr = x2(t);
    const Ambient c{t, xr, derived_action(xr.xmod)};
    const HopfAlgebra &I = c.I(), &K = xr.xmod.K, &H1 = c.H1(), &H2 = c.H2();
    const Field F = I.field();
    const Index di = I.dim(), dk = K.dim();
    Report r;
    r.merge(xr.report, "x2");

    // Antipode cancellation on the two identities the proofs obtain from it.
    auto bil = [&](auto&& f) {
        return Bilinear(F, di, dk, H2.dim(), [&c, f](Index i, Index k) { return f(c.n1(i), c.n2(k)); });
    };
    r.merge(antipode_cancellation(I, K, H2, bil([&c](const Vec& u, const Vec& k) { return c.derived(u, k); }),
                                  bil([&c](const Vec& u, const Vec& k) { return c.ad2(c.s1(u), k); })),
            "cancellation/derived-action");
    r.merge(antipode_cancellation(I, K, H2,
                                  bil([&c](const Vec& u, const Vec& k) { return c.ad2(c.s1(c.s0d1(u)), k); }),
                                  bil([&c](const Vec& u, const Vec& k) { return c.ad2(c.s0(u), k); })),
            "cancellation/cond5");

    auto sw = [&](Index i, std::size_t n) { return detail::SwVar{I, I.basis(i), n}; };
    auto n1 = [&](Index i) { return c.n1(i); };
    auto lbl1 = [&](Index i) { return format(H1, c.n1(i)); };

    // (d1(x) |> y) |>' k = (s0(x) |>_ad s1(y)) |>_ad k
    std::vector<Line> pre{
        [&](const std::vector<Index>& ix) { return c.derived(c.on_I(c.d1(n1(ix[0])), n1(ix[1])), c.n2(ix[2])); },
        [&](const std::vector<Index>& ix) { return c.derived(c.ad1(c.s0d1(n1(ix[0])), n1(ix[1])), c.n2(ix[2])); },
        [&](const std::vector<Index>& ix) {
            Vec inner = sweedler_sum({sw(ix[0], 2)}, [&](const std::vector<Parts>& p) {
                return c.m1(c.m1(c.s0d1(n1(p[0][0])), n1(ix[1])), H1.antipode(c.s0d1(n1(p[0][1]))));
            });
            return c.derived(inner, c.n2(ix[2]));
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2)}, [&](const std::vector<Parts>& p) {
                Vec inner = c.ext(c.s0d1(H1.antipode(n1(p[0][1]))), c.n2(ix[2]));
                return c.ext(c.s0d1(n1(p[0][0])), c.derived(n1(ix[1]), inner));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2)}, [&](const std::vector<Parts>& p) {
                Vec inner = c.ad2(c.s1(c.s0d1(H1.antipode(n1(p[0][1])))), c.n2(ix[2]));
                return c.ad2(c.s1(c.s0d1(n1(p[0][0]))), c.ad2(c.s1(n1(ix[1])), inner));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2)}, [&](const std::vector<Parts>& p) {
                Vec inner = c.ad2(c.s0(H1.antipode(n1(p[0][1]))), c.n2(ix[2]));
                return c.ad2(c.s0(n1(p[0][0])), c.ad2(c.s1(n1(ix[1])), inner));
            });
        },
        [&](const std::vector<Index>& ix) { return c.ad2(c.ad2(c.s0(n1(ix[0])), c.s1(n1(ix[1]))), c.n2(ix[2])); },
    };
    check_lines(r, "axiom-4-action", "axiom 4 expansion / derived action of ∂₁(x)▷y", di * di * dk, {di, di, dk}, pre,
                [&](const std::vector<Index>& ix) {
                    return tuple_str({lbl1(ix[0]), lbl1(ix[1]), format(H2, c.n2(ix[2]))});
                },
                H2);

    auto triple = [&](const std::vector<Index>& ix) { return tuple_str({lbl1(ix[0]), lbl1(ix[1]), lbl1(ix[2])}); };
    auto p11 = [&](Index a, Index b) { return c.p11(n1(a), n1(b)); };
    auto p01 = [&](Index a, Index b) { return c.p01(n1(a), n1(b)); };

    // {x, yz}
    std::vector<Line> four{
        [&](const std::vector<Index>& ix) { return c.lift(n1(ix[0]), c.m1(n1(ix[1]), n1(ix[2]))); },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2), sw(ix[1], 2), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                return c.m2(c.p11(n1(X[0]), c.m1(n1(Y[0]), n1(Z[0]))),
                            c.S2(c.p01(n1(X[1]), c.m1(n1(Y[1]), n1(Z[1])))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 4), sw(ix[1], 2), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                return c.m2(c.m2(p11(X[0], Y[0]), p11(X[1], Z[0])), c.S2(c.m2(p01(X[2], Y[1]), p01(X[3], Z[1]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 6), sw(ix[1], 4), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec v = c.m2(p11(X[0], Y[0]), c.S2(p01(X[1], Y[1])));
                v = c.m2(c.m2(v, p01(X[2], Y[2])), p11(X[3], Z[0]));
                return c.m2(v, c.S2(c.m2(p01(X[4], Y[3]), p01(X[5], Z[1]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 5), sw(ix[1], 3), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec v = c.m2(c.m2(c.lift(n1(X[0]), n1(Y[0])), p01(X[1], Y[1])), p11(X[2], Z[0]));
                return c.m2(v, c.S2(c.m2(p01(X[3], Y[2]), p01(X[4], Z[1]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 4), sw(ix[1], 2), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec inner = c.m2(p11(X[2], Z[0]), c.S2(p01(X[3], Z[1])));
                return c.m2(c.lift(n1(X[0]), n1(Y[0])), c.ad2(p01(X[1], Y[1]), inner));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 3), sw(ix[1], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1];
                return c.m2(c.lift(n1(X[0]), n1(Y[0])), c.ad2(p01(X[1], Y[1]), c.lift(n1(X[2]), n1(ix[2]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 3), sw(ix[1], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1];
                Vec moved = c.on_I(c.d1(n1(X[1])), n1(Y[1]));
                return c.m2(c.lift(n1(X[0]), n1(Y[0])), c.derived(moved, c.lift(n1(X[2]), n1(ix[2]))));
            });
        },
    };
    check_lines(r, "axiom-4", "axiom 4 expansion of {x,yz}", di * di * di, {di, di, di}, four, triple, H2);

    // {xy, z}
    auto xy = [&](Index a, Index b) { return c.m1(n1(a), n1(b)); };
    auto eps = [&](Index i) { return I.counit(i); };
    std::vector<Line> five{
        [&](const std::vector<Index>& ix) { return c.lift(xy(ix[0], ix[1]), n1(ix[2])); },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2), sw(ix[1], 2), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                return c.m2(c.p11(xy(X[0], Y[0]), n1(Z[0])), c.S2(c.p01(xy(X[1], Y[1]), n1(Z[1]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 3), sw(ix[1], 3), sw(ix[2], 3)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec mid = H2.one().scaled(eps(X[1]) * eps(Y[1]) * eps(Z[1]));
                return c.m2(c.m2(c.p11(xy(X[0], Y[0]), n1(Z[0])), mid), c.S2(c.p01(xy(X[2], Y[2]), n1(Z[2]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 3), sw(ix[1], 3), sw(ix[2], 3)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec mid = c.ad2(c.s0(n1(X[1])), H2.one().scaled(eps(Y[1]) * eps(Z[1])));
                return c.m2(c.m2(c.p11(xy(X[0], Y[0]), n1(Z[0])), mid), c.S2(c.p01(xy(X[2], Y[2]), n1(Z[2]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 3), sw(ix[1], 4), sw(ix[2], 4)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec mid = c.ad2(c.s0(n1(X[1])), c.m2(c.S2(p11(Y[1], Z[1])), p11(Y[2], Z[2])));
                return c.m2(c.m2(c.p11(xy(X[0], Y[0]), n1(Z[0])), mid), c.S2(c.p01(xy(X[2], Y[3]), n1(Z[3]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 4), sw(ix[1], 4), sw(ix[2], 4)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec v = c.m2(c.p11(xy(X[0], Y[0]), n1(Z[0])), c.ad2(c.s0(n1(X[1])), c.S2(p11(Y[1], Z[1]))));
                v = c.m2(v, c.ad2(c.s0(n1(X[2])), p11(Y[2], Z[2])));
                return c.m2(v, c.S2(c.p01(xy(X[3], Y[3]), n1(Z[3]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 4), sw(ix[1], 4), sw(ix[2], 4)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec v = c.m2(c.ad2(c.s1(n1(X[0])), p11(Y[0], Z[0])), c.ad2(c.s0(n1(X[1])), c.S2(p11(Y[1], Z[1]))));
                v = c.m2(v, c.ad2(c.s0(n1(X[2])), p11(Y[2], Z[2])));
                return c.m2(v, c.S2(c.p01(xy(X[3], Y[3]), n1(Z[3]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 4), sw(ix[1], 4), sw(ix[2], 4)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec v = c.m2(c.p11(n1(X[0]), c.ad1(n1(Y[0]), n1(Z[0]))),
                             c.S2(c.p01(n1(X[1]), c.ad1(n1(Y[1]), n1(Z[1])))));
                v = c.m2(v, c.ad2(c.s0(n1(X[2])), p11(Y[2], Z[2])));
                return c.m2(v, c.S2(c.p01(xy(X[3], Y[3]), n1(Z[3]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 3), sw(ix[1], 3), sw(ix[2], 3)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec v = c.m2(c.lift(n1(X[0]), c.ad1(n1(Y[0]), n1(Z[0]))), c.ad2(c.s0(n1(X[1])), p11(Y[1], Z[1])));
                return c.m2(v, c.S2(c.p01(xy(X[2], Y[2]), n1(Z[2]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 3), sw(ix[1], 3), sw(ix[2], 3)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec v = c.m2(c.lift(n1(X[0]), c.ad1(n1(Y[0]), n1(Z[0]))), c.ad2(c.s0(n1(X[1])), p11(Y[1], Z[1])));
                return c.m2(v, c.ad2(c.s0(n1(X[2])), c.S2(p01(Y[2], Z[2]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2), sw(ix[1], 3), sw(ix[2], 3)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                Vec inner = c.m2(p11(Y[1], Z[1]), c.S2(p01(Y[2], Z[2])));
                return c.m2(c.lift(n1(X[0]), c.ad1(n1(Y[0]), n1(Z[0]))), c.ad2(c.s0(n1(X[1])), inner));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2), sw(ix[1], 2), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                return c.m2(c.lift(n1(X[0]), c.ad1(n1(Y[0]), n1(Z[0]))),
                            c.ad2(c.s0(n1(X[1])), c.lift(n1(Y[1]), n1(Z[1]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2), sw(ix[1], 2), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                return c.m2(c.lift(n1(X[0]), c.ad1(n1(Y[0]), n1(Z[0]))),
                            c.ad2(c.s1(c.s0d1(n1(X[1]))), c.lift(n1(Y[1]), n1(Z[1]))));
            });
        },
        [&](const std::vector<Index>& ix) {
            return sweedler_sum({sw(ix[0], 2), sw(ix[1], 2), sw(ix[2], 2)}, [&](const std::vector<Parts>& p) {
                const Parts &X = p[0], &Y = p[1], &Z = p[2];
                return c.m2(c.lift(n1(X[0]), c.ad1(n1(Y[0]), n1(Z[0]))),
                            c.on_K(c.d1(n1(X[1])), c.lift(n1(Y[1]), n1(Z[1]))));
            });
        },
    };
    check_lines(r, "axiom-5", "axiom 5 expansion of {xy,z}", di * di * di, {di, di, di}, five, triple, H2);
    return r;
}

}  // namespace hopf2x
