#include "hopf2x/action.hpp"

#include "check_util.hpp"

namespace hopf2x {

// Every law is linear in the acting argument and multiplicative in it once
// associativity holds, so the acting side ranges over plan_pairs(H).left.
Report verify_module_bialgebra(const ActionTensor& act)
{
    using detail::first_mismatch;
    using detail::Sides;
    const HopfAlgebra& H = act.acting();
    const HopfAlgebra& I = act.carrier();
    const Index dh = H.dim(), di = I.dim();
    const Field F = I.field();
    const PairPlan plan = plan_pairs(H);
    const Index nx = plan.left.size();
    auto fi = [&](const Vec& v) { return format(I, v); };
    auto hx = [&](std::size_t g) { return plan.mode == PairPlan::Mode::basis ? H.label(g) : format(H, plan.left[g]); };
    auto pair = [&](std::size_t g, Index v) { return "(" + hx(g) + ", " + I.label(v) + ")"; };
    auto scalar_vec = [&](const Scalar& c) {
        VecBuilder vb;
        vb.add(0, c);
        return vb.build();
    };
    Report r;

    r.check("unit-acts-trivially", "module bialgebra / 1▷v = v",
            first_mismatch(
                di, [&](std::size_t v) { return Sides{act.act(H.one(), I.basis(v)), I.basis(v)}; },
                [&](std::size_t v, const Sides& s) { return Witness{I.label(v), fi(s.lhs), fi(s.rhs)}; }));

    if (plan.mode == PairPlan::Mode::skipped) {
        for (const char* id : {"associative", "acts-on-unit", "module-algebra", "module-coalgebra", "counit-compatible"})
            r.skip(id, "module bialgebra", plan.note);
        return r;
    }

    r.check("associative", "module bialgebra / (xy)▷v = x▷(y▷v)",
            first_mismatch(
                nx * dh * di,
                [&](std::size_t k) {
                    auto ix = detail::digits(k, {nx, dh, di});
                    const Vec& x = plan.left[ix[0]];
                    return Sides{act.act(H.mul(x, H.basis(ix[1])), I.basis(ix[2])), act.act(x, act.act(ix[1], ix[2]))};
                },
                [&](std::size_t k, const Sides& s) {
                    auto ix = detail::digits(k, {nx, dh, di});
                    return Witness{"(" + hx(ix[0]) + ", " + H.label(ix[1]) + ", " + I.label(ix[2]) + ")", fi(s.lhs),
                                   fi(s.rhs)};
                }),
            plan.note);

    r.check("acts-on-unit", "module algebra / x▷1 = ε(x)1",
            first_mismatch(
                nx,
                [&](std::size_t g) {
                    const Vec& x = plan.left[g];
                    return Sides{act.act(x, I.one()), I.one().scaled(H.counit(x))};
                },
                [&](std::size_t g, const Sides& s) { return Witness{hx(g), fi(s.lhs), fi(s.rhs)}; }),
            plan.note);

    r.check("module-algebra", "module algebra / x▷(uv) = Σ(x'▷u)(x''▷v)",
            first_mismatch(
                nx * di * di,
                [&](std::size_t k) {
                    auto ix = detail::digits(k, {nx, di, di});
                    const Vec& x = plan.left[ix[0]];
                    VecBuilder vb;
                    const Vec dx = H.comul(x);
                    for (const auto& t : dx.terms())
                        I.mul_into(act.act(t.index / dh, ix[1]), act.act(t.index % dh, ix[2]), t.coef, vb);
                    return Sides{act.act(x, I.mul(ix[1], ix[2])), vb.build()};
                },
                [&](std::size_t k, const Sides& s) {
                    auto ix = detail::digits(k, {nx, di, di});
                    return Witness{"(" + hx(ix[0]) + ", " + I.label(ix[1]) + ", " + I.label(ix[2]) + ")", fi(s.lhs),
                                   fi(s.rhs)};
                }),
            plan.note);

    r.check("module-coalgebra", "module coalgebra / δ(x▷v) = Σ(x'▷v')⊗(x''▷v'')",
            first_mismatch(
                nx * di,
                [&](std::size_t k) {
                    const Vec& x = plan.left[k / di];
                    Index v = k % di;
                    VecBuilder vb;
                    const Vec dx = H.comul(x);
                    for (const auto& s : dx.terms())
                        for (const auto& t : I.comul(v).terms())
                            vb.add(tensor(act.act(s.index / dh, t.index / di), act.act(s.index % dh, t.index % di), di),
                                   s.coef * t.coef);
                    return Sides{I.comul(act.act(x, I.basis(v))), vb.build()};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{pair(k / di, k % di), format_tensor(I, I, s.lhs), format_tensor(I, I, s.rhs)};
                }),
            plan.note);

    r.check("counit-compatible", "module coalgebra / ε(x▷v) = ε(x)ε(v)",
            first_mismatch(
                nx * di,
                [&](std::size_t k) {
                    const Vec& x = plan.left[k / di];
                    Index v = k % di;
                    return Sides{scalar_vec(I.counit(act.act(x, I.basis(v)))), scalar_vec(H.counit(x) * I.counit(v))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{pair(k / di, k % di), s.lhs.coef(0, F).str(), s.rhs.coef(0, F).str()};
                }),
            plan.note);
    return r;
}

ActionTensor trivial_action(const HopfAlgebra& acting, const HopfAlgebra& carrier)
{
    const Field F = carrier.field();
    return ActionTensor(acting, carrier,
                        Bilinear(Trilinear::build(F, acting.dim(), carrier.dim(), carrier.dim(), [&](Index x, Index v) {
                            return carrier.basis(v).scaled(acting.counit(x));
                        })));
}

HopfAlgebra smash_product(const ActionTensor& act)
{
    const HopfAlgebra& I = act.carrier();
    const HopfAlgebra& H = act.acting();
    if (!is_cocommutative(I) || !is_cocommutative(H))
        throw PreconditionError("smash product requires cocommutative factors");
    Report pre = verify_module_bialgebra(act);
    if (!pre.ok()) {
        for (const auto& rec : pre.records())
            if (rec.status == Status::fail)
                throw PreconditionError("smash product: action fails " + rec.anchor + " at " + rec.witness->tuple);
    }
    const Field F = I.field();
    const Index di = I.dim(), dh = H.dim(), d = di * dh;
    const Limits L = limits();

    HopfAlgebra::Data data;
    data.field = F;
    for (Index u = 0; u < di; ++u)
        for (Index x = 0; x < dh; ++x) data.labels.push_back("(" + I.label(u) + "," + H.label(x) + ")");

    auto entry = [I, H, act, dh](Index p, Index q) {
        Index u = p / dh, x = p % dh, v = q / dh, y = q % dh;
        VecBuilder vb;
        for (const auto& t : H.comul(x).terms()) {
            Vec left = I.mul(I.basis(u), act.act(t.index / dh, v));
            Vec right = H.mul(t.index % dh, y);
            vb.add(tensor(left, right, dh), t.coef);
        }
        return vb.build();
    };
    data.mul = Bilinear(F, d, d, d, entry);
    if (d <= L.materialize && d * d <= L.product_pairs) data.mul = data.mul.cached(L.product_pairs);
    data.unit = tensor(I.one(), H.one(), dh);
    data.comul = LinearMap::from_function(F, d * d, d, [&](Index p) {
        VecBuilder vb;
        for (const auto& s : I.comul(p / dh).terms())
            for (const auto& t : H.comul(p % dh).terms()) {
                Index left = (s.index / di) * dh + t.index / dh;
                Index right = (s.index % di) * dh + t.index % dh;
                vb.add(left * d + right, s.coef * t.coef);
            }
        return vb.build();
    });
    for (Index p = 0; p < d; ++p) data.counit.push_back(I.counit(p / dh) * H.counit(p % dh));
    const Bilinear& mul = data.mul;
    data.antipode = LinearMap::from_function(F, d, d, [&](Index p) {
        Vec a = tensor(I.one(), H.antipode(p % dh), dh);
        Vec b = tensor(I.antipode(p / dh), H.one(), dh);
        return mul.apply(a, b);
    });
    data.cocommutative = I.cocommutative_flag() && H.cocommutative_flag();
    HopfAlgebra::Factors fac{HopfAlgebra::Factors::Kind::smash, std::make_shared<const HopfAlgebra>(I),
                             std::make_shared<const HopfAlgebra>(H), std::make_shared<const ActionTensor>(act)};
    return HopfAlgebra(std::move(data), std::move(fac));
}

RadfordSplit radford_decompose(const HopfMorphism& proj, const HopfMorphism& sect)
{
    const HopfAlgebra& I = proj.source();
    const HopfAlgebra& H = proj.target();
    if (sect.source().dim() != H.dim() || sect.target().dim() != I.dim())
        throw PreconditionError("radford_decompose: section has the wrong shape");
    const Field F = I.field();
    const Index di = I.dim(), dh = H.dim();
    if (!(proj.map().after(sect.map()) == LinearMap::identity(F, dh)))
        throw PreconditionError("radford_decompose: proj∘sect is not the identity (not a point)");

    Subspace K = hopf_kernel(proj);
    HopfAlgebra Kalg = sub_hopf(I, K);
    const auto& krows = K.rows();
    const Index dk = krows.size();
    ActionTensor rho(H, Kalg, Bilinear(Trilinear::build(F, dh, dk, dk, [&](Index x, Index a) {
                         return K.coordinates(adjoint(I, sect(x), krows[a]));
                     })));
    HopfAlgebra S = smash_product(rho);

    // f(x) = sum x' sect(proj(S(x'')))
    auto f = [&](Index x) {
        VecBuilder vb;
        for (const auto& t : I.comul(x).terms())
            I.mul_into(I.basis(t.index / di), sect(proj(I.antipode(t.index % di))), t.coef, vb);
        return vb.build();
    };
    const Subspace fullH = Subspace::full(F, dh);
    LinearMap psi = LinearMap::from_function(F, dk * dh, di, [&](Index v) {
        VecBuilder vb;
        for (const auto& t : I.comul(v).terms()) vb.add(tensor(f(t.index / di), proj(t.index % di), dh), t.coef);
        return K.tensor_coordinates(vb.build(), fullH);
    });
    LinearMap phi = LinearMap::from_function(F, di, dk * dh, [&](Index p) {
        return I.mul(krows[p / dh], sect(p % dh));
    });

    Report r;
    auto identity_check = [&](const LinearMap& m, std::size_t n) -> std::optional<Witness> {
        for (std::size_t c = 0; c < n; ++c)
            if (!(m.column(c) == Vec::unit(F, c)))
                return Witness{"column " + std::to_string(c), format_coords(m.column(c)), "b" + std::to_string(c)};
        return std::nullopt;
    };
    r.check("psi-phi-identity", "split extension / Psi∘Phi = id", identity_check(psi.after(phi), dk * dh));
    r.check("phi-psi-identity", "split extension / Phi∘Psi = id", identity_check(phi.after(psi), di));
    Report morph = verify_morphism(HopfMorphism(I, S, psi));
    r.merge(morph, "psi-morphism");
    return RadfordSplit{K, Kalg, rho, S, std::move(psi), std::move(phi), std::move(r)};
}

}  // namespace hopf2x
