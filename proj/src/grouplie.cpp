#include "hopf2x/grouplie.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "check_util.hpp"
#include "hopf2x/xmodules.hpp"

namespace hopf2x {

using detail::digits;
using detail::first_bad;

namespace {

std::string tuple_str(std::initializer_list<std::string> parts)
{
    std::string s = "(";
    bool first = true;
    for (const auto& p : parts) {
        if (!first) s += ", ";
        s += p;
        first = false;
    }
    return s + ")";
}

std::string power_label(const std::string& gen, std::size_t k)
{
    if (k == 0) return "";
    if (k == 1) return gen;
    return gen + "^" + std::to_string(k);
}

}  // namespace

// ---- FiniteGroup ---------------------------------------------------------------

FiniteGroup::FiniteGroup(Table table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels))
{
    const std::size_t n = table_.size();
    if (n == 0) throw PreconditionError("a group needs at least one element");
    if (labels_.size() != n) throw DimensionMismatch("group label count differs from order");
    for (const auto& row : table_) {
        if (row.size() != n) throw DimensionMismatch("group table is not square");
        for (auto v : row)
            if (v >= n) throw PreconditionError("group table entry out of range");
    }
    std::size_t id = n;
    for (std::size_t e = 0; e < n && id == n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) id = e;
    }
    if (id == n) throw PreconditionError("group table has no identity");
    identity_ = id;
    std::size_t bad = kernels::first_failure(n * n * n, [&](std::size_t k) {
        auto ix = digits(k, {n, n, n});
        return table_[table_[ix[0]][ix[1]]][ix[2]] == table_[ix[0]][table_[ix[1]][ix[2]]];
    });
    if (bad != n * n * n) throw PreconditionError("group table is not associative");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == id && table_[b][a] == id) inverse_[a] = b;
        if (inverse_[a] == n) throw PreconditionError("element " + labels_[a] + " has no inverse");
    }
}

std::size_t FiniteGroup::find(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw PreconditionError("no group element labelled " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    Table t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        labels.push_back(a == 0 ? "e" : power_label("g", a));
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n)
{
    const std::size_t m = 2 * n;
    Table t(m, std::vector<std::size_t>(m));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
        std::size_t fa = a / n, ia = a % n;
        for (std::size_t b = 0; b < m; ++b) {
            std::size_t fb = b / n, ib = b % n;
            // r^ia s^fa r^ib s^fb = r^(ia -+ ib) s^(fa+fb)
            std::size_t i = fa ? (ia + n - ib) % n : (ia + ib) % n;
            t[a][b] = ((fa + fb) % 2) * n + i;
        }
        std::string l = power_label("r", ia) + (fa ? "s" : "");
        labels.push_back(l.empty() ? "e" : l);
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric3()
{
    // Permutations of {1,2,3} in one-line notation; (p*q)(i) = p(q(i)).
    const std::vector<std::array<int, 3>> perms{{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
    const std::vector<std::string> labels{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    Table t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i] - 1];
            t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return FiniteGroup(std::move(t), labels);
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b)
{
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    Table t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
        labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

bool is_homomorphism(const GroupHom& f)
{
    const std::size_t n = f.source.order();
    if (f.map.size() != n) return false;
    for (auto v : f.map)
        if (v >= f.target.order()) return false;
    return kernels::first_failure(n * n, [&](std::size_t k) {
               std::size_t a = k / n, b = k % n;
               return f.map[f.source.mul(a, b)] == f.target.mul(f.map[a], f.map[b]);
           }) == n * n;
}

GroupAction trivial_group_action(const FiniteGroup& acting, const FiniteGroup& carrier)
{
    std::vector<std::size_t> id(carrier.order());
    std::iota(id.begin(), id.end(), 0);
    return GroupAction{acting, carrier, Table(acting.order(), id)};
}

GroupAction conjugation_action(const FiniteGroup& g)
{
    const std::size_t n = g.order();
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(a, b), g.inverse(a));
    return GroupAction{g, g, std::move(t)};
}

Report verify_group_action(const GroupAction& a)
{
    const FiniteGroup& G = a.acting;
    const FiniteGroup& E = a.carrier;
    const std::size_t ng = G.order(), ne = E.order();
    Report r;
    if (a.perm.size() != ng) throw DimensionMismatch("action table has the wrong number of rows");
    for (const auto& row : a.perm) {
        if (row.size() != ne) throw DimensionMismatch("action table row has the wrong length");
        for (auto v : row)
            if (v >= ne) throw PreconditionError("action table entry out of range");
    }
    r.check("identity", "group action / 1▷e = e",
            first_bad(
                ne, [&](std::size_t e) { return a.perm[G.identity()][e] == e; },
                [&](std::size_t e) { return Witness{E.label(e), E.label(a.perm[G.identity()][e]), E.label(e)}; }));
    r.check("composition", "group action / (gh)▷e = g▷(h▷e)",
            first_bad(
                ng * ng * ne,
                [&](std::size_t k) {
                    auto ix = digits(k, {ng, ng, ne});
                    return a.perm[G.mul(ix[0], ix[1])][ix[2]] == a.perm[ix[0]][a.perm[ix[1]][ix[2]]];
                },
                [&](std::size_t k) {
                    auto ix = digits(k, {ng, ng, ne});
                    return Witness{tuple_str({G.label(ix[0]), G.label(ix[1]), E.label(ix[2])}),
                                   E.label(a.perm[G.mul(ix[0], ix[1])][ix[2]]),
                                   E.label(a.perm[ix[0]][a.perm[ix[1]][ix[2]]])};
                }));
    r.check("automorphism", "group action / g▷(ef) = (g▷e)(g▷f)",
            first_bad(
                ng * ne * ne,
                [&](std::size_t k) {
                    auto ix = digits(k, {ng, ne, ne});
                    return a.perm[ix[0]][E.mul(ix[1], ix[2])] == E.mul(a.perm[ix[0]][ix[1]], a.perm[ix[0]][ix[2]]);
                },
                [&](std::size_t k) {
                    auto ix = digits(k, {ng, ne, ne});
                    return Witness{tuple_str({G.label(ix[0]), E.label(ix[1]), E.label(ix[2])}),
                                   E.label(a.perm[ix[0]][E.mul(ix[1], ix[2])]),
                                   E.label(E.mul(a.perm[ix[0]][ix[1]], a.perm[ix[0]][ix[2]]))};
                }));
    return r;
}

// ---- group algebras ------------------------------------------------------------

HopfAlgebra group_algebra(const FiniteGroup& g, Field f)
{
    const std::size_t n = g.order();
    HopfAlgebra::Data d;
    d.field = f;
    d.labels = g.labels();
    d.mul = Bilinear(Trilinear::build(f, n, n, n, [&](Index a, Index b) { return Vec::unit(f, g.mul(a, b)); }));
    d.unit = Vec::unit(f, g.identity());
    std::vector<Vec> comul, anti;
    for (std::size_t a = 0; a < n; ++a) {
        comul.push_back(Vec::unit(f, a * n + a));
        anti.push_back(Vec::unit(f, g.inverse(a)));
        d.counit.push_back(Scalar::one(f));
    }
    d.comul = LinearMap(f, n * n, std::move(comul));
    d.antipode = LinearMap(f, n, std::move(anti));
    d.cocommutative = true;
    return HopfAlgebra(std::move(d));
}

HopfMorphism group_algebra_hom(const HopfAlgebra& source, const HopfAlgebra& target, const GroupHom& f)
{
    if (source.dim() != f.source.order() || target.dim() != f.target.order())
        throw DimensionMismatch("group algebra sizes do not match the homomorphism");
    if (!is_homomorphism(f)) throw PreconditionError("map is not a group homomorphism");
    std::vector<Vec> cols;
    for (auto v : f.map) cols.push_back(Vec::unit(source.field(), v));
    return HopfMorphism(source, target, LinearMap(source.field(), target.dim(), std::move(cols)));
}

ActionTensor group_algebra_action(const HopfAlgebra& acting, const HopfAlgebra& carrier, const GroupAction& a)
{
    const Field F = carrier.field();
    return ActionTensor(acting, carrier,
                        Bilinear(Trilinear::build(F, acting.dim(), carrier.dim(), carrier.dim(),
                                                  [&](Index g, Index e) { return Vec::unit(F, a.perm[g][e]); })));
}

Report verify_group_xmod(const GroupHom& boundary, const GroupAction& act)
{
    const FiniteGroup& E = boundary.source;
    const FiniteGroup& G = boundary.target;
    const std::size_t ne = E.order(), ng = G.order();
    Report r;
    {
        std::optional<Witness> w;
        if (!is_homomorphism(boundary)) w = Witness{"∂", "not multiplicative", "homomorphism"};
        r.check("boundary-homomorphism", "group crossed module / ∂ is a homomorphism", w);
    }
    r.merge(verify_group_action(act), "action");
    const auto& d = boundary.map;
    r.check("equivariance", "group crossed module / ∂(g▷e) = g∂(e)g⁻¹",
            first_bad(
                ng * ne,
                [&](std::size_t k) {
                    std::size_t g = k / ne, e = k % ne;
                    return d[act.perm[g][e]] == G.mul(G.mul(g, d[e]), G.inverse(g));
                },
                [&](std::size_t k) {
                    std::size_t g = k / ne, e = k % ne;
                    return Witness{tuple_str({G.label(g), E.label(e)}), G.label(d[act.perm[g][e]]),
                                   G.label(G.mul(G.mul(g, d[e]), G.inverse(g)))};
                }));
    r.check("peiffer", "group crossed module / ∂(e)▷f = efe⁻¹",
            first_bad(
                ne * ne,
                [&](std::size_t k) {
                    std::size_t e = k / ne, f = k % ne;
                    return act.perm[d[e]][f] == E.mul(E.mul(e, f), E.inverse(e));
                },
                [&](std::size_t k) {
                    std::size_t e = k / ne, f = k % ne;
                    return Witness{tuple_str({E.label(e), E.label(f)}), E.label(act.perm[d[e]][f]),
                                   E.label(E.mul(E.mul(e, f), E.inverse(e)))};
                }));
    return r;
}

Report verify_group_2xmod(const Group2XMod& x)
{
    const FiniteGroup &L = x.L, &E = x.E, &G = x.G;
    const std::size_t nl = L.order(), ne = E.order(), ng = G.order();
    if (x.lift.size() != ne) throw DimensionMismatch("lifting table has the wrong number of rows");
    for (const auto& row : x.lift)
        if (row.size() != ne) throw DimensionMismatch("lifting table row has the wrong length");
    const auto& d2 = x.d2;
    const auto& d1 = x.d1;
    const auto& aL = x.on_L.perm;
    const auto& aE = x.on_E.perm;
    auto lift = [&](std::size_t e, std::size_t f) { return x.lift[e][f]; };
    auto lm = [&](std::size_t a, std::size_t b) { return L.mul(a, b); };
    auto em = [&](std::size_t a, std::size_t b) { return E.mul(a, b); };
    // e |>' l = l {d2(l^-1), e}
    auto dact = [&](std::size_t e, std::size_t l) { return lm(l, lift(d2[L.inverse(l)], e)); };
    auto Ll = [&](std::size_t l) { return L.label(l); };
    auto El = [&](std::size_t e) { return E.label(e); };
    Report r;

    {
        std::optional<Witness> w;
        if (!is_homomorphism({L, E, d2})) w = Witness{"∂₂", "not multiplicative", "homomorphism"};
        r.check("d2-homomorphism", "group 2-crossed module / ∂₂ is a homomorphism", w);
        w.reset();
        if (!is_homomorphism({E, G, d1})) w = Witness{"∂₁", "not multiplicative", "homomorphism"};
        r.check("d1-homomorphism", "group 2-crossed module / ∂₁ is a homomorphism", w);
    }
    r.merge(verify_group_action(x.on_L), "action-L");
    r.merge(verify_group_action(x.on_E), "action-E");

    r.check("axiom-1-complex", "group 2-crossed module / 1) ∂₁∂₂ = 1",
            first_bad(
                nl, [&](std::size_t l) { return d1[d2[l]] == G.identity(); },
                [&](std::size_t l) { return Witness{Ll(l), G.label(d1[d2[l]]), G.label(G.identity())}; }));
    r.check("axiom-1-d2-equivariant", "group 2-crossed module / 1) ∂₂(g▷l) = g▷∂₂(l)",
            first_bad(
                ng * nl, [&](std::size_t k) { return d2[aL[k / nl][k % nl]] == aE[k / nl][d2[k % nl]]; },
                [&](std::size_t k) {
                    return Witness{tuple_str({G.label(k / nl), Ll(k % nl)}), El(d2[aL[k / nl][k % nl]]),
                                   El(aE[k / nl][d2[k % nl]])};
                }));
    r.check("axiom-1-d1-equivariant", "group 2-crossed module / 1) ∂₁(g▷e) = g∂₁(e)g⁻¹",
            first_bad(
                ng * ne,
                [&](std::size_t k) {
                    std::size_t g = k / ne, e = k % ne;
                    return d1[aE[g][e]] == G.mul(G.mul(g, d1[e]), G.inverse(g));
                },
                [&](std::size_t k) {
                    std::size_t g = k / ne, e = k % ne;
                    return Witness{tuple_str({G.label(g), El(e)}), G.label(d1[aE[g][e]]),
                                   G.label(G.mul(G.mul(g, d1[e]), G.inverse(g)))};
                }));
    r.check("lifting-equivariance", "group 2-crossed module / g▷{e,f} = {g▷e, g▷f}",
            first_bad(
                ng * ne * ne,
                [&](std::size_t k) {
                    auto ix = digits(k, {ng, ne, ne});
                    return aL[ix[0]][lift(ix[1], ix[2])] == lift(aE[ix[0]][ix[1]], aE[ix[0]][ix[2]]);
                },
                [&](std::size_t k) {
                    auto ix = digits(k, {ng, ne, ne});
                    return Witness{tuple_str({G.label(ix[0]), El(ix[1]), El(ix[2])}),
                                   Ll(aL[ix[0]][lift(ix[1], ix[2])]), Ll(lift(aE[ix[0]][ix[1]], aE[ix[0]][ix[2]]))};
                }));
    r.check("axiom-2", "group 2-crossed module / 2) ∂₂{e,f} = (efe⁻¹)(∂₁(e)▷f⁻¹)",
            first_bad(
                ne * ne,
                [&](std::size_t k) {
                    std::size_t e = k / ne, f = k % ne;
                    return d2[lift(e, f)] == em(em(em(e, f), E.inverse(e)), aE[d1[e]][E.inverse(f)]);
                },
                [&](std::size_t k) {
                    std::size_t e = k / ne, f = k % ne;
                    return Witness{tuple_str({El(e), El(f)}), El(d2[lift(e, f)]),
                                   El(em(em(em(e, f), E.inverse(e)), aE[d1[e]][E.inverse(f)]))};
                }));
    r.check("axiom-3", "group 2-crossed module / 3) {∂₂l, ∂₂m} = lml⁻¹m⁻¹",
            first_bad(
                nl * nl,
                [&](std::size_t k) {
                    std::size_t l = k / nl, m = k % nl;
                    return lift(d2[l], d2[m]) == lm(lm(lm(l, m), L.inverse(l)), L.inverse(m));
                },
                [&](std::size_t k) {
                    std::size_t l = k / nl, m = k % nl;
                    return Witness{tuple_str({Ll(l), Ll(m)}), Ll(lift(d2[l], d2[m])),
                                   Ll(lm(lm(lm(l, m), L.inverse(l)), L.inverse(m)))};
                }));
    auto ax4 = [&](std::size_t e, std::size_t f, std::size_t g) {
        return std::pair{lift(e, em(f, g)), lm(lift(e, f), dact(aE[d1[e]][f], lift(e, g)))};
    };
    r.check("axiom-4", "group 2-crossed module / 4) {e,fg} = {e,f} (∂₁(e)▷f)▷'{e,g}",
            first_bad(
                ne * ne * ne,
                [&](std::size_t k) {
                    auto ix = digits(k, {ne, ne, ne});
                    auto [a, b] = ax4(ix[0], ix[1], ix[2]);
                    return a == b;
                },
                [&](std::size_t k) {
                    auto ix = digits(k, {ne, ne, ne});
                    auto [a, b] = ax4(ix[0], ix[1], ix[2]);
                    return Witness{tuple_str({El(ix[0]), El(ix[1]), El(ix[2])}), Ll(a), Ll(b)};
                }));
    auto ax5 = [&](std::size_t e, std::size_t f, std::size_t g) {
        return std::pair{lift(em(e, f), g), lm(lift(e, em(em(f, g), E.inverse(f))), aL[d1[e]][lift(f, g)])};
    };
    r.check("axiom-5", "group 2-crossed module / 5) {ef,g} = {e,fgf⁻¹} ∂₁(e)▷{f,g}",
            first_bad(
                ne * ne * ne,
                [&](std::size_t k) {
                    auto ix = digits(k, {ne, ne, ne});
                    auto [a, b] = ax5(ix[0], ix[1], ix[2]);
                    return a == b;
                },
                [&](std::size_t k) {
                    auto ix = digits(k, {ne, ne, ne});
                    auto [a, b] = ax5(ix[0], ix[1], ix[2]);
                    return Witness{tuple_str({El(ix[0]), El(ix[1]), El(ix[2])}), Ll(a), Ll(b)};
                }));
    auto ax6 = [&](std::size_t l, std::size_t e) {
        return std::pair{lm(lift(d2[l], e), lift(e, d2[l])), lm(l, aL[d1[e]][L.inverse(l)])};
    };
    r.check("axiom-6", "group 2-crossed module / 6) {∂₂l, e}{e, ∂₂l} = l(∂₁(e)▷l⁻¹)",
            first_bad(
                nl * ne,
                [&](std::size_t k) {
                    auto [a, b] = ax6(k / ne, k % ne);
                    return a == b;
                },
                [&](std::size_t k) {
                    auto [a, b] = ax6(k / ne, k % ne);
                    return Witness{tuple_str({Ll(k / ne), El(k % ne)}), Ll(a), Ll(b)};
                }));

    Table dperm(ne, std::vector<std::size_t>(nl));
    for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t l = 0; l < nl; ++l) dperm[e][l] = dact(e, l);
    r.merge(verify_group_xmod({L, E, d2}, {E, L, std::move(dperm)}), "derived-xmod");
    return r;
}

// ---- Lie algebras --------------------------------------------------------------

LieAlgebra::LieAlgebra(Trilinear bracket, std::vector<std::string> labels)
    : bracket_(std::move(bracket)), labels_(std::move(labels))
{
    if (bracket_.dim_a() != bracket_.dim_b() || bracket_.dim_a() != bracket_.dim_c())
        throw DimensionMismatch("bracket tensor is not square");
    if (labels_.size() != bracket_.dim_a()) throw DimensionMismatch("Lie label count differs from dimension");
}

LieAlgebra LieAlgebra::abelian(Field f, std::size_t dim)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
    return LieAlgebra(Trilinear(f, dim, dim, dim), std::move(labels));
}

namespace {

std::string lie_fmt(const std::vector<std::string>& labels, const Vec& v)
{
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& t : v.terms()) {
        if (!s.empty()) s += " + ";
        s += (t.coef.is_one() ? "" : t.coef.str() + "*") + labels[t.index];
    }
    return s;
}

Vec act_on(const Trilinear& a, const Vec& g, const Vec& v) { return a.apply(g, v); }

// Records that `act` is a Lie action by derivations of g on e.
void check_lie_action(Report& r, const std::string& prefix, const LieAlgebra& g, const LieAlgebra& e,
                      const Trilinear& act)
{
    const Field F = e.field();
    const std::size_t dg = g.dim(), de = e.dim();
    auto gv = [&](Index i) { return Vec::unit(F, i); };
    auto fe = [&](const Vec& v) { return lie_fmt(e.labels(), v); };
    r.check(prefix + "-representation", "Lie action / [g,h]▷u = g▷(h▷u) − h▷(g▷u)",
            detail::first_mismatch(
                dg * dg * de,
                [&](std::size_t k) {
                    auto ix = digits(k, {dg, dg, de});
                    Vec lhs = act_on(act, g.bracket(gv(ix[0]), gv(ix[1])), gv(ix[2]));
                    Vec rhs = act_on(act, gv(ix[0]), act_on(act, gv(ix[1]), gv(ix[2]))) -
                              act_on(act, gv(ix[1]), act_on(act, gv(ix[0]), gv(ix[2])));
                    return detail::Sides{lhs, rhs};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    auto ix = digits(k, {dg, dg, de});
                    return Witness{tuple_str({g.labels()[ix[0]], g.labels()[ix[1]], e.labels()[ix[2]]}), fe(s.lhs),
                                   fe(s.rhs)};
                }));
    r.check(prefix + "-derivation", "Lie action / g▷[u,v] = [g▷u,v] + [u,g▷v]",
            detail::first_mismatch(
                dg * de * de,
                [&](std::size_t k) {
                    auto ix = digits(k, {dg, de, de});
                    Vec a = gv(ix[0]), u = gv(ix[1]), v = gv(ix[2]);
                    Vec lhs = act_on(act, a, e.bracket(u, v));
                    Vec rhs = e.bracket(act_on(act, a, u), v) + e.bracket(u, act_on(act, a, v));
                    return detail::Sides{lhs, rhs};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    auto ix = digits(k, {dg, de, de});
                    return Witness{tuple_str({g.labels()[ix[0]], e.labels()[ix[1]], e.labels()[ix[2]]}), fe(s.lhs),
                                   fe(s.rhs)};
                }));
}

void check_lie_hom(Report& r, const std::string& id, const LieAlgebra& a, const LieAlgebra& b, const LinearMap& f)
{
    const Field F = a.field();
    const std::size_t da = a.dim();
    if (f.cols() != da || f.rows() != b.dim()) throw DimensionMismatch(id + ": map shape does not match");
    r.check(id, "Lie morphism / f[x,y] = [fx,fy]",
            detail::first_mismatch(
                da * da,
                [&](std::size_t k) {
                    Vec x = Vec::unit(F, k / da), y = Vec::unit(F, k % da);
                    return detail::Sides{f.apply(a.bracket(x, y)), b.bracket(f.apply(x), f.apply(y))};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({a.labels()[k / da], a.labels()[k % da]}), lie_fmt(b.labels(), s.lhs),
                                   lie_fmt(b.labels(), s.rhs)};
                }));
}

}  // namespace

Report verify_lie(const LieAlgebra& g)
{
    const Field F = g.field();
    const std::size_t d = g.dim();
    auto v = [&](Index i) { return Vec::unit(F, i); };
    auto fmt = [&](const Vec& x) { return lie_fmt(g.labels(), x); };
    Report r;
    r.check("antisymmetry", "Lie algebra / [x,x] = 0 and [x,y] = −[y,x]",
            detail::first_mismatch(
                d * d,
                [&](std::size_t k) {
                    Vec a = v(k / d), b = v(k % d);
                    return detail::Sides{g.bracket(a, b), g.bracket(b, a).scaled(-Scalar::one(F))};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({g.labels()[k / d], g.labels()[k % d]}), fmt(s.lhs), fmt(s.rhs)};
                }));
    r.check("jacobi", "Lie algebra / [x,[y,z]] = [[x,y],z] + [y,[x,z]]",
            detail::first_mismatch(
                d * d * d,
                [&](std::size_t k) {
                    auto ix = digits(k, {d, d, d});
                    Vec x = v(ix[0]), y = v(ix[1]), z = v(ix[2]);
                    return detail::Sides{g.bracket(x, g.bracket(y, z)),
                                         g.bracket(g.bracket(x, y), z) + g.bracket(y, g.bracket(x, z))};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    auto ix = digits(k, {d, d, d});
                    return Witness{tuple_str({g.labels()[ix[0]], g.labels()[ix[1]], g.labels()[ix[2]]}), fmt(s.lhs),
                                   fmt(s.rhs)};
                }));
    return r;
}

Report verify_lie_xmod(const LieXMod& x)
{
    const Field F = x.e.field();
    const std::size_t de = x.e.dim(), dg = x.g.dim();
    auto v = [&](Index i) { return Vec::unit(F, i); };
    Report r;
    check_lie_hom(r, "boundary-homomorphism", x.e, x.g, x.boundary);
    check_lie_action(r, "action", x.g, x.e, x.action);
    r.check("equivariance", "Lie crossed module / ∂(g▷e) = [g,∂e]",
            detail::first_mismatch(
                dg * de,
                [&](std::size_t k) {
                    Vec a = v(k / de), e = v(k % de);
                    return detail::Sides{x.boundary.apply(act_on(x.action, a, e)), x.g.bracket(a, x.boundary.apply(e))};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({x.g.labels()[k / de], x.e.labels()[k % de]}),
                                   lie_fmt(x.g.labels(), s.lhs), lie_fmt(x.g.labels(), s.rhs)};
                }));
    r.check("peiffer", "Lie crossed module / ∂(e)▷f = [e,f]",
            detail::first_mismatch(
                de * de,
                [&](std::size_t k) {
                    Vec e = v(k / de), f = v(k % de);
                    return detail::Sides{act_on(x.action, x.boundary.apply(e), f), x.e.bracket(e, f)};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({x.e.labels()[k / de], x.e.labels()[k % de]}),
                                   lie_fmt(x.e.labels(), s.lhs), lie_fmt(x.e.labels(), s.rhs)};
                }));
    return r;
}

Report verify_lie_2xmod(const Lie2XMod& x)
{
    const Field F = x.e.field();
    const LieAlgebra &l = x.l, &e = x.e, &g = x.g;
    const std::size_t dl = l.dim(), de = e.dim(), dg = g.dim();
    auto v = [&](Index i) { return Vec::unit(F, i); };
    auto lift = [&](const Vec& a, const Vec& b) { return x.lift.apply(a, b); };
    auto fl = [&](const Vec& a) { return lie_fmt(l.labels(), a); };
    auto fe = [&](const Vec& a) { return lie_fmt(e.labels(), a); };
    const Scalar minus = -Scalar::one(F);
    Report r;
    check_lie_hom(r, "d2-homomorphism", l, e, x.d2);
    check_lie_hom(r, "d1-homomorphism", e, g, x.d1);
    check_lie_action(r, "action-l", g, l, x.on_l);
    check_lie_action(r, "action-e", g, e, x.on_e);

    r.check("axiom-1-complex", "Lie 2-crossed module / 1) ∂₁∂₂ = 0",
            detail::first_mismatch(
                dl, [&](std::size_t i) { return detail::Sides{x.d1.apply(x.d2.apply(v(i))), Vec{}}; },
                [&](std::size_t i, const detail::Sides& s) {
                    return Witness{l.labels()[i], lie_fmt(g.labels(), s.lhs), "0"};
                }));
    r.check("axiom-1-d2-equivariant", "Lie 2-crossed module / 1) ∂₂(g▷x) = g▷∂₂(x)",
            detail::first_mismatch(
                dg * dl,
                [&](std::size_t k) {
                    Vec a = v(k / dl), y = v(k % dl);
                    return detail::Sides{x.d2.apply(act_on(x.on_l, a, y)), act_on(x.on_e, a, x.d2.apply(y))};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({g.labels()[k / dl], l.labels()[k % dl]}), fe(s.lhs), fe(s.rhs)};
                }));
    r.check("axiom-1-d1-equivariant", "Lie 2-crossed module / 1) ∂₁(g▷u) = [g,∂₁u]",
            detail::first_mismatch(
                dg * de,
                [&](std::size_t k) {
                    Vec a = v(k / de), u = v(k % de);
                    return detail::Sides{x.d1.apply(act_on(x.on_e, a, u)), g.bracket(a, x.d1.apply(u))};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({g.labels()[k / de], e.labels()[k % de]}), lie_fmt(g.labels(), s.lhs),
                                   lie_fmt(g.labels(), s.rhs)};
                }));
    r.check("lifting-equivariance", "Lie 2-crossed module / g▷{u,v} = {g▷u,v} + {u,g▷v}",
            detail::first_mismatch(
                dg * de * de,
                [&](std::size_t k) {
                    auto ix = digits(k, {dg, de, de});
                    Vec a = v(ix[0]), u = v(ix[1]), w = v(ix[2]);
                    return detail::Sides{act_on(x.on_l, a, lift(u, w)),
                                         lift(act_on(x.on_e, a, u), w) + lift(u, act_on(x.on_e, a, w))};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    auto ix = digits(k, {dg, de, de});
                    return Witness{tuple_str({g.labels()[ix[0]], e.labels()[ix[1]], e.labels()[ix[2]]}), fl(s.lhs),
                                   fl(s.rhs)};
                }));
    r.check("axiom-2", "Lie 2-crossed module / 2) ∂₂{u,v} = [u,v] − ∂₁(u)▷v",
            detail::first_mismatch(
                de * de,
                [&](std::size_t k) {
                    Vec u = v(k / de), w = v(k % de);
                    return detail::Sides{x.d2.apply(lift(u, w)),
                                         e.bracket(u, w) - act_on(x.on_e, x.d1.apply(u), w)};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({e.labels()[k / de], e.labels()[k % de]}), fe(s.lhs), fe(s.rhs)};
                }));
    r.check("axiom-3", "Lie 2-crossed module / 3) {∂₂x, ∂₂y} = [x,y]",
            detail::first_mismatch(
                dl * dl,
                [&](std::size_t k) {
                    Vec a = v(k / dl), b = v(k % dl);
                    return detail::Sides{lift(x.d2.apply(a), x.d2.apply(b)), l.bracket(a, b)};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({l.labels()[k / dl], l.labels()[k % dl]}), fl(s.lhs), fl(s.rhs)};
                }));
    r.check("axiom-4", "Lie 2-crossed module / 4) {u,[v,w]} = {∂₂{u,v},w} − {∂₂{u,w},v}",
            detail::first_mismatch(
                de * de * de,
                [&](std::size_t k) {
                    auto ix = digits(k, {de, de, de});
                    Vec u = v(ix[0]), a = v(ix[1]), w = v(ix[2]);
                    return detail::Sides{lift(u, e.bracket(a, w)),
                                         lift(x.d2.apply(lift(u, a)), w) - lift(x.d2.apply(lift(u, w)), a)};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    auto ix = digits(k, {de, de, de});
                    return Witness{tuple_str({e.labels()[ix[0]], e.labels()[ix[1]], e.labels()[ix[2]]}), fl(s.lhs),
                                   fl(s.rhs)};
                }));
    r.check("axiom-5", "Lie 2-crossed module / 5) {[u,v],w} = ∂₁u▷{v,w} + {u,[v,w]} − ∂₁v▷{u,w} − {v,[u,w]}",
            detail::first_mismatch(
                de * de * de,
                [&](std::size_t k) {
                    auto ix = digits(k, {de, de, de});
                    Vec u = v(ix[0]), a = v(ix[1]), w = v(ix[2]);
                    Vec rhs = act_on(x.on_l, x.d1.apply(u), lift(a, w)) + lift(u, e.bracket(a, w)) -
                              act_on(x.on_l, x.d1.apply(a), lift(u, w)) - lift(a, e.bracket(u, w));
                    return detail::Sides{lift(e.bracket(u, a), w), rhs};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    auto ix = digits(k, {de, de, de});
                    return Witness{tuple_str({e.labels()[ix[0]], e.labels()[ix[1]], e.labels()[ix[2]]}), fl(s.lhs),
                                   fl(s.rhs)};
                }));
    r.check("axiom-6", "Lie 2-crossed module / 6) {∂₂x,v} + {v,∂₂x} = −∂₁(v)▷x",
            detail::first_mismatch(
                dl * de,
                [&](std::size_t k) {
                    Vec a = v(k / de), w = v(k % de);
                    return detail::Sides{lift(x.d2.apply(a), w) + lift(w, x.d2.apply(a)),
                                         act_on(x.on_l, x.d1.apply(w), a).scaled(minus)};
                },
                [&](std::size_t k, const detail::Sides& s) {
                    return Witness{tuple_str({l.labels()[k / de], e.labels()[k % de]}), fl(s.lhs), fl(s.rhs)};
                }));

    // v |>' x = -{d2 x, v}
    Trilinear dact = Trilinear::build(F, de, dl, dl, [&](Index w, Index a) {
        return lift(x.d2.apply(v(a)), v(w)).scaled(minus);
    });
    r.merge(verify_lie_xmod({l, e, x.d2, dact}), "derived-xmod");
    return r;
}

// ---- projections -----------------------------------------------------------------

FiniteGroup gl_project(const HopfAlgebra& h, std::vector<Vec> candidates)
{
    GroupLikes g = group_likes(h, std::move(candidates));
    return FiniteGroup(g.table, g.labels);
}

LieAlgebra prim_project(const HopfAlgebra& h)
{
    Primitives p = primitives(h);
    std::vector<std::string> labels;
    for (const auto& row : p.space.rows()) labels.push_back(format(h, row));
    LieAlgebra out(p.bracket, std::move(labels));
    Report r = verify_lie(out);
    if (!r.ok()) throw ClosureError("primitive bracket is not a Lie bracket");
    return out;
}

Hopf2XMod linearize_group_2xmod(const Group2XMod& x, Field f)
{
    HopfAlgebra K = group_algebra(x.L, f);
    HopfAlgebra I = group_algebra(x.E, f);
    HopfAlgebra H = group_algebra(x.G, f);
    const std::size_t ne = x.E.order();
    Trilinear lift = Trilinear::build(f, ne, ne, x.L.order(), [&](Index a, Index b) { return Vec::unit(f, x.lift[a][b]); });
    return Hopf2XMod{K,
                     I,
                     H,
                     group_algebra_hom(K, I, {x.L, x.E, x.d2}),
                     group_algebra_hom(I, H, {x.E, x.G, x.d1}),
                     group_algebra_action(H, I, x.on_E),
                     group_algebra_action(H, K, x.on_L),
                     Bilinear(std::move(lift))};
}

}  // namespace hopf2x
