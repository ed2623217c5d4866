#include "hopf2x/hopf.hpp"

#include <unordered_map>

#include "check_util.hpp"
#include "hopf2x/action.hpp"

namespace hopf2x {

namespace {

Limits g_limits;

std::string key_of(const Vec& v)
{
    std::string k;
    for (const auto& t : v.terms()) {
        k += std::to_string(t.index);
        k += ':';
        k += t.coef.str();
        k += ';';
    }
    return k;
}

Vec scalar_vec(const Scalar& s)
{
    VecBuilder vb;
    vb.add(0, s);
    return vb.build();
}

std::string tuple_of(const HopfAlgebra& h, std::initializer_list<std::size_t> idx)
{
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) s += ", ";
        s += h.label(i);
        first = false;
    }
    return s + ")";
}

}  // namespace

Limits limits() { return g_limits; }
void set_limits(const Limits& l) { g_limits = l; }

// ---- HopfAlgebra -------------------------------------------------------------

HopfAlgebra::HopfAlgebra(Data d, std::optional<Factors> factors)
{
    const std::size_t n = d.counit.size();
    if (d.labels.size() != n) throw DimensionMismatch("label count differs from dimension");
    if (d.mul.dim_a() != n || d.mul.dim_b() != n || d.mul.dim_c() != n)
        throw DimensionMismatch("multiplication tensor has the wrong shape");
    if (d.comul.cols() != n || d.comul.rows() != n * n)
        throw DimensionMismatch("comultiplication tensor has the wrong shape");
    if (d.antipode.cols() != n || d.antipode.rows() != n)
        throw DimensionMismatch("antipode matrix has the wrong shape");
    if (!d.unit.is_zero() && d.unit.terms().back().index >= n)
        throw DimensionMismatch("unit vector outside the algebra");
    for (const auto& c : d.counit)
        if (!(c.field() == d.field)) throw FieldMismatch("counit entry over the wrong field");
    impl_ = std::make_shared<const Impl>(Impl{std::move(d), std::move(factors)});
}

Vec HopfAlgebra::mul(const Vec& x, const Vec& y) const
{
    VecBuilder vb;
    mul_into(x, y, Scalar::one(field()), vb);
    return vb.build();
}

void HopfAlgebra::mul_into(const Vec& x, const Vec& y, const Scalar& c, VecBuilder& out) const
{
    impl_->data.mul.apply_into(x, y, c, out);
}

Scalar HopfAlgebra::counit(const Vec& x) const
{
    Scalar s = Scalar::zero(field());
    for (const auto& t : x.terms()) s += t.coef * impl_->data.counit[t.index];
    return s;
}

HopfAlgebra HopfAlgebra::with_antipode(LinearMap s) const
{
    Data d = impl_->data;
    d.antipode = std::move(s);
    return HopfAlgebra(std::move(d));
}

HopfAlgebra HopfAlgebra::with_mul(Bilinear m) const
{
    Data d = impl_->data;
    d.mul = std::move(m);
    return HopfAlgebra(std::move(d));
}

ActionTensor::ActionTensor(HopfAlgebra acting, HopfAlgebra carrier, Bilinear coeffs)
    : acting_(std::move(acting)), carrier_(std::move(carrier)), coeffs_(std::move(coeffs))
{
    if (coeffs_.dim_a() != acting_.dim() || coeffs_.dim_b() != carrier_.dim() || coeffs_.dim_c() != carrier_.dim())
        throw DimensionMismatch("action tensor shape does not match its algebras");
    if (!(acting_.field() == carrier_.field())) throw FieldMismatch("action between algebras over different fields");
}

// ---- HopfMorphism ------------------------------------------------------------

HopfMorphism::HopfMorphism(HopfAlgebra source, HopfAlgebra target, LinearMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map))
{
    if (!(source_.field() == target_.field())) throw FieldMismatch("morphism between algebras over different fields");
    if (map_.cols() != source_.dim() || map_.rows() != target_.dim())
        throw DimensionMismatch("morphism matrix shape does not match its algebras");
}

HopfMorphism HopfMorphism::from_dense(HopfAlgebra source, HopfAlgebra target, const DenseMatrix& m)
{
    return HopfMorphism(std::move(source), std::move(target), LinearMap::from_dense(m));
}

HopfMorphism HopfMorphism::identity(const HopfAlgebra& h)
{
    return HopfMorphism(h, h, LinearMap::identity(h.field(), h.dim()));
}

HopfMorphism HopfMorphism::after(const HopfMorphism& g) const
{
    return HopfMorphism(g.source_, target_, map_.after(g.map_));
}

// ---- Sweedler and formatting -----------------------------------------------

std::vector<SweedlerTerm> sweedler(const HopfAlgebra& h, const Vec& x, std::size_t n)
{
    std::vector<SweedlerTerm> terms;
    for (const auto& t : x.terms()) terms.push_back({t.coef, {t.index}});
    const Index d = h.dim();
    for (std::size_t slot = 1; slot < n; ++slot) {
        std::vector<SweedlerTerm> next;
        for (const auto& t : terms) {
            for (const auto& c : h.comul(t.parts.back()).terms()) {
                SweedlerTerm s{t.coef * c.coef, t.parts};
                s.parts.back() = c.index / d;
                s.parts.push_back(c.index % d);
                next.push_back(std::move(s));
            }
        }
        terms = std::move(next);
    }
    return terms;
}

Vec tensor_product_mul(const HopfAlgebra& a, const HopfAlgebra& b, const Vec& x, const Vec& y)
{
    const Index db = b.dim();
    VecBuilder vb;
    for (const auto& s : x.terms())
        for (const auto& t : y.terms()) {
            Vec l = a.mul(s.index / db, t.index / db);
            Vec r = b.mul(s.index % db, t.index % db);
            vb.add(tensor(l, r, db), s.coef * t.coef);
        }
    return vb.build();
}

namespace {

std::string coef_prefix(const Scalar& c)
{
    if (c.is_one()) return "";
    if ((-c).is_one()) return "-";
    return c.str() + "*";
}

}  // namespace

std::string format(const HopfAlgebra& h, const Vec& v)
{
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& t : v.terms()) {
        if (!s.empty()) s += " + ";
        s += coef_prefix(t.coef) + (t.index < h.dim() ? h.label(t.index) : "#" + std::to_string(t.index));
    }
    return s;
}

std::string format_tensor(const HopfAlgebra& a, const HopfAlgebra& b, const Vec& t)
{
    if (t.is_zero()) return "0";
    std::string s;
    const Index db = b.dim();
    for (const auto& term : t.terms()) {
        if (!s.empty()) s += " + ";
        s += coef_prefix(term.coef) + a.label(term.index / db) + "⊗" + b.label(term.index % db);
    }
    return s;
}

std::string format_coords(const Vec& v)
{
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& t : v.terms()) {
        if (!s.empty()) s += " + ";
        s += coef_prefix(t.coef) + "b" + std::to_string(t.index);
    }
    return s;
}

std::vector<Vec> algebra_generators(const HopfAlgebra& h)
{
    std::vector<Vec> out;
    if (const auto* f = h.factors()) {
        const HopfAlgebra& a = *f->left;
        const HopfAlgebra& b = *f->right;
        const Index db = b.dim();
        for (const auto& g : algebra_generators(a)) out.push_back(tensor(g, b.one(), db));
        for (const auto& g : algebra_generators(b)) out.push_back(tensor(a.one(), g, db));
        return out;
    }
    for (Index i = 0; i < h.dim(); ++i) out.push_back(h.basis(i));
    return out;
}

PairPlan plan_pairs(const HopfAlgebra& h)
{
    const Limits L = limits();
    const Index d = h.dim();
    PairPlan p;
    if (d <= L.exhaustive || (!h.factors() && d * d <= L.product_pairs)) {
        for (Index i = 0; i < d; ++i) p.left.push_back(h.basis(i));
        return p;
    }
    if (h.factors()) {
        p.mode = PairPlan::Mode::generators;
        p.left = algebra_generators(h);
        p.note = "on " + std::to_string(p.left.size()) + " algebra generators times the basis";
        return p;
    }
    p.mode = PairPlan::Mode::skipped;
    p.note = "dimension " + std::to_string(d) + " above the pair cap and no factorization";
    return p;
}

namespace {

std::string left_label(const HopfAlgebra& h, const PairPlan& p, std::size_t g)
{
    return p.mode == PairPlan::Mode::basis ? h.label(g) : format(h, p.left[g]);
}

}  // namespace

// ---- verification ----------------------------------------------------------

bool is_cocommutative(const HopfAlgebra& h)
{
    const Index d = h.dim();
    return kernels::first_failure(d, [&](std::size_t i) {
               VecBuilder vb;
               for (const auto& t : h.comul(i).terms()) vb.add((t.index % d) * d + t.index / d, t.coef);
               return vb.build() == h.comul(i);
           }) == d;
}

Report verify_hopf(const HopfAlgebra& h)
{
    using detail::first_mismatch;
    using detail::Sides;
    Report r;
    const Index d = h.dim();
    const Field F = h.field();
    const Limits L = limits();
    auto fmt = [&](const Vec& v) { return format(h, v); };
    auto fmt2 = [&](const Vec& v) { return format_tensor(h, h, v); };
    auto fmt3 = [&](const Vec& v) {
        if (v.is_zero()) return std::string("0");
        std::string s;
        for (const auto& t : v.terms()) {
            if (!s.empty()) s += " + ";
            s += coef_prefix(t.coef) + h.label(t.index / (d * d)) + "⊗" + h.label(t.index / d % d) + "⊗" +
                 h.label(t.index % d);
        }
        return s;
    };

    if (d <= L.exhaustive) {
        r.check("associativity", "Hopf algebra / associativity",
                first_mismatch(
                    d * d * d,
                    [&](std::size_t k) {
                        auto ix = detail::digits(k, {d, d, d});
                        return Sides{h.mul(h.mul(ix[0], ix[1]), h.basis(ix[2])),
                                     h.mul(h.basis(ix[0]), h.mul(ix[1], ix[2]))};
                    },
                    [&](std::size_t k, const Sides& s) {
                        auto ix = detail::digits(k, {d, d, d});
                        return Witness{tuple_of(h, {ix[0], ix[1], ix[2]}), fmt(s.lhs), fmt(s.rhs)};
                    }));
    } else if (const auto* f = h.factors()) {
        Report fr = verify_hopf(*f->left);
        fr.merge(verify_hopf(*f->right));
        if (f->kind == HopfAlgebra::Factors::Kind::smash) fr.merge(verify_module_bialgebra(*f->action));
        if (fr.ok()) {
            r.pass("associativity", "Hopf algebra / associativity", "via factorization");
        } else {
            const CheckRecord* bad = nullptr;
            for (const auto& rec : fr.records())
                if (rec.status == Status::fail && !bad) bad = &rec;
            r.fail("associativity", "Hopf algebra / associativity", *bad->witness,
                   "factor check " + bad->id + " failed");
        }
    } else {
        r.skip("associativity", "Hopf algebra / associativity",
               "dimension " + std::to_string(d) + " above exhaustive cap and no factorization");
    }

    r.check("unit", "Hopf algebra / unit laws",
            first_mismatch(
                2 * d,
                [&](std::size_t k) {
                    Index i = k % d;
                    Vec lhs = k < d ? h.mul(h.one(), h.basis(i)) : h.mul(h.basis(i), h.one());
                    return Sides{lhs, h.basis(i)};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{(k < d ? "1·" : "·1 at ") + h.label(k % d), fmt(s.lhs), fmt(s.rhs)};
                }));

    r.check("coassociativity", "Hopf algebra / coassociativity",
            first_mismatch(
                d,
                [&](std::size_t i) {
                    VecBuilder l, rr;
                    for (const auto& t : h.comul(i).terms()) {
                        Index j = t.index / d, k = t.index % d;
                        for (const auto& u : h.comul(j).terms()) l.add(u.index * d + k, t.coef * u.coef);
                        for (const auto& u : h.comul(k).terms()) rr.add(j * d * d + u.index, t.coef * u.coef);
                    }
                    return Sides{l.build(), rr.build()};
                },
                [&](std::size_t i, const Sides& s) { return Witness{h.label(i), fmt3(s.lhs), fmt3(s.rhs)}; }));

    r.check("counit", "Hopf algebra / counit laws",
            first_mismatch(
                2 * d,
                [&](std::size_t k) {
                    Index i = k % d;
                    VecBuilder vb;
                    for (const auto& t : h.comul(i).terms()) {
                        Index a = t.index / d, b = t.index % d;
                        if (k < d)
                            vb.add(b, t.coef * h.counit(a));
                        else
                            vb.add(a, t.coef * h.counit(b));
                    }
                    return Sides{vb.build(), h.basis(i)};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{(k < d ? "(ε⊗id)δ at " : "(id⊗ε)δ at ") + h.label(k % d), fmt(s.lhs),
                                   fmt(s.rhs)};
                }));

    const PairPlan plan = plan_pairs(h);
    const std::size_t np = plan.left.size() * d;
    auto pair_at = [&](std::size_t k) {
        return "(" + left_label(h, plan, k / d) + ", " + h.label(k % d) + ")";
    };
    if (plan.mode == PairPlan::Mode::skipped) {
        r.skip("comul-algebra-map", "Hopf algebra / δ is an algebra map", plan.note);
        r.skip("counit-algebra-map", "Hopf algebra / ε is an algebra map", plan.note);
    } else {
        r.check("comul-algebra-map", "Hopf algebra / δ is an algebra map",
                first_mismatch(
                    np + 1,
                    [&](std::size_t k) {
                        if (k == np) return Sides{h.comul(h.one()), tensor(h.one(), h.one(), d)};
                        const Vec& x = plan.left[k / d];
                        Vec y = h.basis(k % d);
                        return Sides{h.comul(h.mul(x, y)), tensor_product_mul(h, h, h.comul(x), h.comul(y))};
                    },
                    [&](std::size_t k, const Sides& s) {
                        return Witness{k == np ? std::string("δ(1)") : pair_at(k), fmt2(s.lhs), fmt2(s.rhs)};
                    }),
                plan.note);
        r.check("counit-algebra-map", "Hopf algebra / ε is an algebra map",
                first_mismatch(
                    np + 1,
                    [&](std::size_t k) {
                        if (k == np) return Sides{scalar_vec(h.counit(h.one())), scalar_vec(Scalar::one(F))};
                        const Vec& x = plan.left[k / d];
                        Index j = k % d;
                        return Sides{scalar_vec(h.counit(h.mul(x, h.basis(j)))),
                                     scalar_vec(h.counit(x) * h.counit(j))};
                    },
                    [&](std::size_t k, const Sides& s) {
                        return Witness{k == np ? std::string("ε(1)") : pair_at(k), s.lhs.coef(0, F).str(),
                                       s.rhs.coef(0, F).str()};
                    }),
                plan.note);
    }

    r.check("antipode", "Hopf algebra / antipode convolution law",
            first_mismatch(
                2 * d,
                [&](std::size_t k) {
                    Index i = k % d;
                    VecBuilder vb;
                    for (const auto& t : h.comul(i).terms()) {
                        Index a = t.index / d, b = t.index % d;
                        if (k < d)
                            h.mul_into(h.antipode(a), h.basis(b), t.coef, vb);
                        else
                            h.mul_into(h.basis(a), h.antipode(b), t.coef, vb);
                    }
                    return Sides{vb.build(), h.one().scaled(h.counit(i))};
                },
                [&](std::size_t k, const Sides& s) {
                    return Witness{(k < d ? "ΣS(x')x'' at " : "Σx'S(x'') at ") + h.label(k % d), fmt(s.lhs),
                                   fmt(s.rhs)};
                }));

    if (h.cocommutative_flag()) {
        r.check("cocommutativity", "Hopf algebra / cocommutativity",
                first_mismatch(
                    d,
                    [&](std::size_t i) {
                        VecBuilder vb;
                        for (const auto& t : h.comul(i).terms()) vb.add((t.index % d) * d + t.index / d, t.coef);
                        return Sides{vb.build(), h.comul(i)};
                    },
                    [&](std::size_t i, const Sides& s) { return Witness{h.label(i), fmt2(s.lhs), fmt2(s.rhs)}; }));
    }
    return r;
}

Report verify_morphism(const HopfMorphism& f)
{
    using detail::first_mismatch;
    using detail::Sides;
    const HopfAlgebra& a = f.source();
    const HopfAlgebra& b = f.target();
    if (!(a.field() == b.field())) throw FieldMismatch("morphism between algebras over different fields");
    const Index da = a.dim(), db = b.dim();
    Report r;
    auto fb = [&](const Vec& v) { return format(b, v); };

    const PairPlan plan = plan_pairs(a);
    if (plan.mode == PairPlan::Mode::skipped) {
        r.skip("multiplicative", "Hopf morphism / f∘μ = μ∘(f⊗f)", plan.note);
    } else {
        r.check("multiplicative", "Hopf morphism / f∘μ = μ∘(f⊗f)",
                first_mismatch(
                    plan.left.size() * da,
                    [&](std::size_t k) {
                        const Vec& x = plan.left[k / da];
                        Index j = k % da;
                        return Sides{f(a.mul(x, a.basis(j))), b.mul(f(x), f(j))};
                    },
                    [&](std::size_t k, const Sides& s) {
                        return Witness{"(" + left_label(a, plan, k / da) + ", " + a.label(k % da) + ")", fb(s.lhs),
                                       fb(s.rhs)};
                    }),
                plan.note);
    }
    {
        Vec lhs = f(a.one());
        std::optional<Witness> w;
        if (!(lhs == b.one())) w = Witness{"1", fb(lhs), fb(b.one())};
        r.check("unit", "Hopf morphism / f(1) = 1", w);
    }
    r.check("comultiplicative", "Hopf morphism / (f⊗f)∘δ = δ∘f",
            first_mismatch(
                da,
                [&](std::size_t i) {
                    VecBuilder vb;
                    for (const auto& t : a.comul(i).terms())
                        vb.add(tensor(f(t.index / da), f(t.index % da), db), t.coef);
                    return Sides{vb.build(), b.comul(f(i))};
                },
                [&](std::size_t i, const Sides& s) {
                    return Witness{a.label(i), format_tensor(b, b, s.lhs), format_tensor(b, b, s.rhs)};
                }));
    r.check("counit", "Hopf morphism / ε∘f = ε",
            first_mismatch(
                da, [&](std::size_t i) { return Sides{scalar_vec(b.counit(f(i))), scalar_vec(a.counit(i))}; },
                [&](std::size_t i, const Sides& s) {
                    return Witness{a.label(i), s.lhs.coef(0, a.field()).str(), s.rhs.coef(0, a.field()).str()};
                }));
    r.check("antipode", "Hopf morphism / f∘S = S∘f",
            first_mismatch(
                da, [&](std::size_t i) { return Sides{f(a.antipode(i)), b.antipode(f(i))}; },
                [&](std::size_t i, const Sides& s) { return Witness{a.label(i), fb(s.lhs), fb(s.rhs)}; }));
    return r;
}

// ---- constructions -----------------------------------------------------------

HopfAlgebra trivial_hopf(Field f)
{
    HopfAlgebra::Data d;
    d.field = f;
    d.labels = {"1"};
    d.mul = Bilinear(Trilinear::build(f, 1, 1, 1, [&](Index, Index) { return Vec::unit(f, 0); }));
    d.unit = Vec::unit(f, 0);
    d.comul = LinearMap(f, 1, {Vec::unit(f, 0)});
    d.counit = {Scalar::one(f)};
    d.antipode = LinearMap::identity(f, 1);
    d.cocommutative = true;
    return HopfAlgebra(std::move(d));
}

HopfMorphism zero_morphism(const HopfAlgebra& a, const HopfAlgebra& b)
{
    if (!(a.field() == b.field())) throw FieldMismatch("zero morphism between different fields");
    std::vector<Vec> cols;
    cols.reserve(a.dim());
    for (Index i = 0; i < a.dim(); ++i) cols.push_back(b.one().scaled(a.counit(i)));
    return HopfMorphism(a, b, LinearMap(a.field(), b.dim(), std::move(cols)));
}

HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b)
{
    if (!(a.field() == b.field())) throw FieldMismatch("tensor product of algebras over different fields");
    const Field F = a.field();
    const Index da = a.dim(), db = b.dim(), d = da * db;
    const Limits L = limits();
    HopfAlgebra::Data data;
    data.field = F;
    for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < db; ++j) data.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    data.mul = Bilinear(F, d, d, d, [a, b, db](Index x, Index y) {
                   return tensor(a.mul(x / db, y / db), b.mul(x % db, y % db), db);
               }).cached(L.product_pairs);
    data.unit = tensor(a.one(), b.one(), db);
    data.comul = LinearMap::from_function(F, d * d, d, [&](Index x) {
        VecBuilder vb;
        for (const auto& s : a.comul(x / db).terms())
            for (const auto& t : b.comul(x % db).terms()) {
                Index left = (s.index / da) * db + t.index / db;
                Index right = (s.index % da) * db + t.index % db;
                vb.add(left * d + right, s.coef * t.coef);
            }
        return vb.build();
    });
    for (Index x = 0; x < d; ++x) data.counit.push_back(a.counit(x / db) * b.counit(x % db));
    data.antipode = tensor_map(a.data().antipode, b.data().antipode);
    data.cocommutative = a.cocommutative_flag() && b.cocommutative_flag();
    HopfAlgebra::Factors fac{HopfAlgebra::Factors::Kind::tensor, std::make_shared<const HopfAlgebra>(a),
                             std::make_shared<const HopfAlgebra>(b), nullptr};
    return HopfAlgebra(std::move(data), std::move(fac));
}

HopfMorphism tensor_projection(const HopfAlgebra& product, int slot)
{
    const auto* f = product.factors();
    if (!f || f->kind != HopfAlgebra::Factors::Kind::tensor)
        throw PreconditionError("tensor_projection needs an algebra built by tensor_hopf");
    if (slot != 1 && slot != 2) throw PreconditionError("tensor_projection slot must be 1 or 2");
    const HopfAlgebra& a = *f->left;
    const HopfAlgebra& b = *f->right;
    const Index db = b.dim();
    const HopfAlgebra& target = slot == 1 ? a : b;
    std::vector<Vec> cols;
    for (Index x = 0; x < product.dim(); ++x) {
        if (slot == 1)
            cols.push_back(a.basis(x / db).scaled(b.counit(x % db)));
        else
            cols.push_back(b.basis(x % db).scaled(a.counit(x / db)));
    }
    return HopfMorphism(product, target, LinearMap(product.field(), target.dim(), std::move(cols)));
}

Vec adjoint(const HopfAlgebra& h, const Vec& x, const Vec& y)
{
    const Index d = h.dim();
    VecBuilder vb;
    for (const auto& s : x.terms())
        for (const auto& t : h.comul(s.index).terms())
            h.mul_into(h.mul(h.basis(t.index / d), y), h.antipode(t.index % d), s.coef * t.coef, vb);
    return vb.build();
}

ActionTensor adjoint_action(const HopfAlgebra& h)
{
    if (!is_cocommutative(h))
        throw PreconditionError("adjoint action requires a cocommutative Hopf algebra");
    const Index d = h.dim();
    Bilinear ad(h.field(), d, d, d, [h](Index x, Index y) { return adjoint(h, h.basis(x), h.basis(y)); });
    return ActionTensor(h, h, ad.cached(limits().product_pairs));
}

// ---- kernels -------------------------------------------------------------------

namespace {

void require_kernel_size(std::size_t d, const char* what)
{
    if (d > limits().kernel)
        throw DimensionCapError(std::string(what) + ": source dimension " + std::to_string(d) +
                                " exceeds the kernel-mode cap " + std::to_string(limits().kernel));
}

// x -> sum x' (x) g(x'') - x (x) h(x'') summed appropriately; see callers.
Subspace sweedler_kernel(const HopfAlgebra& a, std::size_t db, const std::function<Vec(Index)>& right_of,
                         bool subtract_unit, const Vec& unit_b)
{
    const Index da = a.dim();
    const Field F = a.field();
    LinearMap m = LinearMap::from_function(F, da * db, da, [&](Index i) {
        VecBuilder vb;
        for (const auto& t : a.comul(i).terms())
            vb.add(tensor(a.basis(t.index / da), right_of(t.index % da), db), t.coef);
        if (subtract_unit) vb.add(tensor(a.basis(i), unit_b, db), -Scalar::one(F));
        return vb.build();
    });
    return kernel_of(m);
}

}  // namespace

void check_sub_hopf(const HopfAlgebra& h, const Subspace& a)
{
    if (a.ambient() != h.dim()) throw DimensionMismatch("subspace does not live in this algebra");
    if (!a.contains(h.one())) throw ClosureError("subspace does not contain the unit");
    const auto& rows = a.rows();
    const std::size_t r = rows.size();
    std::size_t bad = kernels::first_failure(r * r, [&](std::size_t k) {
        return a.contains(h.mul(rows[k / r], rows[k % r]));
    });
    if (bad != r * r) throw ClosureError("subspace is not closed under multiplication");
    for (const auto& v : rows) {
        try {
            a.tensor_coordinates(h.comul(v), a);
        } catch (const NotInSubspace&) {
            throw ClosureError("comultiplication leaves the subspace tensor square");
        }
        if (!a.contains(h.antipode(v))) throw ClosureError("subspace is not closed under the antipode");
    }
}

bool is_normal_in(const HopfAlgebra& h, const Subspace& over, const Subspace& a)
{
    const auto& xs = over.rows();
    const auto& vs = a.rows();
    const std::size_t n = xs.size() * vs.size();
    return kernels::first_failure(n, [&](std::size_t k) {
               return a.contains(adjoint(h, xs[k / vs.size()], vs[k % vs.size()]));
           }) == n;
}

bool is_normal(const HopfAlgebra& h, const Subspace& a)
{
    const std::size_t d = h.dim();
    const auto& vs = a.rows();
    const std::size_t n = d * vs.size();
    return kernels::first_failure(n, [&](std::size_t k) {
               return a.contains(adjoint(h, h.basis(k / vs.size()), vs[k % vs.size()]));
           }) == n;
}

Subspace hopf_kernel(const HopfMorphism& f)
{
    const HopfAlgebra& a = f.source();
    require_kernel_size(a.dim(), "hopf_kernel");
    if (!is_cocommutative(a)) throw PreconditionError("hopf_kernel requires a cocommutative source");
    Subspace k = sweedler_kernel(a, f.target().dim(), [&](Index i) { return f(i); }, true, f.target().one());
    check_sub_hopf(a, k);
    if (!is_normal(a, k)) throw ClosureError("Hopf kernel is not normal");
    return k;
}

Subspace hopf_kernel_two_sided(const HopfMorphism& f)
{
    const HopfAlgebra& a = f.source();
    const HopfAlgebra& b = f.target();
    require_kernel_size(a.dim(), "hopf_kernel_two_sided");
    const Index da = a.dim(), db = b.dim();
    const Field F = a.field();
    LinearMap m = LinearMap::from_function(F, da * db * da, da, [&](Index i) {
        VecBuilder vb;
        for (const auto& t : sweedler(a, a.basis(i), 3)) {
            Vec mid = tensor(a.basis(t.parts[0]), f(t.parts[1]), db);
            vb.add(tensor(mid, a.basis(t.parts[2]), da), t.coef);
        }
        for (const auto& t : a.comul(i).terms())
            vb.add(tensor(tensor(a.basis(t.index / da), b.one(), db), a.basis(t.index % da), da), -t.coef);
        return vb.build();
    });
    return kernel_of(m);
}

Subspace equalizer(const HopfMorphism& f, const HopfMorphism& g)
{
    if (!f.source().same_as(g.source()) && f.source().dim() != g.source().dim())
        throw PreconditionError("equalizer: morphisms have different sources");
    if (f.target().dim() != g.target().dim()) throw PreconditionError("equalizer: morphisms have different targets");
    const HopfAlgebra& a = f.source();
    require_kernel_size(a.dim(), "equalizer");
    if (!is_cocommutative(a)) throw PreconditionError("equalizer requires a cocommutative source");
    Subspace k = sweedler_kernel(a, f.target().dim(), [&](Index i) { return f(i) - g(i); }, false, {});
    check_sub_hopf(a, k);
    return k;
}

HopfAlgebra sub_hopf(const HopfAlgebra& h, const Subspace& a)
{
    check_sub_hopf(h, a);
    const auto& rows = a.rows();
    const std::size_t r = rows.size();
    const Field F = h.field();
    HopfAlgebra::Data d;
    d.field = F;
    for (const auto& v : rows) {
        if (v.size() == 1 && v.terms()[0].coef.is_one())
            d.labels.push_back(h.label(v.terms()[0].index));
        else
            d.labels.push_back(format(h, v));
    }
    d.mul = Bilinear(Trilinear::build(F, r, r, r, [&](Index i, Index j) { return a.coordinates(h.mul(rows[i], rows[j])); }));
    d.unit = a.coordinates(h.one());
    std::vector<Vec> comul, anti;
    for (const auto& v : rows) {
        comul.push_back(a.tensor_coordinates(h.comul(v), a));
        anti.push_back(a.coordinates(h.antipode(v)));
        d.counit.push_back(h.counit(v));
    }
    d.comul = LinearMap(F, r * r, std::move(comul));
    d.antipode = LinearMap(F, r, std::move(anti));
    d.cocommutative = h.cocommutative_flag();
    return HopfAlgebra(std::move(d));
}

// ---- Gl and Prim ---------------------------------------------------------------

GroupLikes group_likes(const HopfAlgebra& h, std::vector<Vec> candidates)
{
    const Index d = h.dim();
    if (candidates.empty())
        for (Index i = 0; i < d; ++i) candidates.push_back(h.basis(i));
    GroupLikes g;
    std::unordered_map<std::string, std::size_t> where;
    for (auto& c : candidates) {
        if (!(h.comul(c) == tensor(c, c, d)) || !h.counit(c).is_one()) continue;
        if (where.count(key_of(c))) continue;
        where.emplace(key_of(c), g.elements.size());
        g.labels.push_back(c.size() == 1 && c.terms()[0].coef.is_one() ? h.label(c.terms()[0].index) : format(h, c));
        g.elements.push_back(std::move(c));
    }
    const std::size_t n = g.elements.size();
    auto find = [&](const Vec& v) {
        auto it = where.find(key_of(v));
        if (it == where.end()) throw ClosureError("group-like candidates are not closed: " + format(h, v));
        return it->second;
    };
    g.identity = find(h.one());
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.table[i][j] = find(h.mul(g.elements[i], g.elements[j]));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t inv = find(h.antipode(g.elements[i]));
        if (g.table[i][inv] != g.identity) throw ClosureError("antipode of a group-like is not its inverse");
        g.inverse.push_back(inv);
    }
    return g;
}

Primitives primitives(const HopfAlgebra& h)
{
    const Index d = h.dim();
    require_kernel_size(d, "primitives");
    const Field F = h.field();
    LinearMap m = LinearMap::from_function(F, d * d, d, [&](Index i) {
        VecBuilder vb;
        vb.add(h.comul(i));
        vb.add(tensor(h.basis(i), h.one(), d), -Scalar::one(F));
        vb.add(tensor(h.one(), h.basis(i), d), -Scalar::one(F));
        return vb.build();
    });
    Primitives p{kernel_of(m), {}};
    const auto& rows = p.space.rows();
    const std::size_t r = rows.size();
    p.bracket = Trilinear::build(F, r, r, r, [&](Index i, Index j) {
        Vec c = h.mul(rows[i], rows[j]) - h.mul(rows[j], rows[i]);
        try {
            return p.space.coordinates(c);
        } catch (const NotInSubspace&) {
            throw ClosureError("commutator of primitives is not primitive");
        }
    });
    return p;
}

}  // namespace hopf2x
