#include "hopf2x/simplicial.hpp"

#include "check_util.hpp"
#include "hopf2x/action.hpp"
#include "hopf2x/peiffer.hpp"

namespace hopf2x {

namespace {

std::string map_name(char kind, std::size_t k, std::size_t i)
{
    return std::string(1, kind) + std::to_string(i) + "@" + std::to_string(k);
}

// First column where two composites differ.
std::optional<Witness> compare_maps(const HopfAlgebra& src, const HopfAlgebra& dst, const LinearMap& a,
                                    const LinearMap& b, const std::string& where)
{
    std::size_t n = a.cols();
    std::size_t k = kernels::first_failure(n, [&](std::size_t c) { return a.column(c) == b.column(c); });
    if (k == n) return std::nullopt;
    return Witness{where + " at " + src.label(k), format(dst, a.column(k)), format(dst, b.column(k))};
}

}  // namespace

void check_shape(const TruncatedSimplicialHopf& t)
{
    if (t.levels.empty()) throw PreconditionError("simplicial object without levels");
    const std::size_t n = t.truncation();
    if (t.faces.size() != n + 1 || t.degens.size() != n + 1)
        throw DimensionMismatch("face/degeneracy lists do not match the truncation level");
    if (!t.faces[0].empty() || !t.degens[0].empty()) throw DimensionMismatch("level 0 carries no faces or degeneracies");
    for (std::size_t k = 1; k <= n; ++k) {
        if (t.faces[k].size() != k + 1) throw DimensionMismatch("level " + std::to_string(k) + " needs k+1 faces");
        if (t.degens[k].size() != k) throw DimensionMismatch("level " + std::to_string(k) + " needs k degeneracies");
        for (const auto& f : t.faces[k])
            if (f.source().dim() != t.levels[k].dim() || f.target().dim() != t.levels[k - 1].dim())
                throw DimensionMismatch("face at level " + std::to_string(k) + " has the wrong shape");
        for (const auto& s : t.degens[k])
            if (s.source().dim() != t.levels[k - 1].dim() || s.target().dim() != t.levels[k].dim())
                throw DimensionMismatch("degeneracy into level " + std::to_string(k) + " has the wrong shape");
    }
}

Report verify_simplicial(const TruncatedSimplicialHopf& t, bool morphisms)
{
    check_shape(t);
    const std::size_t n = t.truncation();
    const auto& H = t.levels;
    Report r;

    if (morphisms) {
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t i = 0; i <= k; ++i) r.merge(verify_morphism(t.d(k, i)), map_name('d', k, i));
            for (std::size_t j = 0; j < k; ++j) r.merge(verify_morphism(t.s(k, j)), map_name('s', k, j));
        }
    }

    // Each family reports the first failing identity in (k, i, j) order.
    auto family = [&](const std::string& id, const std::string& anchor, auto&& each) {
        std::optional<Witness> w;
        each([&](const HopfAlgebra& src, const HopfAlgebra& dst, const LinearMap& a, const LinearMap& b,
                 const std::string& where) {
            if (!w) w = compare_maps(src, dst, a, b, where);
        });
        r.check(id, anchor, w);
    };

    family("face-face", "simplicial identities / d_i d_j = d_{j-1} d_i (i<j)", [&](auto&& cmp) {
        for (std::size_t k = 2; k <= n; ++k)
            for (std::size_t j = 1; j <= k; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    cmp(H[k], H[k - 2], t.d(k - 1, i).map().after(t.d(k, j).map()),
                        t.d(k - 1, j - 1).map().after(t.d(k, i).map()),
                        "d" + std::to_string(i) + "d" + std::to_string(j) + "@" + std::to_string(k));
    });
    family("degeneracy-degeneracy", "simplicial identities / s_i s_j = s_{j+1} s_i (i<=j)", [&](auto&& cmp) {
        for (std::size_t k = 0; k + 2 <= n; ++k)
            for (std::size_t j = 0; j <= k; ++j)
                for (std::size_t i = 0; i <= j; ++i)
                    cmp(H[k], H[k + 2], t.s(k + 2, i).map().after(t.s(k + 1, j).map()),
                        t.s(k + 2, j + 1).map().after(t.s(k + 1, i).map()),
                        "s" + std::to_string(i) + "s" + std::to_string(j) + "@" + std::to_string(k));
    });
    family("face-degeneracy-below", "simplicial identities / d_i s_j = s_{j-1} d_i (i<j)", [&](auto&& cmp) {
        for (std::size_t k = 1; k + 1 <= n; ++k)
            for (std::size_t j = 1; j <= k; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    cmp(H[k], H[k], t.d(k + 1, i).map().after(t.s(k + 1, j).map()),
                        t.s(k, j - 1).map().after(t.d(k, i).map()),
                        "d" + std::to_string(i) + "s" + std::to_string(j) + "@" + std::to_string(k));
    });
    family("face-degeneracy-identity", "simplicial identities / d_j s_j = d_{j+1} s_j = id", [&](auto&& cmp) {
        for (std::size_t k = 0; k + 1 <= n; ++k) {
            LinearMap id = LinearMap::identity(H[k].field(), H[k].dim());
            for (std::size_t j = 0; j <= k; ++j) {
                cmp(H[k], H[k], t.d(k + 1, j).map().after(t.s(k + 1, j).map()), id,
                    "d" + std::to_string(j) + "s" + std::to_string(j) + "@" + std::to_string(k));
                cmp(H[k], H[k], t.d(k + 1, j + 1).map().after(t.s(k + 1, j).map()), id,
                    "d" + std::to_string(j + 1) + "s" + std::to_string(j) + "@" + std::to_string(k));
            }
        }
    });
    family("face-degeneracy-above", "simplicial identities / d_i s_j = s_j d_{i-1} (i>j+1)", [&](auto&& cmp) {
        for (std::size_t k = 1; k + 1 <= n; ++k)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = j + 2; i <= k + 1; ++i)
                    cmp(H[k], H[k], t.d(k + 1, i).map().after(t.s(k + 1, j).map()),
                        t.s(k, j).map().after(t.d(k, i - 1).map()),
                        "d" + std::to_string(i) + "s" + std::to_string(j) + "@" + std::to_string(k));
    });
    return r;
}

TruncatedSimplicialHopf constant_simplicial(const HopfAlgebra& h, std::size_t n)
{
    TruncatedSimplicialHopf t;
    t.levels.assign(n + 1, h);
    t.faces.resize(n + 1);
    t.degens.resize(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        t.faces[k].assign(k + 1, HopfMorphism::identity(h));
        t.degens[k].assign(k, HopfMorphism::identity(h));
    }
    return t;
}

// ---- Moore complex -------------------------------------------------------------

LinearMap generator_map_f(const TruncatedSimplicialHopf& t, std::size_t k, std::size_t i)
{
    if (k == 0 || k > t.truncation() || i >= k)
        throw PreconditionError("generator map f_" + std::to_string(i) + " undefined at level " + std::to_string(k));
    const HopfAlgebra& h = t.levels[k];
    const HopfMorphism& d = t.d(k, i);
    const HopfMorphism& s = t.s(k, i);
    const Index dim = h.dim();
    std::vector<Vec> cols(dim);
    kernels::for_each_index(dim, [&](std::size_t x) {
        VecBuilder vb;
        for (const auto& term : h.comul(x).terms())
            h.mul_into(h.basis(term.index / dim), s(d(h.antipode(term.index % dim))), term.coef, vb);
        cols[x] = vb.build();
    });
    return LinearMap(h.field(), dim, std::move(cols));
}

LinearMap moore_projection(const TruncatedSimplicialHopf& t, std::size_t k)
{
    const HopfAlgebra& h = t.levels.at(k);
    LinearMap p = LinearMap::identity(h.field(), h.dim());
    for (std::size_t i = 0; i < k; ++i) p = generator_map_f(t, k, i).after(p);
    return p;
}

namespace {

Subspace kernel_mode_term(const TruncatedSimplicialHopf& t, std::size_t k)
{
    const HopfAlgebra& h = t.levels[k];
    Subspace nh = Subspace::full(h.field(), h.dim());
    for (std::size_t i = 0; i < k; ++i) nh = intersect(nh, hopf_kernel(t.d(k, i)));
    return nh;
}

// The Hopf kernel condition sum v' (x) d_i(v'') = v (x) 1 for i < k on the rows.
std::optional<Witness> hker_condition(const TruncatedSimplicialHopf& t, std::size_t k, const Subspace& nh)
{
    const HopfAlgebra& h = t.levels[k];
    const HopfAlgebra& lo = t.levels[k - 1];
    const Index dim = h.dim();
    const auto& rows = nh.rows();
    const std::size_t n = rows.size() * k;
    return detail::first_mismatch(
        n,
        [&](std::size_t c) {
            const Vec& v = rows[c / k];
            const HopfMorphism& d = t.d(k, c % k);
            VecBuilder vb;
            const Vec dv = h.comul(v);
            for (const auto& term : dv.terms())
                vb.add(tensor(h.basis(term.index / dim), d(term.index % dim), lo.dim()), term.coef);
            return detail::Sides{vb.build(), tensor(v, lo.one(), lo.dim())};
        },
        [&](std::size_t c, const detail::Sides& s) {
            return Witness{"row " + std::to_string(c / k) + ", d" + std::to_string(c % k), format_tensor(h, lo, s.lhs),
                           format_tensor(h, lo, s.rhs)};
        });
}

}  // namespace

MooreComplex moore_complex(const TruncatedSimplicialHopf& t, MooreMode mode)
{
    check_shape(t);
    const std::size_t n = t.truncation();
    const Limits L = limits();
    MooreComplex m;
    m.terms.push_back(Subspace::full(t.levels[0].field(), t.levels[0].dim()));
    m.boundaries.emplace_back();
    for (std::size_t k = 1; k <= n; ++k) {
        const std::string lvl = std::to_string(k);
        const bool kernel_ok = t.levels[k].dim() <= L.kernel;
        std::optional<Subspace> by_kernel, by_projection;
        if (mode == MooreMode::kernel || (mode == MooreMode::both && kernel_ok)) by_kernel = kernel_mode_term(t, k);
        if (mode != MooreMode::kernel) {
            by_projection = image_of(moore_projection(t, k));
            m.report.check("projection-in-kernel-" + lvl, "Moore complex / projection image satisfies HKer(d_i)",
                           hker_condition(t, k, *by_projection));
        }
        if (mode == MooreMode::both) {
            if (by_kernel) {
                std::optional<Witness> w;
                if (!(*by_kernel == *by_projection))
                    w = Witness{"NH_" + lvl, "kernel dim " + std::to_string(by_kernel->dim()),
                                "projection dim " + std::to_string(by_projection->dim())};
                m.report.check("mode-agreement-" + lvl, "Moore complex / kernel and projection modes agree", w);
            } else {
                m.report.skip("mode-agreement-" + lvl, "Moore complex / kernel and projection modes agree",
                              "dimension " + std::to_string(t.levels[k].dim()) + " above the kernel-mode cap");
            }
        }
        m.terms.push_back(by_kernel ? *by_kernel : *by_projection);

        const Subspace& below = m.terms[k - 1];
        const HopfMorphism& d = t.d(k, k);
        std::vector<Vec> cols;
        std::optional<Witness> w;
        for (const auto& v : m.terms[k].rows()) {
            Vec image = d(v);
            try {
                cols.push_back(below.coordinates(image));
            } catch (const NotInSubspace&) {
                if (!w) w = Witness{format(t.levels[k], v), format(t.levels[k - 1], image), "an element of NH_" +
                                                                                             std::to_string(k - 1)};
                cols.emplace_back();
            }
        }
        m.report.check("boundary-well-defined-" + lvl, "Moore complex / d_k maps NH_k into NH_{k-1}", w);
        m.boundaries.emplace_back(t.levels[k].field(), below.dim(), std::move(cols));
    }
    return m;
}

Report verify_normal_chain(const MooreComplex& m, const TruncatedSimplicialHopf& t)
{
    const std::size_t n = m.terms.size() - 1;
    Report r;
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        // The zero map NH_{k+1} -> NH_{k-1} in coordinates: v -> eps(v) 1.
        const Subspace& lo = m.terms[k - 1];
        const Vec one = lo.coordinates(t.levels[k - 1].one());
        LinearMap comp = m.boundaries[k].after(m.boundaries[k + 1]);
        const auto& rows = m.terms[k + 1].rows();
        std::optional<Witness> w;
        for (std::size_t c = 0; c < rows.size() && !w; ++c) {
            Vec want = one.scaled(t.levels[k + 1].counit(rows[c]));
            if (!(comp.column(c) == want))
                w = Witness{format(t.levels[k + 1], rows[c]), format_coords(comp.column(c)), format_coords(want)};
        }
        r.check("composite-zero-" + std::to_string(k), "normal chain complex / ∂_k∂_{k+1} is the zero map", w);
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const Subspace& lo = m.terms[k - 1];
        LinearMap incl = lo.inclusion();
        Subspace image = image_of(incl.after(m.boundaries[k]));
        std::optional<Witness> w;
        try {
            check_sub_hopf(t.levels[k - 1], image);
            if (!is_normal_in(t.levels[k - 1], lo, image))
                w = Witness{"∂_" + std::to_string(k) + "(NH_" + std::to_string(k) + ")", "not normal",
                            "normal in NH_" + std::to_string(k - 1)};
        } catch (const ClosureError& e) {
            w = Witness{"∂_" + std::to_string(k) + "(NH_" + std::to_string(k) + ")", e.what(), "sub-Hopf algebra"};
        }
        r.check("image-normal-" + std::to_string(k), "normal chain complex / image of ∂_k is normal", w);
    }
    return r;
}

bool moore_length_at_most(const MooreComplex& m, std::size_t length)
{
    for (std::size_t i = length + 1; i < m.terms.size(); ++i)
        if (m.terms[i].dim() != 1) return false;
    return true;
}

// ---- decomposition -------------------------------------------------------------

Report decomposition_check(const TruncatedSimplicialHopf& t, std::size_t k)
{
    check_shape(t);
    if (k > t.truncation()) throw PreconditionError("decomposition level above the truncation");
    const Field F = t.levels[0].field();
    Report r;

    std::vector<std::size_t> nh;
    for (std::size_t m = 0; m <= k; ++m)
        nh.push_back(m == 0 ? t.levels[0].dim() : image_of(moore_projection(t, m)).dim());
    std::size_t product = 1;
    std::string formula;
    for (const auto& a : enumerate_s(k)) {
        product *= nh[k - a.length()];
        formula += (formula.empty() ? "" : "·") + std::to_string(nh[k - a.length()]);
    }
    {
        std::optional<Witness> w;
        if (product != t.levels[k].dim())
            w = Witness{"H_" + std::to_string(k), std::to_string(t.levels[k].dim()), formula + " = " +
                                                                                     std::to_string(product)};
        r.check("dimension-count", "simplicial decomposition / dim H_k = Π dim NH_{k-#α}", w, formula);
    }

    // V(j, m) = the intersection of HKer(d_i) over i < j inside H_m.
    auto v_space = [&](std::size_t j, std::size_t m) {
        Subspace v = Subspace::full(F, t.levels[m].dim());
        for (std::size_t i = 0; i < j; ++i) v = intersect(v, hopf_kernel(t.d(m, i)));
        return v;
    };
    for (std::size_t m = 1; m <= k; ++m) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::string tag = "split-" + std::to_string(m) + "-" + std::to_string(j);
            Subspace top = v_space(j, m), bottom = v_space(j, m - 1);
            HopfAlgebra A = sub_hopf(t.levels[m], top), B = sub_hopf(t.levels[m - 1], bottom);
            std::vector<Vec> dcols, scols;
            for (const auto& v : top.rows()) dcols.push_back(bottom.coordinates(t.d(m, j)(v)));
            for (const auto& v : bottom.rows()) scols.push_back(top.coordinates(t.s(m, j)(v)));
            HopfMorphism proj(A, B, LinearMap(F, B.dim(), std::move(dcols)));
            HopfMorphism sect(B, A, LinearMap(F, A.dim(), std::move(scols)));
            RadfordSplit split = radford_decompose(proj, sect);
            r.merge(split.report, tag);
            std::optional<Witness> w;
            if (A.dim() != split.kernel.dim() * B.dim())
                w = Witness{tag, std::to_string(A.dim()),
                            std::to_string(split.kernel.dim()) + "·" + std::to_string(B.dim())};
            r.check(tag + "-dims", "split decomposition / dim V = dim HKer(d_j|V) · dim V'", w);
        }
    }
    return r;
}

// ---- simplicial kernel -----------------------------------------------------------

TruncatedSimplicialHopf simplicial_kernel_step(const TruncatedSimplicialHopf& t)
{
    check_shape(t);
    const std::size_t n = t.truncation();
    const HopfAlgebra& h = t.levels[n];
    const Field F = h.field();
    const Index d = h.dim();
    const std::size_t slots = n + 2;
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        total *= d;
        if (total > limits().kernel)
            throw DimensionCapError("simplicial kernel: (dim H_n)^(n+2) exceeds the kernel-mode cap " +
                                    std::to_string(limits().kernel));
    }
    HopfAlgebra P = h;
    for (std::size_t i = 1; i < slots; ++i) P = tensor_hopf(P, h);

    auto slot_of = [&](Index x, std::size_t j) {
        for (std::size_t s = slots - 1; s > j; --s) x /= d;
        return x % d;
    };
    auto projection = [&](std::size_t j) {
        std::vector<Vec> cols;
        for (Index x = 0; x < total; ++x) {
            Scalar c = Scalar::one(F);
            for (std::size_t s = 0; s < slots; ++s)
                if (s != j) c *= h.counit(slot_of(x, s));
            cols.push_back(h.basis(slot_of(x, j)).scaled(c));
        }
        return HopfMorphism(P, h, LinearMap(F, d, std::move(cols)));
    };
    std::vector<HopfMorphism> p;
    for (std::size_t j = 0; j < slots; ++j) p.push_back(projection(j));

    Subspace M = Subspace::full(F, total);
    if (n >= 1)
        for (std::size_t j = 1; j < slots; ++j)
            for (std::size_t i = 0; i < j; ++i)
                M = intersect(M, equalizer(t.d(n, i).after(p[j]), t.d(n, j - 1).after(p[i])));
    HopfAlgebra top = sub_hopf(P, M);

    TruncatedSimplicialHopf out = t;
    out.levels.push_back(top);
    out.faces.emplace_back();
    out.degens.emplace_back();
    for (std::size_t j = 0; j < slots; ++j) {
        std::vector<Vec> cols;
        for (const auto& v : M.rows()) cols.push_back(p[j](v));
        out.faces.back().emplace_back(top, h, LinearMap(F, d, std::move(cols)));
    }
    // s_j(x) = (a_0 (x) ... (x) a_{n+1}) applied to the iterated coproduct of x.
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<LinearMap> alpha;
        for (std::size_t i = 0; i < slots; ++i) {
            if (i == j || i == j + 1)
                alpha.push_back(LinearMap::identity(F, d));
            else if (i < j)
                alpha.push_back(t.s(n, j - 1).map().after(t.d(n, i).map()));
            else
                alpha.push_back(t.s(n, j).map().after(t.d(n, i - 1).map()));
        }
        std::vector<Vec> cols;
        for (Index x = 0; x < d; ++x) {
            VecBuilder vb;
            for (const auto& term : sweedler(h, h.basis(x), slots)) {
                Vec acc = alpha[0].column(term.parts[0]);
                for (std::size_t s = 1; s < slots; ++s) acc = tensor(acc, alpha[s].column(term.parts[s]), d);
                vb.add(acc, term.coef);
            }
            cols.push_back(M.coordinates(vb.build()));
        }
        out.degens.back().emplace_back(h, top, LinearMap(F, top.dim(), std::move(cols)));
    }
    return out;
}

}  // namespace hopf2x
