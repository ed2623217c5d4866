#include "hopf2x/peiffer.hpp"

#include <algorithm>
#include <functional>

#include "check_util.hpp"

namespace hopf2x {

SurjIndex::SurjIndex(std::size_t n, std::vector<std::size_t> indices) : n_(n), idx_(std::move(indices))
{
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        if (idx_[k] >= n_) throw PreconditionError("surjection index out of range");
        if (k > 0 && idx_[k] >= idx_[k - 1]) throw PreconditionError("surjection indices must strictly decrease");
    }
}

bool SurjIndex::disjoint(const SurjIndex& o) const
{
    for (auto i : idx_)
        if (std::find(o.idx_.begin(), o.idx_.end(), i) != o.idx_.end()) return false;
    return true;
}

std::string SurjIndex::str() const
{
    if (idx_.empty()) return "∅";
    std::string s = "(";
    for (std::size_t k = 0; k < idx_.size(); ++k) s += (k ? "," : "") + std::to_string(idx_[k]);
    return s + ")";
}

// Read both tuples in increasing order; at the first difference the larger
// index is smaller in S(n), and a proper prefix comes first.
bool operator<(const SurjIndex& a, const SurjIndex& b)
{
    auto x = a.idx_, y = b.idx_;
    std::reverse(x.begin(), x.end());
    std::reverse(y.begin(), y.end());
    for (std::size_t k = 0; k < x.size() && k < y.size(); ++k)
        if (x[k] != y[k]) return x[k] > y[k];
    return x.size() < y.size();
}

std::vector<SurjIndex> enumerate_s(std::size_t n)
{
    std::vector<SurjIndex> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = n; i-- > 0;)
            if (mask >> i & 1) idx.push_back(i);
        out.emplace_back(n, std::move(idx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PeifferPair> enumerate_p(std::size_t n)
{
    std::vector<PeifferPair> out;
    auto all = enumerate_s(n);
    for (const auto& a : all)
        for (const auto& b : all)
            if (!a.empty() && !b.empty() && a.disjoint(b) && b < a) out.push_back({a, b});
    return out;
}

Vec apply_degeneracies(const TruncatedSimplicialHopf& t, std::size_t k, const SurjIndex& alpha, const Vec& x)
{
    if (alpha.length() > k) throw PreconditionError("degeneracy word longer than the level");
    std::size_t level = k - alpha.length();
    Vec v = x;
    const auto& idx = alpha.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = t.s(++level, *it)(v);
    return v;
}

namespace {

Vec apply_f(const TruncatedSimplicialHopf& t, std::size_t k, std::size_t i, const Vec& v)
{
    const HopfAlgebra& h = t.levels[k];
    const Index d = h.dim();
    VecBuilder vb;
    const Vec dv = h.comul(v);
    for (const auto& term : dv.terms())
        h.mul_into(h.basis(term.index / d), t.s(k, i)(t.d(k, i)(h.antipode(term.index % d))), term.coef, vb);
    return vb.build();
}

Vec composite(const TruncatedSimplicialHopf& t, std::size_t n, const PeifferPair& p, const Vec& x, const Vec& y)
{
    Vec v = adjoint(t.levels[n], apply_degeneracies(t, n, p.alpha, x), apply_degeneracies(t, n, p.beta, y));
    for (std::size_t i = 0; i < n; ++i) v = apply_f(t, n, i, v);
    return v;
}

using Parts = std::vector<Index>;

// Sums body over independent Sweedler expansions of x (p slots) and y (q slots).
Vec sweedler_sum(const HopfAlgebra& hx, const Vec& x, std::size_t p, const HopfAlgebra& hy, const Vec& y,
                 std::size_t q, const std::function<Vec(const Parts&, const Parts&)>& body)
{
    VecBuilder vb;
    auto xs = sweedler(hx, x, p);
    auto ys = sweedler(hy, y, q);
    for (const auto& a : xs)
        for (const auto& b : ys) vb.add(body(a.parts, b.parts), a.coef * b.coef);
    return vb.build();
}

SurjIndex si(std::size_t n, std::vector<std::size_t> idx) { return SurjIndex(n, std::move(idx)); }

}  // namespace

Vec pairing(const TruncatedSimplicialHopf& t, std::size_t n, const PeifferPair& p, const Vec& x, const Vec& y,
            const Subspace& nh_n)
{
    Vec v = composite(t, n, p, x, y);
    if (!nh_n.contains(v)) throw ClosureError("pairing " + p.alpha.str() + p.beta.str() + " leaves NH_" + std::to_string(n));
    return v;
}

Report closed_form_check(const TruncatedSimplicialHopf& t, std::size_t n)
{
    if (n != 2 && n != 3) throw PreconditionError("closed forms exist for n = 2 and n = 3 only");
    if (t.truncation() < n) throw PreconditionError("closed forms need level " + std::to_string(n));
    const HopfAlgebra& H = t.levels[n];
    std::vector<Subspace> nh{Subspace::full(t.levels[0].field(), t.levels[0].dim())};
    for (std::size_t k = 1; k <= n; ++k) nh.push_back(image_of(moore_projection(t, k)));

    auto s = [&](std::vector<std::size_t> idx, std::size_t level, Index b) {
        return apply_degeneracies(t, n, si(n, std::move(idx)), t.levels[level].basis(b));
    };
    auto A = [&](const Vec& a, const Vec& b) { return adjoint(H, a, b); };
    auto m = [&](const Vec& a, const Vec& b) { return H.mul(a, b); };
    auto S = [&](const Vec& a) { return H.antipode(a); };

    struct Form {
        PeifferPair pair;
        std::size_t px, py;  // Sweedler slots of x and y
        std::function<Vec(const Parts&, const Parts&)> body;
    };
    std::vector<Form> forms;
    if (n == 2) {
        forms.push_back({{si(2, {0}), si(2, {1})}, 2, 2, [&](const Parts& x, const Parts& y) {
                             return m(A(s({0}, 1, x[0]), s({1}, 1, y[0])), S(A(s({1}, 1, x[1]), s({1}, 1, y[1]))));
                         }});
    } else {
        forms.push_back({{si(3, {1, 0}), si(3, {2})}, 2, 2, [&](const Parts& x, const Parts& y) {
                             return m(A(s({1, 0}, 1, x[0]), s({2}, 2, y[0])), S(A(s({2, 0}, 1, x[1]), s({2}, 2, y[1]))));
                         }});
        forms.push_back({{si(3, {2, 0}), si(3, {1})}, 4, 4, [&](const Parts& x, const Parts& y) {
                             Vec a = m(A(s({2, 0}, 1, x[0]), s({1}, 2, y[0])), S(A(s({2, 1}, 1, x[1]), s({1}, 2, y[1]))));
                             Vec b = m(A(s({2, 0}, 1, x[2]), s({2}, 2, y[2])), S(A(s({2, 1}, 1, x[3]), s({2}, 2, y[3]))));
                             return m(a, S(b));
                         }});
        forms.push_back({{si(3, {0}), si(3, {2, 1})}, 3, 4, [&](const Parts& x, const Parts& y) {
                             Vec a = m(A(s({0}, 2, x[0]), s({2, 1}, 1, y[0])), S(A(s({1}, 2, x[1]), s({2, 1}, 1, y[1]))));
                             Vec b = m(s({2, 1}, 1, y[2]), S(A(s({2}, 2, x[2]), s({2, 1}, 1, y[3]))));
                             return m(a, S(b));
                         }});
        forms.push_back({{si(3, {0}), si(3, {1})}, 3, 4, [&](const Parts& x, const Parts& y) {
                             Vec a = m(A(s({0}, 2, x[0]), s({1}, 2, y[0])), S(A(s({1}, 2, x[1]), s({1}, 2, y[1]))));
                             Vec b = m(s({2}, 2, y[2]), S(A(s({2}, 2, x[2]), s({2}, 2, y[3]))));
                             return m(a, S(b));
                         }});
        forms.push_back({{si(3, {0}), si(3, {2})}, 1, 2, [&](const Parts& x, const Parts& y) {
                             return m(A(s({0}, 2, x[0]), s({2}, 2, y[0])), S(s({2}, 2, y[1])));
                         }});
        forms.push_back({{si(3, {1}), si(3, {2})}, 2, 2, [&](const Parts& x, const Parts& y) {
                             return m(A(s({1}, 2, x[0]), s({2}, 2, y[0])), S(A(s({2}, 2, x[1]), s({2}, 2, y[1]))));
                         }});
    }

    Report r;
    for (const auto& f : forms) {
        const std::string name = "F" + f.pair.alpha.str() + f.pair.beta.str();
        const std::size_t lx = n - f.pair.alpha.length(), ly = n - f.pair.beta.length();
        const HopfAlgebra &hx = t.levels[lx], &hy = t.levels[ly];
        const auto &xs = nh[lx].rows(), &ys = nh[ly].rows();
        const std::size_t count = xs.size() * ys.size();
        auto where = [&](std::size_t k) {
            return "(" + format(hx, xs[k / ys.size()]) + ", " + format(hy, ys[k % ys.size()]) + ")";
        };
        r.check(name + "-in-NH", "Peiffer pairing / value lies in NH_n",
                detail::first_bad(
                    count,
                    [&](std::size_t k) { return nh[n].contains(composite(t, n, f.pair, xs[k / ys.size()], ys[k % ys.size()])); },
                    [&](std::size_t k) {
                        return Witness{where(k), format(H, composite(t, n, f.pair, xs[k / ys.size()], ys[k % ys.size()])),
                                       "an element of NH_" + std::to_string(n)};
                    }));
        r.check(name, "Peiffer pairing / composite equals the expanded closed form",
                detail::first_mismatch(
                    count,
                    [&](std::size_t k) {
                        const Vec &x = xs[k / ys.size()], &y = ys[k % ys.size()];
                        return detail::Sides{composite(t, n, f.pair, x, y), sweedler_sum(hx, x, f.px, hy, y, f.py, f.body)};
                    },
                    [&](std::size_t k, const detail::Sides& sd) {
                        return Witness{where(k), format(H, sd.lhs), format(H, sd.rhs)};
                    }),
                std::to_string(count) + " basis pairs");
    }
    return r;
}

}  // namespace hopf2x
