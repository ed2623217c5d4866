#include "hopf2x/linalg.hpp"

#include <algorithm>
#include <map>

#include "hopf2x/kernels.hpp"

namespace hopf2x {

// ---- Vec ---------------------------------------------------------------

Vec Vec::unit(Field f, Index i)
{
    Vec v;
    v.terms_.push_back({i, Scalar::one(f)});
    return v;
}

Vec Vec::from_dense(std::span<const Scalar> entries)
{
    Vec v;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i].is_zero()) v.terms_.push_back({i, entries[i]});
    return v;
}

const Scalar* Vec::find(Index i) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                               [](const Term& t, Index k) { return t.index < k; });
    if (it == terms_.end() || it->index != i) return nullptr;
    return &it->coef;
}

Scalar Vec::coef(Index i, Field f) const
{
    const Scalar* s = find(i);
    return s ? *s : Scalar::zero(f);
}

Vec Vec::scaled(const Scalar& s) const
{
    Vec r;
    if (s.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.index, t.coef * s});
    return r;
}

namespace {

Vec merge(const Vec& a, const Vec& b, bool subtract)
{
    VecBuilder vb;
    vb.add(a);
    if (!b.is_zero()) {
        Field f = b.terms()[0].coef.field();
        vb.add(b, subtract ? -Scalar::one(f) : Scalar::one(f));
    }
    return vb.build();
}

}  // namespace

Vec operator+(const Vec& a, const Vec& b) { return merge(a, b, false); }
Vec operator-(const Vec& a, const Vec& b) { return merge(a, b, true); }

bool operator==(const Vec& a, const Vec& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].index != b.terms_[i].index || !(a.terms_[i].coef == b.terms_[i].coef))
            return false;
    return true;
}

std::vector<Scalar> Vec::to_dense(Field f, Index dim) const
{
    std::vector<Scalar> out(dim, Scalar::zero(f));
    for (const auto& t : terms_) {
        if (t.index >= dim) throw DimensionMismatch("vector index out of range");
        out[t.index] = t.coef;
    }
    return out;
}

void VecBuilder::add(Index i, const Scalar& c)
{
    if (!c.is_zero()) pending_.push_back({i, c});
}

void VecBuilder::add(std::span<const Term> terms, const Scalar& c)
{
    if (c.is_zero()) return;
    if (c.is_one()) {
        pending_.insert(pending_.end(), terms.begin(), terms.end());
        return;
    }
    for (const auto& t : terms) pending_.push_back({t.index, t.coef * c});
}

void VecBuilder::add(const Vec& v)
{
    pending_.insert(pending_.end(), v.terms().begin(), v.terms().end());
}

Vec VecBuilder::build()
{
    Vec v;
    if (pending_.empty()) return v;
    std::stable_sort(pending_.begin(), pending_.end(),
                     [](const Term& a, const Term& b) { return a.index < b.index; });
    for (auto& t : pending_) {
        if (!v.terms_.empty() && v.terms_.back().index == t.index) {
            v.terms_.back().coef += t.coef;
        } else {
            if (!v.terms_.empty() && v.terms_.back().coef.is_zero()) v.terms_.pop_back();
            v.terms_.push_back(std::move(t));
        }
    }
    if (!v.terms_.empty() && v.terms_.back().coef.is_zero()) v.terms_.pop_back();
    pending_.clear();
    return v;
}

Vec tensor(const Vec& a, const Vec& b, Index dim_b)
{
    VecBuilder vb;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) vb.add(pair_index(x.index, y.index, dim_b), x.coef * y.coef);
    return vb.build();
}

// ---- DenseMatrix ---------------------------------------------------------

DenseMatrix::DenseMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f))
{
}

DenseMatrix DenseMatrix::identity(Field f, std::size_t n)
{
    DenseMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

DenseMatrix DenseMatrix::from_ints(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    DenseMatrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
        std::size_t j = 0;
        for (auto v : row) m.at(i, j++) = Scalar(f, v);
        ++i;
    }
    return m;
}

Vec DenseMatrix::column(std::size_t c) const
{
    VecBuilder vb;
    for (std::size_t r = 0; r < rows_; ++r) vb.add(r, at(r, c));
    return vb.build();
}

Vec DenseMatrix::row(std::size_t r) const
{
    return Vec::from_dense(std::span<const Scalar>(entries_).subspan(r * cols_, cols_));
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    DenseMatrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) m.at(i, j) += x * b.at(k, j);
        }
    return m;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

DenseMatrix tensor_map(const DenseMatrix& f, const DenseMatrix& g)
{
    DenseMatrix m(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& x = f.at(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l)
                    m.at(pair_index(i, k, g.rows()), pair_index(j, l, g.cols())) = x * g.at(k, l);
        }
    return m;
}

// ---- LinearMap -------------------------------------------------------------

LinearMap::LinearMap(Field f, std::size_t rows, std::vector<Vec> columns)
    : field_(f), rows_(rows), columns_(std::move(columns))
{
    for (const auto& c : columns_)
        if (!c.is_zero() && c.terms().back().index >= rows_)
            throw DimensionMismatch("column entry outside target dimension");
}

LinearMap LinearMap::identity(Field f, std::size_t n)
{
    std::vector<Vec> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cols.push_back(Vec::unit(f, i));
    return LinearMap(f, n, std::move(cols));
}

LinearMap LinearMap::from_dense(const DenseMatrix& m)
{
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    return LinearMap(m.field(), m.rows(), std::move(cols));
}

LinearMap LinearMap::from_function(Field f, std::size_t rows, std::size_t cols,
                                   const std::function<Vec(Index)>& column)
{
    std::vector<Vec> out(cols);
    kernels::for_each_index(cols, [&](std::size_t c) { out[c] = column(c); });
    return LinearMap(f, rows, std::move(out));
}

Vec LinearMap::apply(const Vec& v) const
{
    VecBuilder vb;
    apply_into(v, Scalar::one(field_), vb);
    return vb.build();
}

void LinearMap::apply_into(const Vec& v, const Scalar& c, VecBuilder& out) const
{
    for (const auto& t : v.terms()) {
        if (t.index >= columns_.size()) throw DimensionMismatch("vector outside map source");
        out.add(columns_[t.index], c * t.coef);
    }
}

DenseMatrix LinearMap::to_dense() const
{
    DenseMatrix m(field_, rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& t : columns_[c].terms()) m.at(t.index, c) = t.coef;
    return m;
}

LinearMap LinearMap::after(const LinearMap& g) const
{
    if (g.rows_ != cols()) throw DimensionMismatch("composition shape mismatch");
    std::vector<Vec> cols(g.cols());
    kernels::for_each_index(g.cols(), [&](std::size_t c) { cols[c] = apply(g.columns_[c]); });
    return LinearMap(field_, rows_, std::move(cols));
}

bool operator==(const LinearMap& a, const LinearMap& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g)
{
    std::vector<Vec> cols;
    cols.reserve(f.cols() * g.cols());
    for (std::size_t i = 0; i < f.cols(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) cols.push_back(tensor(f.column(i), g.column(j), g.rows()));
    return LinearMap(f.field(), f.rows() * g.rows(), std::move(cols));
}

// ---- elimination ---------------------------------------------------------

namespace {

// Incremental reduced row echelon form. Each row may carry a companion
// history vector that records which inputs produced it.
class Echelon {
public:
    explicit Echelon(Field f) : field_(f) {}

    // Reduces v (and h alongside) against the current rows. Returns true and
    // inserts the result when it is nonzero.
    bool insert(Vec v, Vec h = {})
    {
        reduce(v, h);
        if (v.is_zero()) {
            last_history_ = std::move(h);
            return false;
        }
        Index q = v.leading();
        Scalar inv = v.terms()[0].coef.inverse();
        v = v.scaled(inv);
        h = h.scaled(inv);
        for (auto& [p, row] : rows_) {
            const Scalar* c = row.v.find(q);
            if (!c) continue;
            Scalar k = -*c;
            row.v = axpy(row.v, v, k);
            if (!h.is_zero()) row.h = axpy(row.h, h, k);
        }
        rows_.emplace(q, Row{std::move(v), std::move(h)});
        return true;
    }

    const Vec& last_history() const { return last_history_; }
    std::size_t size() const { return rows_.size(); }

    std::vector<Vec> rows() const
    {
        std::vector<Vec> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) out.push_back(row.v);
        return out;
    }

    std::vector<Index> pivots() const
    {
        std::vector<Index> out;
        for (const auto& [p, row] : rows_) out.push_back(p);
        return out;
    }

private:
    struct Row {
        Vec v;
        Vec h;
    };

    static Vec axpy(const Vec& a, const Vec& b, const Scalar& k)
    {
        VecBuilder vb;
        vb.add(a);
        vb.add(b, k);
        return vb.build();
    }

    void reduce(Vec& v, Vec& h) const
    {
        if (rows_.empty() || v.is_zero()) return;
        VecBuilder vb, hb;
        bool touched = false;
        for (const auto& t : v.terms()) {
            auto it = rows_.find(t.index);
            if (it == rows_.end()) continue;
            if (!touched) {
                vb.add(v);
                hb.add(h);
                touched = true;
            }
            Scalar k = -t.coef;
            vb.add(it->second.v, k);
            hb.add(it->second.h, k);
        }
        if (touched) {
            v = vb.build();
            h = hb.build();
        }
    }

    Field field_;
    std::map<Index, Row> rows_;
    Vec last_history_;
};

}  // namespace

Subspace Subspace::zero(Field f, std::size_t ambient)
{
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(Field f, std::size_t ambient)
{
    Subspace s = zero(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.rows_.push_back(Vec::unit(f, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(Field f, std::size_t ambient, std::span<const Vec> vectors)
{
    Echelon e(f);
    for (const auto& v : vectors) {
        if (!v.is_zero() && v.terms().back().index >= ambient)
            throw DimensionMismatch("spanning vector outside ambient space");
        e.insert(v);
    }
    Subspace s = zero(f, ambient);
    s.rows_ = e.rows();
    s.pivots_ = e.pivots();
    return s;
}

DenseMatrix Subspace::basis() const
{
    DenseMatrix m(field_, rows_.size(), ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& t : rows_[r].terms()) m.at(r, t.index) = t.coef;
    return m;
}

Vec Subspace::coordinates(const Vec& v) const
{
    VecBuilder cb, rb;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar* c = v.find(pivots_[r]);
        if (!c) continue;
        cb.add(r, *c);
        rb.add(rows_[r], *c);
    }
    if (!(rb.build() == v)) throw NotInSubspace("vector is not in the subspace");
    return cb.build();
}

bool Subspace::contains(const Vec& v) const
{
    try {
        coordinates(v);
        return true;
    } catch (const NotInSubspace&) {
        return false;
    }
}

Vec Subspace::tensor_coordinates(const Vec& t, const Subspace& other) const
{
    // A tensor in span(rows) (x) span(other.rows) is determined by its
    // entries at pivot pairs; rebuild it to confirm membership.
    std::map<Index, std::size_t> row_of;
    for (std::size_t r = 0; r < pivots_.size(); ++r) row_of[pivots_[r]] = r;
    std::map<Index, std::size_t> col_of;
    for (std::size_t c = 0; c < other.pivots_.size(); ++c) col_of[other.pivots_[c]] = c;
    VecBuilder cb, rb;
    Index m = other.ambient_;
    for (const auto& term : t.terms()) {
        auto ri = row_of.find(term.index / m);
        auto ci = col_of.find(term.index % m);
        if (ri == row_of.end() || ci == col_of.end()) continue;
        cb.add(pair_index(ri->second, ci->second, other.dim()), term.coef);
        rb.add(tensor(rows_[ri->second], other.rows_[ci->second], m), term.coef);
    }
    if (!(rb.build() == t)) throw NotInSubspace("tensor is not in the product subspace");
    return cb.build();
}

LinearMap Subspace::inclusion() const { return LinearMap(field_, ambient_, rows_); }

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

Subspace kernel_of(const LinearMap& m)
{
    Echelon e(m.field());
    std::vector<Vec> kernel;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!e.insert(m.column(c), Vec::unit(m.field(), c))) kernel.push_back(e.last_history());
    }
    return Subspace::span(m.field(), m.cols(), kernel);
}

Subspace kernel_of(const DenseMatrix& m) { return kernel_of(LinearMap::from_dense(m)); }

Subspace image_of(const LinearMap& m) { return Subspace::span(m.field(), m.rows(), m.columns()); }

Subspace image_of(const DenseMatrix& m) { return image_of(LinearMap::from_dense(m)); }

std::size_t rank(const LinearMap& m) { return image_of(m).dim(); }

Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw DimensionMismatch("intersect: subspaces live in different spaces");
    Field f = a.field();
    std::vector<Vec> cols = a.rows();
    for (const auto& r : b.rows()) cols.push_back(r.scaled(-Scalar::one(f)));
    Subspace k = kernel_of(LinearMap(f, a.ambient(), cols));
    std::vector<Vec> common;
    for (const auto& h : k.rows()) {
        VecBuilder vb;
        for (const auto& t : h.terms())
            if (t.index < a.dim()) vb.add(a.rows()[t.index], t.coef);
        common.push_back(vb.build());
    }
    return Subspace::span(f, a.ambient(), common);
}

// ---- Trilinear -------------------------------------------------------------

Trilinear::Trilinear(Field f, std::size_t a, std::size_t b, std::size_t c)
    : field_(f), a_(a), b_(b), c_(c), offsets_(a * b + 1, 0)
{
}

Trilinear Trilinear::build(Field f, std::size_t a, std::size_t b, std::size_t c,
                           const std::function<Vec(Index, Index)>& entry)
{
    std::vector<Vec> rows(a * b);
    kernels::for_each_index(a * b, [&](std::size_t r) { rows[r] = entry(r / b, r % b); });
    Trilinear t(f, a, b, c);
    std::size_t total = 0;
    for (const auto& r : rows) total += r.size();
    t.terms_.reserve(total);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& term : rows[r].terms()) {
            if (term.index >= c) throw DimensionMismatch("bilinear value outside target dimension");
            t.terms_.push_back(term);
        }
        t.offsets_[r + 1] = t.terms_.size();
    }
    return t;
}

std::span<const Term> Trilinear::at(Index i, Index j) const
{
    std::size_t r = pair_index(i, j, b_);
    return std::span<const Term>(terms_).subspan(offsets_[r], offsets_[r + 1] - offsets_[r]);
}

Vec Trilinear::value(Index i, Index j) const
{
    VecBuilder vb;
    vb.add(at(i, j), Scalar::one(field_));
    return vb.build();
}

Scalar Trilinear::coef(Index i, Index j, Index k) const
{
    for (const auto& t : at(i, j))
        if (t.index == k) return t.coef;
    return Scalar::zero(field_);
}

Vec Trilinear::apply(const Vec& x, const Vec& y) const
{
    VecBuilder vb;
    apply_into(x, y, Scalar::one(field_), vb);
    return vb.build();
}

void Trilinear::apply_into(const Vec& x, const Vec& y, const Scalar& c, VecBuilder& out) const
{
    for (const auto& s : x.terms())
        for (const auto& t : y.terms()) out.add(at(s.index, t.index), c * s.coef * t.coef);
}

bool operator==(const Trilinear& x, const Trilinear& y)
{
    if (!(x.field_ == y.field_) || x.a_ != y.a_ || x.b_ != y.b_ || x.c_ != y.c_) return false;
    for (Index i = 0; i < x.a_; ++i)
        for (Index j = 0; j < x.b_; ++j)
            if (!(x.value(i, j) == y.value(i, j))) return false;
    return true;
}

// ---- Bilinear --------------------------------------------------------------

Bilinear::Bilinear(Trilinear table)
    : field_(table.field()), a_(table.dim_a()), b_(table.dim_b()), c_(table.dim_c()),
      table_(std::make_shared<const Trilinear>(std::move(table)))
{
}

Bilinear::Bilinear(Field f, std::size_t a, std::size_t b, std::size_t c, Entry entry)
    : field_(f), a_(a), b_(b), c_(c), entry_(std::move(entry))
{
}

const Trilinear& Bilinear::table() const
{
    if (!table_) throw Error("bilinear map is not materialized");
    return *table_;
}

void Bilinear::apply_into(Index i, Index j, const Scalar& c, VecBuilder& out) const
{
    if (table_)
        out.add(table_->at(i, j), c);
    else
        out.add(entry_(i, j), c);
}

void Bilinear::apply_into(const Vec& x, const Vec& y, const Scalar& c, VecBuilder& out) const
{
    for (const auto& s : x.terms())
        for (const auto& t : y.terms()) apply_into(s.index, t.index, c * s.coef * t.coef, out);
}

Vec Bilinear::value(Index i, Index j) const
{
    if (table_) return table_->value(i, j);
    return entry_(i, j);
}

Vec Bilinear::apply(const Vec& x, const Vec& y) const
{
    VecBuilder vb;
    apply_into(x, y, Scalar::one(field_), vb);
    return vb.build();
}

Trilinear Bilinear::materialize() const
{
    if (table_) return *table_;
    return Trilinear::build(field_, a_, b_, c_, entry_);
}

Bilinear Bilinear::cached(std::size_t limit) const
{
    if (table_ || a_ * b_ > limit) return *this;
    return Bilinear(materialize());
}

}  // namespace hopf2x
