#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hopf2x/scalar.hpp"

namespace hopf2x {

using Index = std::uint64_t;

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Tensor bases are ordered lexicographically: (i, j) -> i * dim_right + j.
constexpr Index pair_index(Index i, Index j, Index dim_right) { return i * dim_right + j; }

struct Term {
    Index index;
    Scalar coef;
};

// Sparse vector with strictly increasing indices and no zero coefficients.
class Vec {
public:
    Vec() = default;

    static Vec unit(Field f, Index i);
    static Vec from_dense(std::span<const Scalar> entries);

    std::span<const Term> terms() const& { return terms_; }
    std::span<const Term> terms() && = delete;  // would dangle
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Index leading() const { return terms_.front().index; }
    const Scalar* find(Index i) const;
    Scalar coef(Index i, Field f) const;

    Vec scaled(const Scalar& s) const;
    friend Vec operator+(const Vec& a, const Vec& b);
    friend Vec operator-(const Vec& a, const Vec& b);
    friend bool operator==(const Vec& a, const Vec& b);

    std::vector<Scalar> to_dense(Field f, Index dim) const;

private:
    friend class VecBuilder;
    std::vector<Term> terms_;
};

// Accumulates scaled terms in any order; build() sorts and merges.
class VecBuilder {
public:
    void add(Index i, const Scalar& c);
    void add(std::span<const Term> terms, const Scalar& c);
    void add(const Vec& v, const Scalar& c) { add(v.terms(), c); }
    void add(const Vec& v);
    bool empty() const { return pending_.empty(); }
    Vec build();

private:
    std::vector<Term> pending_;
};

// e_a (x) e_b coefficientwise: (a (x) b)[i * dim_b + j] = a[i] b[j].
Vec tensor(const Vec& a, const Vec& b, Index dim_b);

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(Field f, std::size_t rows, std::size_t cols);
    static DenseMatrix identity(Field f, std::size_t n);
    static DenseMatrix from_ints(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    std::span<const Scalar> entries() const { return entries_; }

    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

// Kronecker product under the fixed tensor ordering.
DenseMatrix tensor_map(const DenseMatrix& f, const DenseMatrix& g);

// Linear map stored by its image columns. Morphisms between large smash
// products are far too big for dense storage, so all structure maps use this.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(Field f, std::size_t rows, std::vector<Vec> columns);
    static LinearMap identity(Field f, std::size_t n);
    static LinearMap from_dense(const DenseMatrix& m);
    static LinearMap from_function(Field f, std::size_t rows, std::size_t cols,
                                   const std::function<Vec(Index)>& column);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const Vec& column(std::size_t c) const { return columns_[c]; }
    const std::vector<Vec>& columns() const { return columns_; }

    Vec apply(const Vec& v) const;
    void apply_into(const Vec& v, const Scalar& c, VecBuilder& out) const;
    DenseMatrix to_dense() const;

    // (*this) o g
    LinearMap after(const LinearMap& g) const;
    friend bool operator==(const LinearMap& a, const LinearMap& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::vector<Vec> columns_;
};

LinearMap tensor_map(const LinearMap& f, const LinearMap& g);

// Subspace of field^ambient held as its canonical reduced row-echelon basis.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    static Subspace span(Field f, std::size_t ambient, std::span<const Vec> vectors);

    Field field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    DenseMatrix basis() const;

    bool contains(const Vec& v) const;
    // Coordinates against rows(); throws if v is not in the subspace.
    Vec coordinates(const Vec& v) const;
    // Coordinates of a tensor in (this (x) other) inside ambient (x) other.ambient.
    Vec tensor_coordinates(const Vec& t, const Subspace& other) const;
    // Inclusion as a map field^dim -> field^ambient.
    LinearMap inclusion() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Field field_;
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<Index> pivots_;
};

class NotInSubspace : public Error {
public:
    using Error::Error;
};

Subspace kernel_of(const DenseMatrix& m);
Subspace kernel_of(const LinearMap& m);
Subspace image_of(const DenseMatrix& m);
Subspace image_of(const LinearMap& m);
Subspace intersect(const Subspace& a, const Subspace& b);
std::size_t rank(const LinearMap& m);

// Bilinear map V_a (x) V_b -> V_c on basis pairs, stored as one sparse row
// per pair (i, j) in the fixed ordering.
class Trilinear {
public:
    Trilinear() = default;
    Trilinear(Field f, std::size_t a, std::size_t b, std::size_t c);
    static Trilinear build(Field f, std::size_t a, std::size_t b, std::size_t c,
                           const std::function<Vec(Index, Index)>& entry);

    Field field() const { return field_; }
    std::size_t dim_a() const { return a_; }
    std::size_t dim_b() const { return b_; }
    std::size_t dim_c() const { return c_; }

    std::span<const Term> at(Index i, Index j) const;
    Vec value(Index i, Index j) const;
    Scalar coef(Index i, Index j, Index k) const;
    Vec apply(const Vec& x, const Vec& y) const;
    void apply_into(const Vec& x, const Vec& y, const Scalar& c, VecBuilder& out) const;

    friend bool operator==(const Trilinear& x, const Trilinear& y);

private:
    Field field_;
    std::size_t a_ = 0, b_ = 0, c_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Term> terms_;
};

// A bilinear map that is either backed by a Trilinear table or evaluated on
// demand per basis pair.
class Bilinear {
public:
    using Entry = std::function<Vec(Index, Index)>;

    Bilinear() = default;
    explicit Bilinear(Trilinear table);
    Bilinear(Field f, std::size_t a, std::size_t b, std::size_t c, Entry entry);

    Field field() const { return field_; }
    std::size_t dim_a() const { return a_; }
    std::size_t dim_b() const { return b_; }
    std::size_t dim_c() const { return c_; }
    bool materialized() const { return static_cast<bool>(table_); }
    const Trilinear& table() const;

    void apply_into(Index i, Index j, const Scalar& c, VecBuilder& out) const;
    void apply_into(const Vec& x, const Vec& y, const Scalar& c, VecBuilder& out) const;
    Vec value(Index i, Index j) const;
    Vec apply(const Vec& x, const Vec& y) const;
    Trilinear materialize() const;
    // Materializes when a*b <= limit, otherwise returns *this.
    Bilinear cached(std::size_t limit) const;

private:
    Field field_;
    std::size_t a_ = 0, b_ = 0, c_ = 0;
    std::shared_ptr<const Trilinear> table_;
    Entry entry_;
};

}  // namespace hopf2x
