#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf2x/linalg.hpp"
#include "hopf2x/report.hpp"

namespace hopf2x {

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ClosureError : public Error {
public:
    using Error::Error;
};

class DimensionCapError : public Error {
public:
    using Error::Error;
};

// Size thresholds. `kernel` bounds the source dimension of kernel-mode
// computations, `materialize` the dimension up to which O(d) structure tables
// and O(d^2) product tables are stored, `exhaustive` the dimension up to which
// triple-indexed axioms are enumerated directly.
struct Limits {
    std::size_t kernel = 512;
    std::size_t materialize = 4096;
    std::size_t product_pairs = std::size_t{1} << 20;
    std::size_t exhaustive = 128;
};

Limits limits();
void set_limits(const Limits& l);

class ActionTensor;

class HopfAlgebra {
public:
    struct Data {
        Field field;
        std::vector<std::string> labels;
        Bilinear mul;
        Vec unit;
        LinearMap comul;  // d -> d*d in the fixed tensor ordering
        std::vector<Scalar> counit;
        LinearMap antipode;
        bool cocommutative = false;
    };

    // How a constructed algebra was assembled; kept for lazy evaluation and
    // factor-wise verification.
    struct Factors {
        enum class Kind { tensor, smash };
        Kind kind;
        std::shared_ptr<const HopfAlgebra> left;   // carrier I of I (x)_rho H
        std::shared_ptr<const HopfAlgebra> right;  // acting H
        std::shared_ptr<const ActionTensor> action;
    };

    HopfAlgebra() = default;
    explicit HopfAlgebra(Data d, std::optional<Factors> factors = std::nullopt);

    Field field() const { return impl_->data.field; }
    std::size_t dim() const { return impl_->data.counit.size(); }
    const std::string& label(Index i) const { return impl_->data.labels[i]; }
    const std::vector<std::string>& labels() const { return impl_->data.labels; }
    bool cocommutative_flag() const { return impl_->data.cocommutative; }
    const Data& data() const { return impl_->data; }
    const Factors* factors() const { return impl_->factors ? &*impl_->factors : nullptr; }
    bool same_as(const HopfAlgebra& o) const { return impl_ == o.impl_; }

    Vec basis(Index i) const { return Vec::unit(field(), i); }
    Vec one() const { return impl_->data.unit; }

    Vec mul(Index i, Index j) const { return impl_->data.mul.value(i, j); }
    Vec mul(const Vec& x, const Vec& y) const;
    void mul_into(const Vec& x, const Vec& y, const Scalar& c, VecBuilder& out) const;
    const Vec& comul(Index i) const { return impl_->data.comul.column(i); }
    Vec comul(const Vec& x) const { return impl_->data.comul.apply(x); }
    const Scalar& counit(Index i) const { return impl_->data.counit[i]; }
    Scalar counit(const Vec& x) const;
    const Vec& antipode(Index i) const { return impl_->data.antipode.column(i); }
    Vec antipode(const Vec& x) const { return impl_->data.antipode.apply(x); }

    // Replaces a structure table; used to build deliberately broken fixtures.
    HopfAlgebra with_antipode(LinearMap s) const;
    HopfAlgebra with_mul(Bilinear m) const;

private:
    struct Impl {
        Data data;
        std::optional<Factors> factors;
    };
    std::shared_ptr<const Impl> impl_;
};

// x |> v for x in the acting algebra and v in the carrier.
class ActionTensor {
public:
    ActionTensor() = default;
    ActionTensor(HopfAlgebra acting, HopfAlgebra carrier, Bilinear coeffs);

    const HopfAlgebra& acting() const { return acting_; }
    const HopfAlgebra& carrier() const { return carrier_; }
    const Bilinear& coeffs() const { return coeffs_; }

    Vec act(Index x, Index v) const { return coeffs_.value(x, v); }
    Vec act(const Vec& x, const Vec& v) const { return coeffs_.apply(x, v); }

private:
    HopfAlgebra acting_;
    HopfAlgebra carrier_;
    Bilinear coeffs_;
};

class HopfMorphism {
public:
    HopfMorphism() = default;
    HopfMorphism(HopfAlgebra source, HopfAlgebra target, LinearMap map);
    static HopfMorphism from_dense(HopfAlgebra source, HopfAlgebra target, const DenseMatrix& m);
    static HopfMorphism identity(const HopfAlgebra& h);

    const HopfAlgebra& source() const { return source_; }
    const HopfAlgebra& target() const { return target_; }
    const LinearMap& map() const { return map_; }
    DenseMatrix matrix() const { return map_.to_dense(); }

    const Vec& operator()(Index i) const& { return map_.column(i); }
    Vec operator()(Index i) && { return map_.column(i); }
    Vec operator()(const Vec& v) const { return map_.apply(v); }
    // (*this) o g
    HopfMorphism after(const HopfMorphism& g) const;

private:
    HopfAlgebra source_;
    HopfAlgebra target_;
    LinearMap map_;
};

// Iterated coproduct: the terms of (delta (x) id ...)(x) with n tensor slots.
struct SweedlerTerm {
    Scalar coef;
    std::vector<Index> parts;
};
std::vector<SweedlerTerm> sweedler(const HopfAlgebra& h, const Vec& x, std::size_t n);

// Product in A (x) B, componentwise.
Vec tensor_product_mul(const HopfAlgebra& a, const HopfAlgebra& b, const Vec& x, const Vec& y);

std::string format(const HopfAlgebra& h, const Vec& v);
std::string format_tensor(const HopfAlgebra& a, const HopfAlgebra& b, const Vec& t);
std::string format_coords(const Vec& v);

// Generators of h as an algebra: the embedded generators of both factors when
// h is a tensor or smash product, the whole basis otherwise.
std::vector<Vec> algebra_generators(const HopfAlgebra& h);

// Which left factors pairwise axioms range over: every basis vector while
// that is affordable, else the algebra generators of a factored algebra, else
// nothing. Checking an identity that is multiplicative in its first argument
// on generators times the basis covers all pairs.
struct PairPlan {
    enum class Mode { basis, generators, skipped } mode = Mode::basis;
    std::vector<Vec> left;
    std::string note;
};
PairPlan plan_pairs(const HopfAlgebra& h);

// Pairwise axioms (products of two elements) switch from all basis pairs to
// generator-times-basis pairs once the dimension exceeds Limits::exhaustive
// and the algebra is factored.
Report verify_hopf(const HopfAlgebra& h);
Report verify_morphism(const HopfMorphism& f);
bool is_cocommutative(const HopfAlgebra& h);

// The ground field as a one-dimensional Hopf algebra with basis {1}.
HopfAlgebra trivial_hopf(Field f);
HopfMorphism zero_morphism(const HopfAlgebra& a, const HopfAlgebra& b);
HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b);
// p1(a (x) b) = a eps(b), p2(a (x) b) = eps(a) b
HopfMorphism tensor_projection(const HopfAlgebra& product, int slot);
ActionTensor adjoint_action(const HopfAlgebra& h);
Vec adjoint(const HopfAlgebra& h, const Vec& x, const Vec& y);

Subspace hopf_kernel(const HopfMorphism& f);
// Two-sided variant {x : sum x' (x) f(x'') (x) x''' = x' (x) 1 (x) x''}; only used as a cross-check.
Subspace hopf_kernel_two_sided(const HopfMorphism& f);
Subspace equalizer(const HopfMorphism& f, const HopfMorphism& g);
bool is_normal(const HopfAlgebra& h, const Subspace& a);
// x |>_ad v stays in a for x ranging over `over` (a subspace of h).
bool is_normal_in(const HopfAlgebra& h, const Subspace& over, const Subspace& a);
// Throws ClosureError unless a is a sub-Hopf algebra of h.
void check_sub_hopf(const HopfAlgebra& h, const Subspace& a);
// The sub-Hopf algebra on a's canonical basis, in coordinates.
HopfAlgebra sub_hopf(const HopfAlgebra& h, const Subspace& a);

struct GroupLikes {
    std::vector<Vec> elements;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;
    std::vector<std::size_t> inverse;
};
GroupLikes group_likes(const HopfAlgebra& h, std::vector<Vec> candidates = {});

struct Primitives {
    Subspace space;
    Trilinear bracket;
};
Primitives primitives(const HopfAlgebra& h);

}  // namespace hopf2x
