#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopf2x/hopf.hpp"

namespace hopf2x {

using Table = std::vector<std::vector<std::size_t>>;

class FiniteGroup {
public:
    FiniteGroup() = default;
    // Validates closure, associativity, identity and inverses.
    FiniteGroup(Table table, std::vector<std::string> labels);

    static FiniteGroup cyclic(std::size_t n);
    // Order 2n: r^i s^f stored at f * n + i.
    static FiniteGroup dihedral(std::size_t n);
    static FiniteGroup symmetric3();
    static FiniteGroup trivial();
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return table_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& label(std::size_t a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Table& table() const { return table_; }
    std::size_t find(const std::string& label) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.table_ == b.table_ && a.labels_ == b.labels_;
    }

private:
    Table table_;
    std::vector<std::string> labels_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<std::size_t> map;
};
bool is_homomorphism(const GroupHom& f);

// perm[g][e] = g |> e
struct GroupAction {
    FiniteGroup acting;
    FiniteGroup carrier;
    Table perm;
};
GroupAction trivial_group_action(const FiniteGroup& acting, const FiniteGroup& carrier);
GroupAction conjugation_action(const FiniteGroup& g);
// Identity, composition and automorphism laws.
Report verify_group_action(const GroupAction& a);

HopfAlgebra group_algebra(const FiniteGroup& g, Field f);
// Throws PreconditionError if f is not a homomorphism.
HopfMorphism group_algebra_hom(const HopfAlgebra& source, const HopfAlgebra& target, const GroupHom& f);
ActionTensor group_algebra_action(const HopfAlgebra& acting, const HopfAlgebra& carrier, const GroupAction& a);

Report verify_group_xmod(const GroupHom& boundary, const GroupAction& act);

struct Group2XMod {
    FiniteGroup L, E, G;
    std::vector<std::size_t> d2, d1;
    GroupAction on_L, on_E;
    Table lift;  // lift[e][f] in L
};
Report verify_group_2xmod(const Group2XMod& x);

class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(Trilinear bracket, std::vector<std::string> labels);
    static LieAlgebra abelian(Field f, std::size_t dim);
    static LieAlgebra zero(Field f) { return abelian(f, 0); }

    Field field() const { return bracket_.field(); }
    std::size_t dim() const { return bracket_.dim_a(); }
    const Trilinear& bracket() const { return bracket_; }
    Vec bracket(const Vec& x, const Vec& y) const { return bracket_.apply(x, y); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    Trilinear bracket_;
    std::vector<std::string> labels_;
};
// Antisymmetry [x,x] = 0 and the Jacobi identity on basis tuples.
Report verify_lie(const LieAlgebra& g);

struct LieXMod {
    LieAlgebra e, g;
    LinearMap boundary;  // e -> g
    Trilinear action;    // g (x) e -> e
};
Report verify_lie_xmod(const LieXMod& x);

struct Lie2XMod {
    LieAlgebra l, e, g;
    LinearMap d2, d1;
    Trilinear on_l, on_e;  // g (x) l -> l, g (x) e -> e
    Trilinear lift;        // e (x) e -> l
};
Report verify_lie_2xmod(const Lie2XMod& x);

FiniteGroup gl_project(const HopfAlgebra& h, std::vector<Vec> candidates = {});
LieAlgebra prim_project(const HopfAlgebra& h);

struct Hopf2XMod;
// Applies the group algebra functor level-wise. The result is a candidate:
// nothing about it is asserted here.
Hopf2XMod linearize_group_2xmod(const Group2XMod& x, Field f);

}  // namespace hopf2x
