#pragma once

#include "hopf2x/action.hpp"
#include "hopf2x/grouplie.hpp"
#include "hopf2x/simplicial.hpp"

namespace hopf2x {

struct HopfXMod {
    HopfAlgebra I, H;
    HopfMorphism boundary;  // I -> H
    ActionTensor action;    // H on I
};

enum class XModMode { crossed, precrossed };

Report verify_xmod(const HopfXMod& x, XModMode mode = XModMode::crossed);

struct Hopf2XMod {
    HopfAlgebra K, I, H;
    HopfMorphism d2, d1;  // K -> I -> H
    ActionTensor on_I;    // H on I
    ActionTensor on_K;    // H on K
    Bilinear lift;        // I (x) I -> K
};

Report verify_2xmod(const Hopf2XMod& x);

// x |>' k = sum k' {d2(S k''), x}
ActionTensor derived_action(const Hopf2XMod& x);

// K = HKer(d1), d2 the inclusion, {x,y} = sum (x' |>_ad y')(d1(x'') |> S(y'')).
Hopf2XMod from_precrossed(const HopfXMod& x);

// kappa -> I -> H with zero lifting.
Hopf2XMod trivial_2xmod(const HopfXMod& x);

// ---- simplicial <-> crossed ------------------------------------------------------

struct X1Result {
    HopfXMod xmod;
    Subspace nh1;  // inside H_1
    Report report;
};
X1Result x1(const TruncatedSimplicialHopf& t);

TruncatedSimplicialHopf g1(const HopfXMod& x);

struct X2Result {
    Hopf2XMod xmod;
    Subspace nh1, nh2;
    Report report;
};
X2Result x2(const TruncatedSimplicialHopf& t);

TruncatedSimplicialHopf g2(const Hopf2XMod& x);

Report roundtrip_check(const HopfXMod& x);
Report roundtrip_check(const Hopf2XMod& x);
// Simplicial inputs: G(X(t)) is simplicial with the same level dimensions.
Report roundtrip_check(const TruncatedSimplicialHopf& t, int level);

Group2XMod gl_2xmod(const Hopf2XMod& x);
Lie2XMod prim_2xmod(const Hopf2XMod& x);

// Sum f(x' (x) y') S(g(x'' (x) y'')) = eps(x)eps(y) 1 on all basis pairs of
// a (x) b implies f = g. Records the hypothesis and, if it holds, the conclusion.
Report antipode_cancellation(const HopfAlgebra& a, const HopfAlgebra& b, const HopfAlgebra& target,
                             const Bilinear& f, const Bilinear& g);

// The line-by-line expansions behind axioms 4 and 5 on the output of x2(t).
Report appendix_checks(const TruncatedSimplicialHopf& t);

}  // namespace hopf2x
