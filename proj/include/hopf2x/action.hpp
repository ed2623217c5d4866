#pragma once

#include "hopf2x/hopf.hpp"

namespace hopf2x {

Report verify_module_bialgebra(const ActionTensor& act);

// x |> v = eps(x) v
ActionTensor trivial_action(const HopfAlgebra& acting, const HopfAlgebra& carrier);

// I (x)_rho H on the basis (u, x) -> u * dim H + x, labels "(u,x)".
HopfAlgebra smash_product(const ActionTensor& act);

struct RadfordSplit {
    Subspace kernel;            // HKer(proj) inside the source
    HopfAlgebra kernel_algebra;  // the same, in coordinates
    ActionTensor action;        // h |> a = sect(h) |>_ad a
    HopfAlgebra smash;          // kernel_algebra (x)_rho target
    LinearMap psi;              // source -> smash
    LinearMap phi;              // smash -> source
    Report report;
};

// Decomposes the source of a point (proj o sect = id) as HKer(proj) (x) target.
RadfordSplit radford_decompose(const HopfMorphism& proj, const HopfMorphism& sect);

}  // namespace hopf2x
