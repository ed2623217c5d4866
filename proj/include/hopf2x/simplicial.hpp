#pragma once

#include <cstddef>
#include <vector>

#include "hopf2x/hopf.hpp"

namespace hopf2x {

// Levels H_0..H_n with faces d_i: H_k -> H_{k-1} (0 <= i <= k) and
// degeneracies s_j: H_{k-1} -> H_k (0 <= j < k). faces[0] and degens[0] are
// empty so that both are indexed by the level of their source, resp. target.
struct TruncatedSimplicialHopf {
    std::vector<HopfAlgebra> levels;
    std::vector<std::vector<HopfMorphism>> faces;
    std::vector<std::vector<HopfMorphism>> degens;

    std::size_t truncation() const { return levels.size() - 1; }
    const HopfMorphism& d(std::size_t k, std::size_t i) const { return faces.at(k).at(i); }
    const HopfMorphism& s(std::size_t k, std::size_t j) const { return degens.at(k).at(j); }
};

// Every level over and every map pointing at the level it claims to.
void check_shape(const TruncatedSimplicialHopf& t);

// The simplicial identities, plus verify_morphism on every face and
// degeneracy when `morphisms` is set.
Report verify_simplicial(const TruncatedSimplicialHopf& t, bool morphisms = true);

// All faces and degeneracies are the identity of h.
TruncatedSimplicialHopf constant_simplicial(const HopfAlgebra& h, std::size_t n);

enum class MooreMode { kernel, projection, both };

struct MooreComplex {
    std::vector<Subspace> terms;        // NH_k inside H_k
    std::vector<LinearMap> boundaries;  // boundaries[k]: NH_k -> NH_{k-1} in coordinates; [0] unused
    Report report;                      // well-definedness and cross-mode agreement
};

// f_i(x) = sum x' s_i d_i(S x'') on H_k.
LinearMap generator_map_f(const TruncatedSimplicialHopf& t, std::size_t k, std::size_t i);
// f_{k-1} o ... o f_0 on H_k.
LinearMap moore_projection(const TruncatedSimplicialHopf& t, std::size_t k);

// Kernel mode throws DimensionCapError above the kernel cap; `both` falls back
// to projection alone at levels where kernel mode is infeasible and records a skip.
MooreComplex moore_complex(const TruncatedSimplicialHopf& t, MooreMode mode);

Report verify_normal_chain(const MooreComplex& m, const TruncatedSimplicialHopf& t);
bool moore_length_at_most(const MooreComplex& m, std::size_t length);

// Dimension count over S(k) and the iterated split decomposition of H_k.
Report decomposition_check(const TruncatedSimplicialHopf& t, std::size_t k);

// One step of the simplicial kernel: level n+1 as a subspace of H_n^{(x)(n+2)}.
TruncatedSimplicialHopf simplicial_kernel_step(const TruncatedSimplicialHopf& t);

}  // namespace hopf2x
