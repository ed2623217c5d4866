#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopf2x/simplicial.hpp"

namespace hopf2x {

// A strictly decreasing tuple (i_l, ..., i_1) of indices below n; empty is the
// bottom element.
class SurjIndex {
public:
    SurjIndex() = default;
    SurjIndex(std::size_t n, std::vector<std::size_t> indices);

    std::size_t n() const { return n_; }
    const std::vector<std::size_t>& indices() const { return idx_; }
    std::size_t length() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    bool disjoint(const SurjIndex& o) const;
    // "∅" or "(2,1,0)"
    std::string str() const;

    friend bool operator==(const SurjIndex& a, const SurjIndex& b) { return a.n_ == b.n_ && a.idx_ == b.idx_; }
    friend bool operator<(const SurjIndex& a, const SurjIndex& b);

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> idx_;
};

struct PeifferPair {
    SurjIndex alpha;
    SurjIndex beta;
};

std::vector<SurjIndex> enumerate_s(std::size_t n);
std::vector<PeifferPair> enumerate_p(std::size_t n);

// s_alpha: H_{k - #alpha} -> H_k, smallest index applied first.
Vec apply_degeneracies(const TruncatedSimplicialHopf& t, std::size_t k, const SurjIndex& alpha, const Vec& x);

// F_{alpha,beta}(x, y) for x in NH_{n-#alpha}, y in NH_{n-#beta} (ambient
// vectors); throws ClosureError if the value leaves `nh_n`.
Vec pairing(const TruncatedSimplicialHopf& t, std::size_t n, const PeifferPair& p, const Vec& x, const Vec& y,
            const Subspace& nh_n);

// Composite definition against the expanded Sweedler formulas, on all pairs of
// Moore basis vectors, for n = 2 (one form) and n = 3 (six forms).
Report closed_form_check(const TruncatedSimplicialHopf& t, std::size_t n);

}  // namespace hopf2x
