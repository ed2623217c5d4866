#pragma once

#include <optional>
#include <string>

#include "hopf2x/kernels.hpp"
#include "hopf2x/linalg.hpp"
#include "hopf2x/report.hpp"

namespace hopf2x::detail {

struct Sides {
    Vec lhs;
    Vec rhs;
};

// Enumerates tuples 0..n-1; eval(k) yields both sides of the identity, and
// describe(k, sides) renders the first mismatch.
template <class Eval, class Describe>
std::optional<Witness> first_mismatch(std::size_t n, Eval&& eval, Describe&& describe)
{
    std::size_t k = kernels::first_failure(n, [&](std::size_t i) {
        Sides s = eval(i);
        return s.lhs == s.rhs;
    });
    if (k == n) return std::nullopt;
    return describe(k, eval(k));
}

// Same with a plain predicate; describe(k) renders the first failure.
template <class Ok, class Describe>
std::optional<Witness> first_bad(std::size_t n, Ok&& ok, Describe&& describe)
{
    std::size_t k = kernels::first_failure(n, ok);
    if (k == n) return std::nullopt;
    return describe(k);
}

// Unravels k into mixed-radix digits (most significant first).
inline std::vector<std::size_t> digits(std::size_t k, std::initializer_list<std::size_t> radices)
{
    std::vector<std::size_t> out(radices.size());
    std::size_t pos = radices.size();
    for (auto it = std::rbegin(radices); it != std::rend(radices); ++it) {
        out[--pos] = k % *it;
        k /= *it;
    }
    return out;
}

}  // namespace hopf2x::detail
