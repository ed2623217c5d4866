#pragma once

#include <vector>

#include "hopf2x/hopf.hpp"

namespace hopf2x::detail {

using Parts = std::vector<Index>;

struct SwVar {
    const HopfAlgebra& h;
    Vec x;
    std::size_t slots;
};

// Sums body(parts) over independent iterated coproducts of every variable;
// parts[v][s] is the basis index in slot s of variable v.
template <class Body>
Vec sweedler_sum(std::initializer_list<SwVar> vars, Body&& body)
{
    std::vector<std::vector<SweedlerTerm>> expanded;
    for (const auto& v : vars) expanded.push_back(sweedler(v.h, v.x, v.slots));
    const std::size_t nv = expanded.size();
    VecBuilder out;
    for (const auto& e : expanded)
        if (e.empty()) return out.build();
    std::vector<std::size_t> at(nv, 0);
    std::vector<Parts> parts(nv);
    while (true) {
        Scalar c = expanded[0][at[0]].coef;
        for (std::size_t v = 0; v < nv; ++v) {
            parts[v] = expanded[v][at[v]].parts;
            if (v) c *= expanded[v][at[v]].coef;
        }
        out.add(body(parts), c);
        std::size_t v = nv;
        while (v-- > 0) {
            if (++at[v] < expanded[v].size()) break;
            at[v] = 0;
        }
        if (v == static_cast<std::size_t>(-1)) break;
    }
    return out.build();
}

}  // namespace hopf2x::detail
