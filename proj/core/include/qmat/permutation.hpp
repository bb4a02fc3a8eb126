#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmat {

// Conventions used throughout:
//  * a permutation is its one-line notation, 0-based: w = [w[0], ..., w[n-1]]
//  * the group product w.u means "apply w, then u": (w.u)[i] = u[w[i]]
//  * the generator v_g (g = 0..n-2) swaps g and g+1; composing v_g.u swaps
//    the entries at positions g, g+1 of u's one-line, and changes length by
//    +1 exactly when u[g] < u[g+1]
//  * a reduced word [g1,...,gk] multiplies left to right: w = v_g1 . ... . v_gk
// Permutations of S_n are indexed by their lexicographic rank.
using PermIndex = int;

struct PermTable {
    int n = 0;
    int size = 0; // n!

    std::vector<std::vector<std::uint8_t>> one_line;
    std::vector<int> length;
    std::vector<PermIndex> inverse;
    std::vector<std::vector<int>> word; // reduced word per permutation

    // gen_left[g][u] = index of v_g . u ; length differs from u's by +-1
    std::vector<std::vector<PermIndex>> gen_left;

    PermIndex identity() const { return 0; }
    PermIndex index_of(const std::vector<std::uint8_t>& ol) const;
    PermIndex compose(PermIndex a, PermIndex b) const;
    PermIndex transposition(int a, int b) const;

    std::string one_line_string(PermIndex w) const;

    /// Shared immutable table for S_n, built once. n <= 8.
    static const PermTable& get(int n);
};

} // namespace qmat
