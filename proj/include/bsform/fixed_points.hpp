#ifndef BSFORM_FIXED_POINTS_HPP
#define BSFORM_FIXED_POINTS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bsform/coset_search.hpp"
#include "bsform/seed.hpp"
#include "bsform/word.hpp"

namespace bsform {

// A torus-fixed point [e] of the Bott-Samelson space of a word.
struct FixedPoint {
    Word word;
    Subexpression bits;

    FixedPoint(Word w, Subexpression e) : word(std::move(w)), bits(std::move(e)) {
        if (bits.size() != word.size())
            throw std::invalid_argument("FixedPoint: bit/word length mismatch");
    }
};

using WeightList = std::vector<Root>;

// Weight of coordinate j of the chart around [e]:
//   (t_1^{e_1} ... t_j^{e_j})(-alpha_{t_j}).
inline WeightList chart_weights(const FixedPoint& p) {
    WeightList weights;
    weights.reserve(p.word.size());
    Permutation prefix(p.word.degree());
    for (std::size_t j = 0; j < p.word.size(); ++j) {
        const int c = p.word.letter(j);
        if (p.bits.at(j)) prefix = prefix.times_simple(c);
        weights.push_back(act_on_root(prefix, simple_root(c).negated()));
    }
    return weights;
}

// Free coordinates of the attracting cell at [e]: the positions whose chart
// weight is a positive root (the rest are pinned to zero). 1-based, sorted.
inline std::vector<int> bb_cell_coordinates(const FixedPoint& p) {
    std::vector<int> free_positions;
    const WeightList w = chart_weights(p);
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j].is_positive()) free_positions.push_back(static_cast<int>(j) + 1);
    return free_positions;
}

// T-fixed points of the fibre over the coset target W_M: all subexpressions
// e with (w^e) W_M = target W_M.
inline SubexprSearch fibre_fixed_points(const Word& w, const IndexSet& M,
                                        const Permutation& target,
                                        std::uint64_t node_budget) {
    return subexpressions_in_coset(w, M, target, node_budget);
}

// Weights on the normal bundle at a fibre fixed point [e] over w_A:
//   { t_1^{e_1} ... t_j^{e_j}(-alpha_n) : t_j = s_n },  a multiset of size a.
// Requires e to carry the forced fibre pattern (1 on A letters, 0 on s_n).
inline std::vector<Root> normal_bundle_weights(const BuiltExpression& bx, const Subexpression& e) {
    if (e.size() != bx.word.size())
        throw std::invalid_argument("normal_bundle_weights: bit/word length mismatch");
    for (std::size_t p = 0; p < bx.word.size(); ++p) {
        if (bx.tags[p] == LetterTag::a_block && !e.at(p))
            throw std::invalid_argument("normal_bundle_weights: not a fibre fixed point (A letter with bit 0)");
        if (bx.tags[p] == LetterTag::special_n && e.at(p))
            throw std::invalid_argument("normal_bundle_weights: not a fibre fixed point (s_n letter with bit 1)");
    }
    const int n = bx.seed.special_letter();
    std::vector<Root> weights;
    Permutation prefix(bx.word.degree());
    for (std::size_t j = 0; j < bx.word.size(); ++j) {
        const int c = bx.word.letter(j);
        if (e.at(j)) prefix = prefix.times_simple(c);
        if (c == n)
            weights.push_back(act_on_root(prefix, simple_root(n).negated()));
    }
    return weights;
}

} // namespace bsform

#endif
