#ifndef BSFORM_COSET_SEARCH_HPP
#define BSFORM_COSET_SEARCH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bsform/word.hpp"

namespace bsform {

// Result of enumerating subexpressions e of a word with product in a given
// coset. complete == false means the node budget ran out and `solutions`
// must not be trusted (explicit inconclusive, never silent truncation).
struct SubexprSearch {
    std::vector<Subexpression> solutions;
    std::uint64_t nodes_visited = 0;
    bool complete = true;
};

namespace detail {

// Depth-first enumeration of all e with  subexpr_product(w, e) W_M = target W_M.
//
// The prefix product is tracked as a permutation, one swap per set bit.
// Membership in the target coset is equivalent to every value sitting
// inside the interval of positions its target block occupies. Two
// admissible prunes, both exact counts against the remaining suffix:
//
//   - aggregate: one swap moves two values one step each, so the summed
//     interval distance D must satisfy D <= 2 * (letters remaining);
//   - per boundary: a value crosses the boundary between positions b, b+1
//     only through a letter s_b, and one s_b supplies at most one rightward
//     and one leftward crossing. Once a boundary demands more crossings
//     than the suffix can supply the branch is dead for good, so it
//     suffices to recheck the single boundary the last step touched.
class CosetDfs {
public:
    CosetDfs(const Word& w, const IndexSet& M, const Permutation& target, std::uint64_t budget)
        : word_(w), budget_(budget) {
        const int N = w.degree();
        if (target.degree() != N)
            throw std::invalid_argument("subexpressions_in_coset: degree mismatch");
        const auto block = position_block_ids(M, N);
        // Interval of allowed final positions per block id, then per value.
        std::vector<std::pair<int, int>> span(block.size(), {0, -1});
        for (int pos = 1; pos <= N; ++pos) {
            auto& s = span[static_cast<std::size_t>(block[static_cast<std::size_t>(pos)])];
            if (s.second < s.first) s = {pos, pos};
            else s.second = pos;
        }
        lo_.assign(static_cast<std::size_t>(N) + 1, 0);
        hi_.assign(static_cast<std::size_t>(N) + 1, 0);
        const Permutation tinv = target.inverse();
        for (int v = 1; v <= N; ++v) {
            const auto& s = span[static_cast<std::size_t>(block[static_cast<std::size_t>(tinv(v))])];
            lo_[static_cast<std::size_t>(v)] = s.first;
            hi_[static_cast<std::size_t>(v)] = s.second;
        }
        perm_.resize(static_cast<std::size_t>(N) + 1);
        pos_.resize(static_cast<std::size_t>(N) + 1);
        right_need_.assign(static_cast<std::size_t>(N) + 1, 0);
        left_need_.assign(static_cast<std::size_t>(N) + 1, 0);
        dist_sum_ = 0;
        for (int v = 1; v <= N; ++v) {
            perm_[static_cast<std::size_t>(v)] = v;
            pos_[static_cast<std::size_t>(v)] = v;
            const int lo = lo_[static_cast<std::size_t>(v)];
            const int hi = hi_[static_cast<std::size_t>(v)];
            if (v < lo) {
                dist_sum_ += lo - v;
                for (int b = v; b < lo; ++b) ++right_need_[static_cast<std::size_t>(b)];
            } else if (v > hi) {
                dist_sum_ += v - hi;
                for (int b = hi; b < v; ++b) ++left_need_[static_cast<std::size_t>(b)];
            }
        }
        const std::size_t L = w.size();
        suffix_count_.assign((L + 1) * static_cast<std::size_t>(N), 0);
        for (std::size_t j = L; j-- > 0;) {
            for (int b = 1; b < N; ++b)
                suffix_at(j, b) = suffix_at(j + 1, b);
            ++suffix_at(j, w.letter(j));
        }
        bits_.assign(L, 0);
    }

    SubexprSearch run() {
        bool feasible = true;
        for (int b = 1; b < word_.degree() && feasible; ++b)
            if (std::max(right_need_[static_cast<std::size_t>(b)], left_need_[static_cast<std::size_t>(b)]) >
                suffix_at(0, b))
                feasible = false;
        if (feasible) recurse(0);
        SubexprSearch r;
        r.solutions = std::move(solutions_);
        r.nodes_visited = nodes_;
        r.complete = !aborted_;
        if (aborted_) r.solutions.clear();
        return r;
    }

private:
    int& suffix_at(std::size_t depth, int letter) {
        return suffix_count_[depth * static_cast<std::size_t>(word_.degree()) +
                             static_cast<std::size_t>(letter)];
    }

    // Right multiplication by s_c: the values at positions c, c+1 trade places.
    void apply_swap(int c) {
        const int u = perm_[static_cast<std::size_t>(c)];
        const int w = perm_[static_cast<std::size_t>(c + 1)];
        const std::size_t cb = static_cast<std::size_t>(c);
        // u moves c -> c+1
        if (lo_[static_cast<std::size_t>(u)] > c) { --right_need_[cb]; --dist_sum_; }
        else if (hi_[static_cast<std::size_t>(u)] <= c) { ++left_need_[cb]; ++dist_sum_; }
        // w moves c+1 -> c
        if (hi_[static_cast<std::size_t>(w)] <= c) { --left_need_[cb]; --dist_sum_; }
        else if (lo_[static_cast<std::size_t>(w)] > c) { ++right_need_[cb]; ++dist_sum_; }
        perm_[static_cast<std::size_t>(c)] = w;
        perm_[static_cast<std::size_t>(c + 1)] = u;
        pos_[static_cast<std::size_t>(u)] = c + 1;
        pos_[static_cast<std::size_t>(w)] = c;
    }

    void recurse(std::size_t depth) {
        if (aborted_) return;
        if (++nodes_ > budget_) { aborted_ = true; return; }
        const std::size_t L = word_.size();
        if (dist_sum_ > 2 * static_cast<long>(L - depth)) return;
        if (depth > 0) {
            // Only the boundary touched by the previous letter can newly fail.
            const int b = word_.letter(depth - 1);
            if (std::max(right_need_[static_cast<std::size_t>(b)],
                         left_need_[static_cast<std::size_t>(b)]) > suffix_at(depth, b))
                return;
        }
        if (depth == L) {
            if (dist_sum_ == 0)
                solutions_.emplace_back(bits_);
            return;
        }
        const int c = word_.letter(depth);
        bits_[depth] = 0;
        recurse(depth + 1);
        if (aborted_) return;
        apply_swap(c);
        bits_[depth] = 1;
        recurse(depth + 1);
        apply_swap(c);
    }

    const Word& word_;
    std::uint64_t budget_;
    std::vector<int> lo_, hi_;
    std::vector<int> perm_, pos_;
    std::vector<int> right_need_, left_need_;
    std::vector<int> suffix_count_;
    long dist_sum_ = 0;
    std::vector<std::uint8_t> bits_;
    std::vector<Subexpression> solutions_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace detail

// All subexpressions e of w with (w^e) W_M = target W_M, in lexicographic
// order of the bit strings.
inline SubexprSearch subexpressions_in_coset(const Word& w, const IndexSet& M,
                                             const Permutation& target,
                                             std::uint64_t node_budget) {
    detail::CosetDfs dfs(w, M, target, node_budget);
    return dfs.run();
}

} // namespace bsform

#endif
