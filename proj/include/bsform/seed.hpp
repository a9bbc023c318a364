#ifndef BSFORM_SEED_HPP
#define BSFORM_SEED_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsform/coset_search.hpp"
#include "bsform/word.hpp"

namespace bsform {

// Seed (n, [(k_1,a_1),...,(k_m,a_m)]) for the whole construction. Block i
// contributes the run w_i = s_{k_i} s_{k_i+1} ... s_{n-1} of length n - k_i
// and the exponent a_i. Balance: sum(n - k_i) == sum(a_i).
struct SeedData {
    struct Block {
        int k;
        int a;
        bool operator==(const Block& o) const { return k == o.k && a == o.a; }
    };

    int n = 0;
    std::vector<Block> blocks;

    int m() const { return static_cast<int>(blocks.size()); }

    int a() const {
        int s = 0;
        for (const auto& b : blocks) s += b.a;
        return s;
    }

    int total_w_length() const {
        int s = 0;
        for (const auto& b : blocks) s += n - b.k;
        return s;
    }

    int N() const { return n + a(); }

    // Throws invalid_argument naming the violated invariant.
    void validate() const {
        if (n < 2)
            throw std::invalid_argument("seed: n must be >= 2 (got " + std::to_string(n) + ")");
        if (blocks.empty())
            throw std::invalid_argument("seed: at least one block required");
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            if (b.k < 1 || b.k > n - 1)
                throw std::invalid_argument("seed: block " + std::to_string(i + 1) +
                                            ": k must satisfy 1 <= k <= n-1 (got " + std::to_string(b.k) + ")");
            if (b.a < 1)
                throw std::invalid_argument("seed: block " + std::to_string(i + 1) +
                                            ": a must be >= 1 (got " + std::to_string(b.a) + ")");
        }
        if (total_w_length() != a())
            throw std::invalid_argument("seed: balance violated: sum(n - k_i) = " +
                                        std::to_string(total_w_length()) + " != sum(a_i) = " +
                                        std::to_string(a()));
    }

    IndexSet m_set() const { return index_range(1, n - 1); }
    IndexSet a_set() const { return index_range(n + 1, N() - 1); }  // empty when a == 1
    int special_letter() const { return n; }

    std::string to_string() const {
        std::string s = "n=" + std::to_string(n) + " blocks=";
        for (const auto& b : blocks)
            s += "(" + std::to_string(b.k) + ":" + std::to_string(b.a) + ")";
        return s;
    }

    bool operator==(const SeedData& o) const { return n == o.n && blocks == o.blocks; }
};

enum class LetterTag : std::uint8_t {
    w_block,   // letter of some w_i, index in M
    special_n, // the letter s_n
    a_block,   // z-block letter with index in A
};

// The expression x = w_m z_m ... w_1 z_1 together with position metadata.
struct BuiltExpression {
    Word word;
    std::vector<LetterTag> tags;            // per position
    std::vector<int> block_index;           // per position: owning block i (1..m)
    std::vector<std::size_t> w_positions;   // positions of the w letters, block order m..1
    SeedData seed;

    int N() const { return word.degree(); }
    int a() const { return seed.a(); }

    // Fibre target: the longest element of W_A.
    Permutation w_a_target() const { return longest_element(seed.a_set(), N()); }
};

// z_i: runs (s_n ... s_{n+r-1}) for r = A_i down to A_{i-1}+1, where
// A_j = a_1 + ... + a_j. Contains exactly a_i occurrences of s_n.
inline Word build_z_block(int i, const SeedData& seed) {
    seed.validate();
    if (i < 1 || i > seed.m())
        throw std::invalid_argument("build_z_block: block index out of range");
    const int n = seed.n;
    int prefix = 0;
    for (int t = 0; t < i - 1; ++t) prefix += seed.blocks[static_cast<std::size_t>(t)].a;
    const int lo = prefix + 1;                                   // A_{i-1} + 1
    const int hi = prefix + seed.blocks[static_cast<std::size_t>(i - 1)].a;  // A_i
    std::vector<int> letters;
    for (int r = hi; r >= lo; --r)
        for (int c = n; c <= n + r - 1; ++c)
            letters.push_back(c);
    return Word(std::move(letters), seed.N());
}

inline int expected_x_length(const SeedData& seed) {
    const int a = seed.a();
    return a + a * (a + 1) / 2;
}

// Builds x = w_m z_m ... w_1 z_1 with w_i = s_{k_i} ... s_{n-1}.
inline BuiltExpression build_x(const SeedData& seed) {
    seed.validate();
    const int n = seed.n;
    const int N = seed.N();
    std::vector<int> letters;
    std::vector<LetterTag> tags;
    std::vector<int> block_index;
    std::vector<std::size_t> w_positions;

    for (int i = seed.m(); i >= 1; --i) {
        const auto& b = seed.blocks[static_cast<std::size_t>(i - 1)];
        for (int c = b.k; c <= n - 1; ++c) {
            w_positions.push_back(letters.size());
            letters.push_back(c);
            tags.push_back(LetterTag::w_block);
            block_index.push_back(i);
        }
        const Word z = build_z_block(i, seed);
        for (int c : z.letters()) {
            letters.push_back(c);
            tags.push_back(c == n ? LetterTag::special_n : LetterTag::a_block);
            block_index.push_back(i);
        }
    }

    BuiltExpression bx{Word(std::move(letters), N), std::move(tags), std::move(block_index),
                       std::move(w_positions), seed};
    return bx;
}

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "inconclusive";
    }
}

// Reducedness and minimality of the built expression. Failure contradicts
// the construction and signals an implementation bug.
struct ReducedMinRepReport {
    bool reduced = false;
    bool min_coset_rep = false;
    int word_length = 0;
    int product_length = 0;
    CheckStatus status() const {
        return (reduced && min_coset_rep) ? CheckStatus::pass : CheckStatus::fail;
    }
};

inline ReducedMinRepReport check_reduced_min_rep(const BuiltExpression& bx) {
    ReducedMinRepReport r;
    const Permutation x = product(bx.word);
    r.word_length = static_cast<int>(bx.word.size());
    r.product_length = x.length();
    r.reduced = (r.product_length == r.word_length);
    r.min_coset_rep = is_min_coset_rep(x, bx.seed.m_set());
    return r;
}

// Checks that every subexpression e of x with x^e in w_A W_M carries the
// forced pattern: bit 1 wherever the letter lies in A, bit 0 wherever the
// letter is s_n. The enumeration itself never assumes the pattern.
struct ForcedBitsReport {
    CheckStatus status = CheckStatus::inconclusive;
    std::uint64_t nodes_visited = 0;
    std::size_t solution_count = 0;
    std::optional<Subexpression> counterexample;
};

inline ForcedBitsReport check_forced_bits(const BuiltExpression& bx, std::uint64_t node_budget) {
    ForcedBitsReport r;
    const auto search = subexpressions_in_coset(bx.word, bx.seed.m_set(), bx.w_a_target(), node_budget);
    r.nodes_visited = search.nodes_visited;
    if (!search.complete) {
        r.status = CheckStatus::inconclusive;
        return r;
    }
    r.solution_count = search.solutions.size();
    r.status = CheckStatus::pass;
    for (const auto& e : search.solutions) {
        for (std::size_t p = 0; p < bx.word.size(); ++p) {
            const bool bad = (bx.tags[p] == LetterTag::a_block && !e.at(p)) ||
                             (bx.tags[p] == LetterTag::special_n && e.at(p));
            if (bad) {
                r.status = CheckStatus::fail;
                r.counterexample = e;
                return r;
            }
        }
    }
    return r;
}

} // namespace bsform

#endif
