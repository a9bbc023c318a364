#ifndef BSFORM_WORD_HPP
#define BSFORM_WORD_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsform/permutation.hpp"
#include "bsform/polynomial.hpp"

namespace bsform {

// An expression: a finite sequence of simple-reflection indices (repeats
// allowed), living in S_degree.
class Word {
public:
    Word(std::vector<int> letters, int degree) : letters_(std::move(letters)), degree_(degree) {
        if (degree < 1)
            throw std::invalid_argument("Word: degree must be >= 1");
        for (int l : letters_)
            if (l < 1 || l >= degree)
                throw std::invalid_argument("Word: letter out of range");
    }

    static Word empty(int degree) { return Word({}, degree); }

    const std::vector<int>& letters() const { return letters_; }
    int degree() const { return degree_; }
    std::size_t size() const { return letters_.size(); }
    int letter(std::size_t pos) const { return letters_[pos]; }

    Word concat(const Word& o) const {
        if (degree_ != o.degree_)
            throw std::invalid_argument("Word: degree mismatch in concat");
        std::vector<int> l = letters_;
        l.insert(l.end(), o.letters_.begin(), o.letters_.end());
        return Word(std::move(l), degree_);
    }

    bool operator==(const Word& o) const { return degree_ == o.degree_ && letters_ == o.letters_; }

private:
    std::vector<int> letters_;
    int degree_;
};

// 0/1 mask on a Word.
struct Subexpression {
    std::vector<std::uint8_t> bits;

    Subexpression() = default;
    explicit Subexpression(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    static Subexpression zeros(std::size_t len) { return Subexpression(std::vector<std::uint8_t>(len, 0)); }
    static Subexpression ones(std::size_t len) { return Subexpression(std::vector<std::uint8_t>(len, 1)); }

    static Subexpression from_string(const std::string& s) {
        std::vector<std::uint8_t> b;
        b.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("Subexpression: expected a 0/1 string");
            b.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return Subexpression(std::move(b));
    }

    std::size_t size() const { return bits.size(); }
    bool at(std::size_t pos) const { return bits[pos] != 0; }

    std::string to_string() const {
        std::string s;
        s.reserve(bits.size());
        for (auto b : bits) s += static_cast<char>('0' + b);
        return s;
    }

    bool operator==(const Subexpression& o) const { return bits == o.bits; }
    bool operator<(const Subexpression& o) const { return bits < o.bits; }
};

// The root e_i - e_j (i != j); positive precisely when i < j.
struct Root {
    int i;
    int j;

    bool is_positive() const { return i < j; }
    Root negated() const { return Root{j, i}; }

    Polynomial to_polynomial(int nvars) const {
        return Polynomial::variable(nvars, i) - Polynomial::variable(nvars, j);
    }

    std::string to_string() const {
        return "e" + std::to_string(i) + "-e" + std::to_string(j);
    }

    bool operator==(const Root& o) const { return i == o.i && j == o.j; }
    bool operator<(const Root& o) const { return i != o.i ? i < o.i : j < o.j; }
};

inline Root simple_root(int k) { return Root{k, k + 1}; }

// Subset of simple-reflection indices, kept sorted.
using IndexSet = std::vector<int>;

inline IndexSet make_index_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Contiguous interval {lo, lo+1, ..., hi}; empty when hi < lo.
inline IndexSet index_range(int lo, int hi) {
    IndexSet s;
    for (int k = lo; k <= hi; ++k) s.push_back(k);
    return s;
}

// Maximal runs of consecutive indices, as [lo, hi] pairs.
inline std::vector<std::pair<int, int>> index_runs(const IndexSet& I) {
    std::vector<std::pair<int, int>> runs;
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (!runs.empty() && I[k] == runs.back().second + 1)
            runs.back().second = I[k];
        else
            runs.emplace_back(I[k], I[k]);
    }
    return runs;
}

// Partition of positions 1..N into the blocks moved by W_I: the run [lo,hi]
// of indices glues positions lo..hi+1. Returns a block id per position
// (1-based positions; index 0 unused).
inline std::vector<int> position_block_ids(const IndexSet& I, int N) {
    for (int k : I)
        if (k < 1 || k >= N)
            throw std::invalid_argument("position_block_ids: index out of range");
    std::vector<int> block(static_cast<std::size_t>(N) + 1, 0);
    int id = 0;
    auto runs = index_runs(I);
    std::size_t r = 0;
    for (int pos = 1; pos <= N; ++pos) {
        if (r < runs.size() && pos >= runs[r].first && pos <= runs[r].second + 1) {
            block[static_cast<std::size_t>(pos)] = id;
            if (pos == runs[r].second + 1) { ++r; ++id; }
        } else {
            block[static_cast<std::size_t>(pos)] = id++;
        }
    }
    return block;
}

inline Permutation product(const Word& w) {
    Permutation p(w.degree());
    for (int l : w.letters()) p = p.times_simple(l);
    return p;
}

inline int length(const Permutation& w) { return w.length(); }

inline bool is_reduced(const Word& w) {
    return product(w).length() == static_cast<int>(w.size());
}

// w^e = product of the letters with bit 1, in word order.
inline Permutation subexpr_product(const Word& w, const Subexpression& e) {
    if (e.size() != w.size())
        throw std::invalid_argument("subexpr_product: length mismatch");
    Permutation p(w.degree());
    for (std::size_t k = 0; k < w.size(); ++k)
        if (e.at(k)) p = p.times_simple(w.letter(k));
    return p;
}

// Longest element of the standard parabolic W_I in S_N: reverses each
// block of consecutive positions glued by I. An involution.
inline Permutation longest_element(const IndexSet& I, int N) {
    std::vector<int> images(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) images[static_cast<std::size_t>(i - 1)] = i;
    for (auto [lo, hi] : index_runs(I)) {
        if (lo < 1 || hi >= N)
            throw std::invalid_argument("longest_element: index out of range");
        for (int i = lo; i <= hi + 1; ++i)
            images[static_cast<std::size_t>(i - 1)] = lo + hi + 1 - i;
    }
    return Permutation::from_one_line(std::move(images));
}

// True iff w is the minimal-length representative of the coset w W_M,
// i.e. length(w s_m) > length(w) for all m in M.
inline bool is_min_coset_rep(const Permutation& w, const IndexSet& M) {
    for (int m : M) {
        if (m < 1 || m >= w.degree())
            throw std::invalid_argument("is_min_coset_rep: index out of range");
        if (w(m) > w(m + 1)) return false;
    }
    return true;
}

// u W_M == v W_M, decided by checking that u^{-1} v preserves the blocks of M.
inline bool coset_equal(const Permutation& u, const Permutation& v, const IndexSet& M) {
    if (u.degree() != v.degree())
        throw std::invalid_argument("coset_equal: degree mismatch");
    const auto block = position_block_ids(M, u.degree());
    const Permutation q = u.inverse() * v;
    for (int i = 1; i <= u.degree(); ++i)
        if (block[static_cast<std::size_t>(q(i))] != block[static_cast<std::size_t>(i)])
            return false;
    return true;
}

inline Root act_on_root(const Permutation& w, const Root& r) {
    return Root{w(r.i), w(r.j)};
}

// Is e_i - e_j a root of the subsystem spanned by I?
inline bool root_in_subsystem(const Root& r, const IndexSet& I, int N) {
    const auto block = position_block_ids(I, N);
    return block[static_cast<std::size_t>(r.i)] == block[static_cast<std::size_t>(r.j)];
}

// D_w = D_{i_1} ... D_{i_m} as operators, so the last letter acts first.
// For a reduced word the result depends only on the underlying permutation.
inline Polynomial divided_difference_word(const Word& w, const Polynomial& f) {
    Polynomial r = f;
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        r = divided_difference(*it, r);
    return r;
}

// All reduced words for w, built from right descents; lexicographic order.
inline std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    if (w.is_identity()) return {{}};
    std::vector<std::vector<int>> out;
    for (int k = 1; k < w.degree(); ++k) {
        if (w(k) > w(k + 1)) {
            for (auto& head : all_reduced_words(w.times_simple(k))) {
                head.push_back(k);
                out.push_back(std::move(head));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace bsform

#endif
