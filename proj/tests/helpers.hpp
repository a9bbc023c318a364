#ifndef BSFORM_TEST_HELPERS_HPP
#define BSFORM_TEST_HELPERS_HPP

// Test-only oracles. Each one reaches its answer through a route that is
// independent of the implementation path it checks.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "bsform/bsform.hpp"

namespace bsform::testing {

using Rng = std::mt19937;

inline Polynomial random_polynomial(Rng& rng, int nvars, int max_total_exp, int max_terms,
                                    int coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    Polynomial f = Polynomial::zero(nvars);
    const int t = nterms(rng);
    for (int term = 0; term < t; ++term) {
        Polynomial::Exponents e(static_cast<std::size_t>(nvars), 0);
        std::uniform_int_distribution<int> total(0, max_total_exp);
        int budget = total(rng);
        std::uniform_int_distribution<int> pick(0, nvars - 1);
        while (budget-- > 0) ++e[static_cast<std::size_t>(pick(rng))];
        f.add_term(std::move(e), Int(coeff(rng)));
    }
    return f;
}

// Permutation action rebuilt monomial by monomial through products of
// variable powers.
inline Polynomial act_oracle(const Permutation& w, const Polynomial& f) {
    Polynomial out = Polynomial::zero(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Polynomial mono = Polynomial::constant(f.nvars(), c);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0)
                mono = mono * Polynomial::variable_power(f.nvars(), w(static_cast<int>(k) + 1), e[k]);
        out += mono;
    }
    return out;
}

// Divided difference by the closed per-monomial formula (no division):
//   D_i(m e_i^p e_{i+1}^q) = sign * m (e_i e_{i+1})^{min(p,q)} h_{|p-q|-1}
// with h_d the complete homogeneous sum in e_i, e_{i+1}.
inline Polynomial divided_difference_oracle(int i, const Polynomial& f) {
    const std::size_t vi = static_cast<std::size_t>(i - 1);
    const std::size_t vj = static_cast<std::size_t>(i);
    Polynomial out = Polynomial::zero(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        const std::uint32_t p = e[vi], q = e[vj];
        if (p == q) continue;
        const std::uint32_t low = std::min(p, q);
        const std::uint32_t d = (p > q) ? p - q : q - p;
        const Int sign = (p > q) ? c : -c;
        for (std::uint32_t u = 0; u < d; ++u) {
            Polynomial::Exponents t(e);
            t[vi] = low + u;
            t[vj] = low + (d - 1 - u);
            out.add_term(std::move(t), sign);
        }
    }
    return out;
}

// e_i -> e_j substitution; vanishing detects divisibility by e_i - e_j.
inline Polynomial substitute_equal(const Polynomial& f, int i, int j) {
    Polynomial out = Polynomial::zero(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Polynomial::Exponents t(e);
        t[static_cast<std::size_t>(j - 1)] += t[static_cast<std::size_t>(i - 1)];
        t[static_cast<std::size_t>(i - 1)] = 0;
        out.add_term(std::move(t), c);
    }
    return out;
}

// All elements of the standard parabolic W_I, by closure under the
// generators.
inline std::vector<Permutation> parabolic_elements(const IndexSet& I, int N) {
    std::set<Permutation> seen;
    std::vector<Permutation> queue{Permutation::identity(N)};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Permutation w = queue[head];
        for (int k : I) {
            Permutation next = w.times_simple(k);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return queue;
}

// All permutations of S_N.
inline std::vector<Permutation> all_permutations(int N) {
    std::vector<int> images(static_cast<std::size_t>(N));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// Exhaustive subexpression filter: the brute-force answer that the pruned
// search must reproduce.
inline std::vector<Subexpression> subexpressions_in_coset_bruteforce(const Word& w, const IndexSet& M,
                                                                     const Permutation& target) {
    std::vector<Subexpression> out;
    const std::size_t L = w.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
        std::vector<std::uint8_t> bits(L);
        for (std::size_t k = 0; k < L; ++k) bits[k] = static_cast<std::uint8_t>((mask >> k) & 1);
        Subexpression e{bits};
        if (coset_equal(subexpr_product(w, e), target, M)) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Push-forward through the localization table: repeatedly fold the last
// letter with  (c_{e0} - c_{e1}) / (prefix alpha_last),  never touching the
// divided-difference path.
inline Polynomial push_by_localization(const CombinatorialClass& c) {
    const std::size_t m = c.size();
    const int N = c.word().degree();
    std::vector<Polynomial> table;
    table.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::uint8_t> bits(m);
        for (std::size_t k = 0; k < m; ++k) bits[k] = static_cast<std::uint8_t>((mask >> k) & 1);
        table.push_back(localize(c, Subexpression(std::move(bits))));
    }
    for (std::size_t len = m; len >= 1; --len) {
        const int last = c.word().letter(len - 1);
        std::vector<Polynomial> folded;
        folded.reserve(std::size_t{1} << (len - 1));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (len - 1)); ++mask) {
            Permutation prefix(N);
            for (std::size_t k = 0; k < len - 1; ++k)
                if ((mask >> k) & 1) prefix = prefix.times_simple(c.word().letter(k));
            const Root gamma = act_on_root(prefix, simple_root(last));
            const Polynomial diff = table[mask] - table[mask | (std::uint64_t{1} << (len - 1))];
            auto q = try_divide_by_root(diff, gamma.i, gamma.j);
            if (!q) throw std::logic_error("push_by_localization: non-exact division");
            folded.push_back(std::move(*q));
        }
        table = std::move(folded);
    }
    return table.at(0);
}

inline CombinatorialClass random_class(Rng& rng, int nvars, int len, int max_total_exp,
                                       int max_terms) {
    std::uniform_int_distribution<int> letter(1, nvars - 1);
    std::vector<int> letters;
    std::vector<Polynomial> polys;
    for (int k = 0; k < len; ++k) {
        letters.push_back(letter(rng));
        polys.push_back(random_polynomial(rng, nvars, max_total_exp, max_terms, 4));
    }
    return CombinatorialClass(Word(std::move(letters), nvars), std::move(polys));
}

} // namespace bsform::testing

#endif
