#include <catch2/catch.hpp>

#include <map>
#include <set>

#include "helpers.hpp"

using namespace bsform;
using namespace bsform::testing;

TEST_CASE("word products and lengths") {
    SECTION("empty word gives the identity") {
        REQUIRE(product(Word::empty(3)).is_identity());
    }
    SECTION("(1,2,1) in S_3 is the longest element") {
        REQUIRE(product(Word({1, 2, 1}, 3)) == Permutation::from_one_line({3, 2, 1}));
    }
    SECTION("(1,1) collapses to the identity") {
        REQUIRE(product(Word({1, 1}, 3)).is_identity());
    }
    SECTION("length by inversions") {
        REQUIRE(Permutation::identity(5).length() == 0);
        REQUIRE(longest_element(index_range(1, 4), 5).length() == 10);
        REQUIRE(Permutation::from_one_line({2, 4, 1, 3}).length() == 3);
    }
    SECTION("is_reduced") {
        REQUIRE(is_reduced(Word({1, 2, 1}, 3)));
        REQUIRE_FALSE(is_reduced(Word({1, 1}, 3)));
    }
    SECTION("letters are range-checked") {
        REQUIRE_THROWS_AS(Word({3}, 3), std::invalid_argument);
        REQUIRE_THROWS_AS(Word({0}, 3), std::invalid_argument);
    }
}

TEST_CASE("subexpression products") {
    const Word w({1, 2, 1, 3}, 4);
    SECTION("all ones is the full product, all zeros the identity") {
        REQUIRE(subexpr_product(w, Subexpression::ones(4)) == product(w));
        REQUIRE(subexpr_product(w, Subexpression::zeros(4)).is_identity());
    }
    SECTION("mixed bits against direct multiplication") {
        Rng rng(2222);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::uint8_t> bits(4);
            for (auto& b : bits) b = static_cast<std::uint8_t>(bit(rng));
            Permutation expected = Permutation::identity(4);
            for (std::size_t k = 0; k < 4; ++k)
                if (bits[k])
                    expected = expected * Permutation::simple_transposition(4, w.letter(k));
            REQUIRE(subexpr_product(w, Subexpression{bits}) == expected);
        }
    }
    SECTION("length mismatch is rejected") {
        REQUIRE_THROWS_AS(subexpr_product(w, Subexpression::ones(3)), std::invalid_argument);
    }
}

TEST_CASE("longest elements of parabolics") {
    SECTION("empty set gives the identity") {
        REQUIRE(longest_element({}, 4).is_identity());
    }
    SECTION("full set reverses") {
        REQUIRE(longest_element(index_range(1, 3), 4) == Permutation::from_one_line({4, 3, 2, 1}));
    }
    SECTION("I = {1,3} in S_4") {
        REQUIRE(longest_element({1, 3}, 4) == Permutation::from_one_line({2, 1, 4, 3}));
    }
    SECTION("brute-force maximum over W_I, N <= 5") {
        const std::vector<IndexSet> sets = {{1}, {2}, {1, 2}, {1, 3}, {2, 4}, {1, 2, 4}, {1, 2, 3, 4}};
        for (const auto& I : sets) {
            const auto elements = parabolic_elements(I, 5);
            const Permutation w0 = longest_element(I, 5);
            int best = -1;
            for (const auto& u : elements) best = std::max(best, u.length());
            REQUIRE(w0.length() == best);
            REQUIRE((w0 * w0).is_identity());
            // unique maximiser
            int count = 0;
            for (const auto& u : elements)
                if (u.length() == best) ++count;
            REQUIRE(count == 1);
        }
    }
    SECTION("length is subtractive on W_I: l(w_I u) = l(w_I) - l(u), N <= 4 exhaustive") {
        const std::vector<IndexSet> sets = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
        for (const auto& I : sets) {
            const Permutation w0 = longest_element(I, 4);
            for (const auto& u : parabolic_elements(I, 4))
                REQUIRE((w0 * u).length() == w0.length() - u.length());
        }
    }
}

TEST_CASE("coset tests") {
    const IndexSet M = {1, 2};
    SECTION("minimal representative criterion") {
        REQUIRE(is_min_coset_rep(Permutation::identity(4), M));
        REQUIRE_FALSE(is_min_coset_rep(Permutation::simple_transposition(4, 1), M));
        REQUIRE_FALSE(is_min_coset_rep(Permutation::simple_transposition(4, 2), M));
        REQUIRE(is_min_coset_rep(Permutation::simple_transposition(4, 3), M));
    }
    SECTION("coset_equal basics") {
        const Permutation w = Permutation::from_one_line({3, 1, 4, 2});
        REQUIRE(coset_equal(w, w, M));
        REQUIRE(coset_equal(w, w * Permutation::simple_transposition(4, 1), M));
        REQUIRE_FALSE(coset_equal(w, w * Permutation::simple_transposition(4, 3), M));
    }
    SECTION("against brute-force enumeration of W_M in S_5") {
        const IndexSet M5 = {1, 3, 4};
        const auto wm = parabolic_elements(M5, 5);
        const auto all = all_permutations(5);
        Rng rng(5150);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const Permutation& u = all[pick(rng)];
            const Permutation& v = all[pick(rng)];
            bool expected = false;
            const Permutation q = u.inverse() * v;
            for (const auto& x : wm)
                if (x == q) { expected = true; break; }
            REQUIRE(coset_equal(u, v, M5) == expected);
        }
    }
    SECTION("every coset has exactly one minimal representative (S_5 exhaustive)") {
        const IndexSet M5 = {2, 3};
        std::map<std::vector<int>, std::vector<Permutation>> cosets;
        for (const auto& w : all_permutations(5)) {
            // canonical key: sort the entries at the block positions 2..4
            std::vector<int> key = w.one_line();
            std::sort(key.begin() + 1, key.begin() + 4);
            cosets[key].push_back(w);
        }
        REQUIRE(cosets.size() == 120 / 6);
        for (const auto& [key, members] : cosets) {
            int minimal = 0;
            for (const auto& w : members) {
                for (const auto& v : members) REQUIRE(coset_equal(w, v, M5));
                if (is_min_coset_rep(w, M5)) ++minimal;
            }
            REQUIRE(minimal == 1);
        }
    }
}

TEST_CASE("roots and the root action") {
    SECTION("positivity convention") {
        REQUIRE(Root{1, 3}.is_positive());
        REQUIRE_FALSE(Root{3, 1}.is_positive());
        REQUIRE(simple_root(2) == Root{2, 3});
    }
    SECTION("simple reflection negates its root") {
        REQUIRE(act_on_root(Permutation::simple_transposition(3, 1), simple_root(1)) ==
                simple_root(1).negated());
    }
    SECTION("identity acts trivially") {
        REQUIRE(act_on_root(Permutation::identity(4), Root{2, 4}) == Root{2, 4});
    }
    SECTION("agrees with the polynomial action for all of S_4") {
        for (const auto& w : all_permutations(4)) {
            for (int i = 1; i <= 4; ++i) {
                for (int j = 1; j <= 4; ++j) {
                    if (i == j) continue;
                    const Root r{i, j};
                    REQUIRE(act_on_root(w, r).to_polynomial(4) == act(w, r.to_polynomial(4)));
                }
            }
        }
    }
    SECTION("subsystem membership") {
        REQUIRE(root_in_subsystem(Root{1, 3}, {1, 2}, 5));
        REQUIRE_FALSE(root_in_subsystem(Root{1, 4}, {1, 2}, 5));
        REQUIRE_FALSE(root_in_subsystem(Root{3, 4}, {1, 2}, 5));
    }
}

TEST_CASE("reduced word enumeration") {
    SECTION("longest element of S_3 has the two braid words") {
        const auto words = all_reduced_words(Permutation::from_one_line({3, 2, 1}));
        REQUIRE(words == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
    }
    SECTION("longest element of S_4 has 16 reduced words") {
        const auto words = all_reduced_words(Permutation::from_one_line({4, 3, 2, 1}));
        REQUIRE(words.size() == 16);
        std::set<std::vector<int>> unique(words.begin(), words.end());
        REQUIRE(unique.size() == 16);
        for (const auto& letters : words) {
            Word w(letters, 4);
            REQUIRE(is_reduced(w));
            REQUIRE(product(w) == Permutation::from_one_line({4, 3, 2, 1}));
        }
    }
    SECTION("greedy-descent length agrees with inversions") {
        for (const auto& w : all_permutations(4)) {
            const auto words = all_reduced_words(w);
            REQUIRE_FALSE(words.empty());
            REQUIRE(static_cast<int>(words.front().size()) == w.length());
        }
    }
}

TEST_CASE("one-line notation round trip") {
    const Permutation w = Permutation::from_one_line({3, 1, 2});
    REQUIRE(w.to_string() == "[3,1,2]");
    REQUIRE(w.inverse() == Permutation::from_one_line({2, 3, 1}));
    REQUIRE((w * w.inverse()).is_identity());
    REQUIRE_THROWS_AS(Permutation::from_one_line({1, 1, 3}), std::invalid_argument);
}
