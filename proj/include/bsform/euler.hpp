#ifndef BSFORM_EULER_HPP
#define BSFORM_EULER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsform/factor.hpp"
#include "bsform/fixed_points.hpp"
#include "bsform/polynomial.hpp"
#include "bsform/seed.hpp"
#include "bsform/word.hpp"

namespace bsform {

// An equivariant class on the Bott-Samelson space of a word, described by
// one polynomial per letter; its restriction to the fixed point [e] is the
// nested twisted product
//   c_e = t_1^{e_1}(f_1 * t_2^{e_2}(f_2 * ... t_m^{e_m}(f_m) ... )).
// A class on the empty word is a single constant polynomial.
class CombinatorialClass {
public:
    CombinatorialClass(Word word, std::vector<Polynomial> polys)
        : word_(std::move(word)), polys_(std::move(polys)) {
        const bool constant_form = word_.size() == 0 && polys_.size() == 1;
        if (!constant_form && polys_.size() != word_.size())
            throw std::invalid_argument("CombinatorialClass: one polynomial per letter required");
        for (const auto& f : polys_)
            if (f.nvars() != word_.degree())
                throw std::invalid_argument("CombinatorialClass: polynomial/word variable mismatch");
    }

    const Word& word() const { return word_; }
    const std::vector<Polynomial>& polys() const { return polys_; }
    std::size_t size() const { return word_.size(); }

    int total_poly_degree() const {
        int d = 0;
        for (const auto& f : polys_) {
            if (f.is_zero()) return -1;
            d += f.degree();
        }
        return d;
    }

private:
    Word word_;
    std::vector<Polynomial> polys_;
};

inline Polynomial localize(const CombinatorialClass& c, const Subexpression& e) {
    if (e.size() != c.size())
        throw std::invalid_argument("localize: subexpression length mismatch");
    const int N = c.word().degree();
    if (c.size() == 0)
        return c.polys().empty() ? Polynomial::constant(N, 1) : c.polys()[0];
    Polynomial acc = c.polys().back();
    for (std::size_t j = c.size(); j-- > 0;) {
        if (j + 1 < c.size()) acc = c.polys()[j] * acc;
        if (e.at(j)) acc = act(Permutation::simple_transposition(N, c.word().letter(j)), acc);
    }
    return acc;
}

// One-step push-forward along the last P^1 factor: drops the last letter and
// folds its polynomial in,  g_{m-1} = f_{m-1} * D_{t_m}(f_m).
// For a one-letter class the result is the constant class D_{t_1}(f_1).
inline CombinatorialClass push_last(const CombinatorialClass& c) {
    const std::size_t m = c.size();
    if (m == 0)
        throw std::invalid_argument("push_last: class on the empty word");
    const int last_letter = c.word().letter(m - 1);
    const Polynomial folded = divided_difference(last_letter, c.polys()[m - 1]);
    std::vector<int> letters(c.word().letters().begin(), c.word().letters().end() - 1);
    std::vector<Polynomial> polys(c.polys().begin(), c.polys().end() - 1);
    if (polys.empty())
        polys.push_back(folded);
    else
        polys.back() = polys.back() * folded;
    return CombinatorialClass(Word(std::move(letters), c.word().degree()), std::move(polys));
}

// Push-forward over a T-equivariant P^1 with weights -gamma at 0 and gamma
// at infinity:  p_!(g_0, g_inf) = (g_0 - g_inf) / gamma.
inline Polynomial p1_push(const Polynomial& g0, const Polynomial& ginf, const Root& gamma) {
    auto q = try_divide_by_root(g0 - ginf, gamma.i, gamma.j);
    if (!q)
        throw std::invalid_argument("p1_push: g0 - ginf is not divisible by gamma (not a class)");
    return std::move(*q);
}

// Full push-forward to the point: iterated push_last, i.e.
//   p_!(c) = D_{t_1}(f_1 D_{t_2}(f_2 ... D_{t_m}(f_m) ... )).
inline Polynomial push_to_point(const CombinatorialClass& c) {
    CombinatorialClass acc = c;
    while (acc.size() > 0) acc = push_last(acc);
    return acc.polys().empty() ? Polynomial::constant(c.word().degree(), 1) : acc.polys()[0];
}

// The product (e_n - e_{n+1}) ... (e_n - e_{n+a_i}) attached to block i.
inline Polynomial block_root_product(const SeedData& seed, int i) {
    const int N = seed.N();
    const int n = seed.n;
    Polynomial p = Polynomial::constant(N, 1);
    for (int j = 1; j <= seed.blocks[static_cast<std::size_t>(i - 1)].a; ++j)
        p = p * (Polynomial::variable(N, n) - Polynomial::variable(N, n + j));
    return p;
}

// Variant matching the fixed-point localizations: block i draws its
// variables from the window e_{n+S_i+1} .. e_{n+S_i+a_i}, where S_i is the
// total exponent of the later blocks (j > i). All windows are disjoint.
inline Polynomial block_root_product_shifted(const SeedData& seed, int i) {
    const int N = seed.N();
    const int n = seed.n;
    int shift = 0;
    for (int j = i + 1; j <= seed.m(); ++j)
        shift += seed.blocks[static_cast<std::size_t>(j - 1)].a;
    Polynomial p = Polynomial::constant(N, 1);
    for (int j = 1; j <= seed.blocks[static_cast<std::size_t>(i - 1)].a; ++j)
        p = p * (Polynomial::variable(N, n) - Polynomial::variable(N, n + shift + j));
    return p;
}

namespace detail {

inline CombinatorialClass euler_class_from(const SeedData& seed,
                                           Polynomial (*product)(const SeedData&, int)) {
    seed.validate();
    const int n = seed.n;
    const int N = seed.N();
    std::vector<int> letters;
    std::vector<Polynomial> polys;
    for (int i = seed.m(); i >= 1; --i) {
        const auto& b = seed.blocks[static_cast<std::size_t>(i - 1)];
        for (int c = b.k; c <= n - 1; ++c) {
            letters.push_back(c);
            polys.push_back(Polynomial::constant(N, 1));
        }
        polys.back() = product(seed, i);
    }
    return CombinatorialClass(Word(std::move(letters), N), std::move(polys));
}

} // namespace detail

// Euler class of the fibre normal bundle as a combinatorial class on the
// word w_m w_{m-1} ... w_1: every polynomial is 1 except at the end of each
// block, where it carries the block root product.
inline CombinatorialClass euler_class_polys(const SeedData& seed) {
    return detail::euler_class_from(seed, &block_root_product);
}

// Same class with the shifted block products. This is the descriptor whose
// localizations reproduce the normal bundle weight products point by point
// (up to one global sign); both descriptors push forward to the same
// integer, since the two products differ by terms with invariant factors.
inline CombinatorialClass euler_class_localized(const SeedData& seed) {
    return detail::euler_class_from(seed, &block_root_product_shifted);
}

// C = D_{w_m}(e_n^{a_m} D_{w_{m-1}}(... D_{w_1}(e_n^{a_1}) ...)), evaluated
// in Z[e_1..e_n]. Balance makes the result a degree-0 polynomial.
inline Int compute_C_direct(const SeedData& seed) {
    seed.validate();
    const int n = seed.n;
    Polynomial acc = Polynomial::constant(n, 1);
    for (int i = 1; i <= seed.m(); ++i) {
        const auto& b = seed.blocks[static_cast<std::size_t>(i - 1)];
        acc = Polynomial::variable_power(n, n, static_cast<std::uint32_t>(b.a)) * acc;
        acc = divided_difference_word(Word(index_range(b.k, n - 1), n), acc);
    }
    return acc.to_integer();
}

// Same integer through the geometric route: push the Euler class to a point
// in Z[e_1..e_N].
inline Int compute_C_euler(const SeedData& seed) {
    return push_to_point(euler_class_polys(seed)).to_integer();
}

// Orientation audit at one fibre fixed point: the product of the normal
// bundle weights equals the Euler-class localization up to a sign; returns
// +1 or -1, or throws if the two differ by more than a sign.
inline int orientation_sign_at(const BuiltExpression& bx, const CombinatorialClass& cls,
                               const Subexpression& e) {
    const int N = bx.N();
    Polynomial weight_product = Polynomial::constant(N, 1);
    for (const Root& r : normal_bundle_weights(bx, e))
        weight_product = weight_product * r.to_polynomial(N);
    std::vector<std::uint8_t> wbits;
    wbits.reserve(bx.w_positions.size());
    for (std::size_t p : bx.w_positions) wbits.push_back(e.bits[p]);
    const Polynomial localized = localize(cls, Subexpression(std::move(wbits)));
    if (weight_product == localized) return 1;
    if (weight_product == -localized) return -1;
    throw std::logic_error("orientation_sign_at: weight product and localization differ beyond sign");
}

// Compares, at every fibre fixed point, the normal bundle weight product
// against the localization of the Euler-class descriptor, recording the
// per-point sign and whether it is constant. Also records the push-forward
// of both descriptors, which must agree.
struct CrossCheckReport {
    CheckStatus status = CheckStatus::inconclusive;
    std::size_t points = 0;
    int sign = 0;              // the common sign when constant
    bool sign_constant = false;
    bool descriptors_push_equal = false;
    std::uint64_t nodes_visited = 0;
};

inline CrossCheckReport euler_class_cross_check(const SeedData& seed, std::uint64_t node_budget) {
    seed.validate();
    CrossCheckReport r;
    const BuiltExpression bx = build_x(seed);
    const auto fibre = fibre_fixed_points(bx.word, seed.m_set(), bx.w_a_target(), node_budget);
    r.nodes_visited = fibre.nodes_visited;
    if (!fibre.complete) return r;
    const CombinatorialClass cls = euler_class_localized(seed);
    r.points = fibre.solutions.size();
    r.sign_constant = true;
    for (const auto& e : fibre.solutions) {
        const int s = orientation_sign_at(bx, cls, e);
        if (r.sign == 0) r.sign = s;
        else if (r.sign != s) { r.sign_constant = false; break; }
    }
    r.descriptors_push_equal =
        push_to_point(cls).to_integer() == push_to_point(euler_class_polys(seed)).to_integer();
    r.status = (r.sign_constant && r.descriptors_push_equal) ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

// Verifies that replacing the block root products by plain powers e_n^{a_i}
// leaves the nested integer unchanged, substituting one block at a time,
// and that divided differences commute with multiplication by invariants.
struct PowerSubstitutionReport {
    CheckStatus status = CheckStatus::fail;
    std::vector<Int> values;      // mixed evaluations, outermost substitution last
    bool values_equal = false;
    bool invariance_law_holds = false;
};

inline PowerSubstitutionReport check_power_substitution(const SeedData& seed) {
    seed.validate();
    PowerSubstitutionReport r;
    const int n = seed.n;
    const int N = seed.N();

    // values[t]: blocks 1..t use e_n^{a_i}, blocks t+1..m keep the products.
    for (int t = 0; t <= seed.m(); ++t) {
        Polynomial acc = Polynomial::constant(N, 1);
        for (int i = 1; i <= seed.m(); ++i) {
            const auto& b = seed.blocks[static_cast<std::size_t>(i - 1)];
            const Polynomial factor =
                (i <= t) ? Polynomial::variable_power(N, n, static_cast<std::uint32_t>(b.a))
                         : block_root_product(seed, i);
            acc = factor * acc;
            acc = divided_difference_word(Word(index_range(b.k, n - 1), N), acc);
        }
        r.values.push_back(acc.to_integer());
    }
    r.values_equal = true;
    for (const auto& v : r.values)
        if (v != r.values.front()) { r.values_equal = false; break; }

    // D_i(h g) = h D_i(g) for h invariant under every s_i with i in M.
    // Deterministic spot check with W_M-invariants of positive degree.
    r.invariance_law_holds = true;
    const Polynomial g = Polynomial::variable(N, n) * Polynomial::variable(N, 1) +
                         Polynomial::variable_power(N, 2, 2) * Polynomial::constant(N, 3);
    for (int j = n + 1; j <= N && r.invariance_law_holds; ++j) {
        Polynomial h = Polynomial::variable(N, j);                 // fixed by W_M
        Polynomial power_sum = Polynomial::zero(N);
        for (int i = 1; i <= n; ++i)
            power_sum += Polynomial::variable_power(N, i, 2);      // symmetric in e_1..e_n
        h = h + power_sum;
        for (int i : seed.m_set()) {
            if (divided_difference(i, h * g) != h * divided_difference(i, g)) {
                r.invariance_law_holds = false;
                break;
            }
        }
    }

    r.status = (r.values_equal && r.invariance_law_holds) ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

// Verifies the one-step push-forward against its localization description:
// for every subexpression e of the truncated word,
//   localize(push_last(c), e) * (prefix alpha_{t_m}) == c_{e0} - c_{e1}.
struct PushStepReport {
    CheckStatus status = CheckStatus::inconclusive;
    std::size_t points_checked = 0;
    bool divisibility_ok = true;
};

inline PushStepReport check_push_step(const SeedData& seed, std::uint64_t point_budget) {
    seed.validate();
    PushStepReport r;
    const CombinatorialClass cls = euler_class_polys(seed);
    const std::size_t m = cls.size();
    if ((std::uint64_t{1} << m) > point_budget) return r;  // inconclusive
    const CombinatorialClass pushed = push_last(cls);
    const int N = cls.word().degree();
    const int last = cls.word().letter(m - 1);
    r.status = CheckStatus::pass;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        std::vector<std::uint8_t> bits(m - 1);
        Permutation prefix(N);
        for (std::size_t k = 0; k < m - 1; ++k) {
            bits[k] = static_cast<std::uint8_t>((mask >> k) & 1);
            if (bits[k]) prefix = prefix.times_simple(cls.word().letter(k));
        }
        const Subexpression e{bits};
        auto e0 = bits; e0.push_back(0);
        auto e1 = bits; e1.push_back(1);
        const Polynomial diff =
            localize(cls, Subexpression(e0)) - localize(cls, Subexpression(e1));
        const Root gamma = act_on_root(prefix, simple_root(last));
        const Polynomial lhs = localize(pushed, e) * gamma.to_polynomial(N);
        if (lhs != diff) { r.status = CheckStatus::fail; return r; }
        // GKM divisibility at the dropped letter
        if (!try_divide_by_root(diff, gamma.i, gamma.j)) {
            r.divisibility_ok = false;
            r.status = CheckStatus::fail;
            return r;
        }
        ++r.points_checked;
    }
    return r;
}

// End-to-end result for one seed.
struct ComputeResult {
    SeedData seed;
    int N = 0;
    int len_x = 0;
    Int C_direct;
    Int C_euler;
    int sign = 0;
    Factorization factorization;  // of |C|, empty when |C| <= 1
};

// Builds the expression, computes C through both routes (they must agree in
// absolute value), audits the orientation sign, and factors |C|.
// When 2^a exceeds cross_check_point_cap the sign is taken from the single
// canonical fixed point instead of sweeping all of them.
inline ComputeResult compute_full(const SeedData& seed,
                                  std::uint64_t cross_check_point_cap = (std::uint64_t{1} << 10),
                                  std::uint64_t node_budget = 200000000ULL) {
    seed.validate();
    ComputeResult res;
    res.seed = seed;
    const BuiltExpression bx = build_x(seed);
    res.N = bx.N();
    res.len_x = static_cast<int>(bx.word.size());
    res.C_direct = compute_C_direct(seed);
    res.C_euler = compute_C_euler(seed);
    if (abs(res.C_direct) != abs(res.C_euler))
        throw std::logic_error("route disagreement beyond sign at seed " + seed.to_string() +
                               ": C_direct = " + res.C_direct.get_str() +
                               ", C_euler = " + res.C_euler.get_str());
    const std::uint64_t points = std::uint64_t{1} << seed.a();
    if (points <= cross_check_point_cap) {
        const CrossCheckReport cc = euler_class_cross_check(seed, node_budget);
        if (cc.status != CheckStatus::pass)
            throw std::logic_error("orientation sign not constant across fixed points at seed " +
                                   seed.to_string());
        res.sign = cc.sign;
    } else {
        // canonical point: forced bits on z letters, 0 on w letters
        std::vector<std::uint8_t> bits(bx.word.size(), 0);
        for (std::size_t p = 0; p < bx.word.size(); ++p)
            if (bx.tags[p] == LetterTag::a_block) bits[p] = 1;
        res.sign = orientation_sign_at(bx, euler_class_localized(seed), Subexpression(std::move(bits)));
    }
    if (res.C_direct != 0 && abs(res.C_direct) != 1)
        res.factorization = factorize(res.C_direct);
    return res;
}

} // namespace bsform

#endif
