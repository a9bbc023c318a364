#ifndef BSFORM_POLYNOMIAL_HPP
#define BSFORM_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bsform/permutation.hpp"

namespace bsform {

using Int = mpz_class;

// Sparse multivariate polynomial over the integers in variables e_1..e_N,
// graded with deg e_i = 2. Terms are kept in lexicographic order of the
// exponent vector and never store a zero coefficient.
class Polynomial {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Int>;

    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1)
            throw std::invalid_argument("Polynomial: nvars must be >= 1");
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, Int c) {
        Polynomial p(nvars);
        if (c != 0)
            p.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
        return p;
    }

    // e_i, 1-based.
    static Polynomial variable(int nvars, int i) {
        return variable_power(nvars, i, 1);
    }

    // e_i^k
    static Polynomial variable_power(int nvars, int i, std::uint32_t k) {
        Polynomial p(nvars);
        if (i < 1 || i > nvars)
            throw std::invalid_argument("Polynomial: variable index out of range");
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i - 1)] = k;
        p.terms_.emplace(std::move(e), Int(1));
        return p;
    }

    static Polynomial monomial(int nvars, Exponents exps, Int c) {
        Polynomial p(nvars);
        if (static_cast<int>(exps.size()) != nvars)
            throw std::invalid_argument("Polynomial: exponent vector length mismatch");
        if (c != 0)
            p.terms_.emplace(std::move(exps), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Graded degree (deg e_i = 2); -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (std::uint32_t a : e) t += static_cast<int>(a);
            d = std::max(d, 2 * t);
        }
        return d;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(static_cast<std::size_t>(nvars_), 0));
    }

    // Value of a degree-<=0 polynomial; throws if a variable survives.
    Int to_integer() const {
        if (terms_.empty()) return Int(0);
        if (!is_constant())
            throw std::logic_error("Polynomial::to_integer: polynomial is not constant");
        return terms_.begin()->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial operator+(const Polynomial& o) const { Polynomial r = *this; r += o; return r; }
    Polynomial operator-(const Polynomial& o) const { Polynomial r = *this; r -= o; return r; }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_same_ring(o);
        Polynomial r(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(ea);
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    Polynomial operator*(const Int& c) const {
        Polynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Debug / golden-test format: terms in canonical (lexicographic) order,
    // e.g. "1 - 2*e1^2*e3 + e2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { s += '-'; a = -a; }
                first = false;
            } else {
                if (a < 0) { s += " - "; a = -a; }
                else s += " + ";
            }
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += 'e';
                mono += std::to_string(k + 1);
                if (e[k] > 1) { mono += '^'; mono += std::to_string(e[k]); }
            }
            if (mono.empty()) {
                s += a.get_str();
            } else {
                if (a != 1) { s += a.get_str(); s += '*'; }
                s += mono;
            }
        }
        return s;
    }

    void add_term(Exponents e, Int c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void check_same_ring(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("Polynomial: mixed number of variables");
    }

    int nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return p * c; }

// w . f, substituting e_i -> e_{w(i)} in every monomial. Ring homomorphism.
inline Polynomial act(const Permutation& w, const Polynomial& f) {
    if (w.degree() != f.nvars())
        throw std::invalid_argument("act: permutation degree != polynomial nvars");
    Polynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Polynomial::Exponents pe(e.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k)
            pe[static_cast<std::size_t>(w(static_cast<int>(k) + 1) - 1)] = e[k];
        r.add_term(std::move(pe), c);
    }
    return r;
}

// Exact division of f by (e_i - e_j), synthetic division in e_i.
// Returns nullopt if the remainder f|_{e_i = e_j} is nonzero.
inline std::optional<Polynomial> try_divide_by_root(const Polynomial& f, int i, int j) {
    const int n = f.nvars();
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("try_divide_by_root: bad variable pair");
    if (f.is_zero()) return Polynomial::zero(n);

    const std::size_t vi = static_cast<std::size_t>(i - 1);

    // Split f by the exponent of e_i.
    std::map<std::uint32_t, Polynomial> slices;
    for (const auto& [e, c] : f.terms()) {
        Polynomial::Exponents rest(e);
        const std::uint32_t d = rest[vi];
        rest[vi] = 0;
        auto it = slices.find(d);
        if (it == slices.end())
            it = slices.emplace(d, Polynomial::zero(n)).first;
        it->second.add_term(std::move(rest), c);
    }

    const std::uint32_t dmax = slices.rbegin()->first;
    const Polynomial y = Polynomial::variable(n, j);
    auto slice = [&](std::uint32_t d) {
        auto it = slices.find(d);
        return it == slices.end() ? Polynomial::zero(n) : it->second;
    };

    // Horner: b_{D-1} = c_D; b_{d-1} = c_d + y*b_d; remainder = c_0 + y*b_0.
    Polynomial quotient = Polynomial::zero(n);
    Polynomial carry = Polynomial::zero(n);
    for (std::uint32_t d = dmax; d >= 1; --d) {
        carry = (d == dmax) ? slice(d) : slice(d) + y * carry;
        for (const auto& [e, c] : carry.terms()) {
            Polynomial::Exponents shifted(e);
            shifted[vi] += d - 1;
            quotient.add_term(std::move(shifted), c);
        }
    }
    Polynomial remainder = slice(0) + y * carry;
    if (!remainder.is_zero()) return std::nullopt;
    return quotient;
}

// The divided difference operator  D_i(f) = (f - s_i f) / (e_i - e_{i+1}).
// The division is always exact; a surviving remainder is an arithmetic bug.
inline Polynomial divided_difference(int i, const Polynomial& f) {
    if (i < 1 || i >= f.nvars())
        throw std::invalid_argument("divided_difference: index out of range");
    const Permutation s = Permutation::simple_transposition(f.nvars(), i);
    Polynomial g = f - act(s, f);
    auto q = try_divide_by_root(g, i, i + 1);
    if (!q)
        throw std::logic_error("divided_difference: non-exact division (arithmetic bug)");
    return std::move(*q);
}

} // namespace bsform

#endif
