#ifndef BSFORM_PERMUTATION_HPP
#define BSFORM_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsform {

// Element of the symmetric group S_N in one-line notation.
// Composition convention: (u*v)(i) = u(v(i)), i.e. v acts first.
class Permutation {
public:
    explicit Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
        if (degree < 1)
            throw std::invalid_argument("Permutation: degree must be >= 1");
        std::iota(images_.begin(), images_.end(), 1);
    }

    static Permutation identity(int degree) { return Permutation(degree); }

    // images[i-1] = w(i), 1-based values.
    static Permutation from_one_line(std::vector<int> images) {
        if (images.empty())
            throw std::invalid_argument("Permutation: empty one-line notation");
        const int n = static_cast<int>(images.size());
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("Permutation: one-line notation is not a bijection");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        Permutation w(n);
        w.images_ = std::move(images);
        return w;
    }

    // The simple transposition s_k = (k, k+1) in S_degree.
    static Permutation simple_transposition(int degree, int k) {
        if (k < 1 || k >= degree)
            throw std::invalid_argument("simple_transposition: index out of range");
        Permutation w(degree);
        std::swap(w.images_[static_cast<std::size_t>(k - 1)], w.images_[static_cast<std::size_t>(k)]);
        return w;
    }

    int degree() const { return static_cast<int>(images_.size()); }

    // Image of i, 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& one_line() const { return images_; }

    Permutation operator*(const Permutation& v) const {
        if (degree() != v.degree())
            throw std::invalid_argument("Permutation: degree mismatch in composition");
        Permutation r(degree());
        for (int i = 1; i <= degree(); ++i)
            r.images_[static_cast<std::size_t>(i - 1)] = (*this)(v(i));
        return r;
    }

    Permutation inverse() const {
        Permutation r(degree());
        for (int i = 1; i <= degree(); ++i)
            r.images_[static_cast<std::size_t>((*this)(i) - 1)] = i;
        return r;
    }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    // Coxeter length = number of inversions of the one-line notation.
    int length() const {
        int inv = 0;
        const int n = degree();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if ((*this)(i) > (*this)(j)) ++inv;
        return inv;
    }

    // Right multiplication by s_k swaps the entries at positions k, k+1.
    Permutation times_simple(int k) const {
        if (k < 1 || k >= degree())
            throw std::invalid_argument("times_simple: index out of range");
        Permutation r = *this;
        std::swap(r.images_[static_cast<std::size_t>(k - 1)], r.images_[static_cast<std::size_t>(k)]);
        return r;
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    // One-line notation, e.g. "[3,1,2]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(images_[i]);
        }
        s += ']';
        return s;
    }

private:
    std::vector<int> images_;
};

} // namespace bsform

#endif
