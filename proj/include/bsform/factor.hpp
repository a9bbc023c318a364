#ifndef BSFORM_FACTOR_HPP
#define BSFORM_FACTOR_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bsform {

using Factorization = std::vector<std::pair<mpz_class, int>>;

namespace detail {

inline mpz_class powmod(mpz_class base, mpz_class exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// Miller-Rabin with a fixed base list: deterministic for inputs below
// 3.3e24, and a deterministic function of the input in general.
inline bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) { d >>= 1; ++s; }
    static const int bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int b : bases) {
        mpz_class x = powmod(mpz_class(b), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho, fully deterministic: x0 = 2 and
// the polynomial offset c stepping 1, 2, 3, ... until a factor splits.
inline mpz_class pollard_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return mpz_class(2);
    for (mpz_class c(1);; ++c) {
        mpz_class x(2), y(2), d(1);
        mpz_class ys(0), q(1);
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class t = x - y;
                    if (t < 0) t = -t;
                    q = (q * t) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                mpz_class t = x - ys;
                if (t < 0) t = -t;
                mpz_gcd(d.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n && d != 1) return d;
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) { ++out[n]; return; }
    const mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

// Complete factorization of |x| as a sorted (prime, multiplicity) list.
// Deterministic: trial division up to 10^6, then Brent rho with a fixed
// parameter schedule. x == 0 is rejected.
inline Factorization factorize(const mpz_class& x) {
    if (x == 0)
        throw std::invalid_argument("factorize: zero has no factorization");
    mpz_class n = abs(x);
    std::map<mpz_class, int> acc;
    for (unsigned long p = 2; p <= 1000000UL && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[mpz_class(p)];
            n /= static_cast<long>(p);
        }
    }
    if (n > 1) {
        if (detail::is_probable_prime(n)) ++acc[n];
        else detail::factor_into(n, acc);
    }
    Factorization out(acc.begin(), acc.end());
    return out;
}

inline mpz_class max_prime_factor(const Factorization& f) {
    return f.empty() ? mpz_class(0) : f.back().first;
}

} // namespace bsform

#endif
