#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ztile {

// Small integer number theory by trial division. Everything in this project
// that reaches these helpers is tiny (divisor candidates, prime bases,
// periods), so simplicity wins over sieves.

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// (prime, exponent) pairs, ascending by prime.
inline std::vector<std::pair<std::int64_t, std::int64_t>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        std::int64_t e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Distinct prime factors, ascending.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

// true iff n = p^k for a prime p and k >= 1; reports p through `base`.
inline bool is_prime_power(std::int64_t n, std::int64_t* base = nullptr) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    if (base) *base = f[0].first;
    return true;
}

// All divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t sz = out.size();
        std::int64_t pk = 1;
        for (std::int64_t k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer product overflows 64 bits");
    return r;
}

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
    return checked_mul(a / std::gcd(a, b), b);
}

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace ztile
