#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ztile/tileset.hpp"

namespace ztile {

// Cyclotomic divisor data of a mask polynomial. `prime_powers` is the set of
// prime powers s with Phi_s | A(x); `all_divisors` every t > 1 with
// Phi_t | A(x). Translation of A does not change either.
struct Spectrum {
    std::vector<std::int64_t> prime_powers;  // sorted
    std::vector<std::int64_t> all_divisors;  // sorted
    std::int64_t lcm = 1;                    // lcm(prime_powers); 1 when empty

    bool operator==(const Spectrum& rhs) const = default;
};

// Verdict on the two tiling conditions. t1: #A equals the product of
// Phi_s(1) over the prime-power spectrum. t2: Phi_{s1...sm} | A(x) for every
// choice of spectrum members with pairwise distinct prime bases. When t2
// fails, t2_witness is the first offending product in lexicographic subset
// order.
struct ConditionReport {
    bool t1 = false;
    bool t2 = false;
    std::optional<std::int64_t> t2_witness;
};

// Complete cyclotomic divisor sweep. Candidates are every t <= 2*diameter^2
// with phi(t) <= diameter; since deg Phi_t = phi(t) <= deg A(x) is forced for
// any divisor and phi(t) >= sqrt(t/2), the sweep misses nothing.
Spectrum cyclotomic_divisors(const TileSet& A);

bool check_t1(const TileSet& A);
bool check_t1(const TileSet& A, const Spectrum& S);

ConditionReport check_t2(const TileSet& A);
ConditionReport check_t2(const TileSet& A, const Spectrum& S);

// Spectrum of pA from the spectrum of A for prime p: powers of p move up one
// exponent, everything else is carried over (for all_divisors, t maps to pt
// when p | t and contributes both t and pt otherwise).
Spectrum spectrum_scale(const Spectrum& S, std::int64_t p);

}  // namespace ztile
