#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ztile/spectrum.hpp"
#include "ztile/tileset.hpp"
#include "ztile/tiling.hpp"

namespace ztile {

// The complete family of tiles with a given prime-power spectrum S: every
// subset of {0,...,lcm(S)-1} with min 0, spectrum exactly S, that tiles the
// integers. Defined for spectra over at most two primes.
struct TileFamily {
    std::vector<std::int64_t> spectrum;  // prime powers, sorted
    std::int64_t modulus = 1;            // lcm(spectrum)
    std::vector<TileSet> tiles;          // canonical (lexicographic) order
};

// Direct-sum chain m{0,...,p-1} for a set tiling the nonnegative integers;
// the factor polynomials Phi_p(x^m) multiply to the mask polynomial.
struct NaturalTileDecomposition {
    std::vector<std::pair<std::int64_t, std::int64_t>> factors;  // (m, p), in peel order
};

// Complement determined by the spectrum alone, tiling every family member.
struct UniversalComplement {
    TileSet residues;
    std::int64_t period = 1;
};

// Recursive construction of the full family. Spectra spanning three or more
// primes are rejected (unsupported_case). Memoized across sub-spectra.
TileFamily enumerate_family(const std::vector<std::int64_t>& prime_powers);
TileFamily enumerate_family(const Spectrum& S);

UniversalComplement universal_complement(const Spectrum& S);
UniversalComplement universal_complement(const std::vector<std::int64_t>& prime_powers);

// Reduces A modulo lcm(S_A) and reports the family member it is congruent
// to, if any; equivalent to A tiling the integers when S_A spans at most two
// primes. The input is translated to min 0 first.
std::optional<std::pair<Spectrum, TileSet>> family_membership(const TileSet& A);

// Greedy gcd-peeling of a one-sided tile: A = k{0,...,q-1} + q*Abar with
// k = gcd(A), iterated; nullopt when no peeling exists (A does not tile the
// nonnegative integers).
std::optional<NaturalTileDecomposition> decompose_natural_tile(const TileSet& A);

}  // namespace ztile
