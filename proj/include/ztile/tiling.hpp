#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ztile/spectrum.hpp"
#include "ztile/tileset.hpp"

namespace ztile {

// Witness that tile + (complement_residues + period*Z) = Z. Both sets are
// stored with min 0; period = #tile * #complement_residues.
struct TilingCertificate {
    TileSet tile;
    TileSet complement_residues;
    std::int64_t period = 1;

    bool operator==(const TilingCertificate& rhs) const = default;
};

enum class ContainmentSide { Tile, Complement };

// For a tiling whose period has one or two prime factors, one side always
// lies inside pZ for some prime p | period.
struct ContainmentVerdict {
    ContainmentSide side;
    std::int64_t p;
};

// Split of A by residue classes mod k: parts[i] = (a_i, Abar_i) with
// a_i = min of class i and Abar_i = (class_i - a_i)/k, so that
// A = union of {a_i} + k*Abar_i.
struct ModularDecomposition {
    std::int64_t modulus = 1;
    std::vector<std::pair<std::int64_t, TileSet>> parts;
};

inline constexpr std::int64_t kDefaultDiameterCap = 22;

// True iff tile + complement_residues is a complete set of residues mod
// period. Three equivalent criteria are evaluated (residue count, cyclic
// polynomial product, cardinality + cyclotomic divisor cover); they must
// agree by theory, so disagreement throws internal_check_error.
bool verify_certificate(const TilingCertificate& cert);

// The complement determined by a prime-power spectrum alone: period
// n = lcm(S) and mask B(x) = prod Phi_s(x^{t(s)}) over prime-power factors s
// of n that are missing from S, t(s) the largest factor of n coprime to s.
// Checks that B lands in pZ for every prime p in S.
std::pair<TileSet, std::int64_t> complement_from_spectrum(
    const std::vector<std::int64_t>& prime_powers);

// Certificate for a set satisfying (T1) and (T2); throws std::invalid_argument
// naming the failed condition otherwise. Period is exactly lcm(S_A).
TilingCertificate construct_complement(const TileSet& A);

// Exact tiling decision for diameter <= diameter_cap (throws
// diameter_cap_error beyond). Runs the left-to-right forced scan whose state
// is the coverage bitmask of the `diameter` cells ahead of the frontier; each
// state has at most one successor, and A tiles Z iff the resulting partial
// functional graph has a cycle. The certificate is read off a cycle: the
// one reached from the fresh (empty) boundary when that orbit survives,
// otherwise the shortest cycle anywhere in the graph.
std::optional<TilingCertificate> tiles_integers(const TileSet& A,
                                                std::int64_t diameter_cap = kDefaultDiameterCap);

// Backtracking exact-cover search for a complement of A modulo n, covering
// the smallest uncovered residue first and trying candidates in increasing
// order; returns the first (lexicographically least) solution.
std::optional<TileSet> find_complement_mod_n(const TileSet& A, std::int64_t n);

// Tiling by rA (mod n, renormalized) with the same complement and period,
// for r coprime to #tile; applied prime factor by prime factor.
TilingCertificate scale_certificate(const TilingCertificate& cert, std::int64_t r);

// Period reduction: for r | period with r > 1 and gcd(r, #tile) = 1, the
// complement residues divisible by r, divided by r, tile the same set with
// period/r.
TilingCertificate reduce_period(const TilingCertificate& cert, std::int64_t r);

// The pZ-containment verdict for a verified certificate whose period has one
// or two prime factors; unsupported_case for three or more.
ContainmentVerdict containment_dichotomy(const TilingCertificate& cert);

// Residue-class decomposition of A mod k (k >= 2); throws
// unequal_distribution_error carrying the census when the classes differ in
// size.
ModularDecomposition decompose_mod(const TileSet& A, std::int64_t k);

// Exact check of A(x^p) B(x) = 1 + x + ... + x^{n-1} (mod x^n - 1) for prime
// p not dividing #A, given that A(x) B(x) already satisfies the congruence.
// Theory says this always holds; a false return on valid inputs is a bug.
bool scaled_mask_congruence(const TileSet& A, const TileSet& B, std::int64_t n,
                            std::int64_t p);

}  // namespace ztile
