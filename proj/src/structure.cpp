#include "ztile/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ztile/errors.hpp"
#include "ztile/smallnt.hpp"

namespace ztile {

namespace {

constexpr std::size_t kMaxFamilySize = 1'000'000;

std::vector<std::int64_t> validated_spectrum(std::vector<std::int64_t> spec) {
    std::sort(spec.begin(), spec.end());
    if (std::adjacent_find(spec.begin(), spec.end()) != spec.end())
        throw std::invalid_argument("spectrum: duplicate prime power");
    std::set<std::int64_t> bases;
    for (std::int64_t s : spec) {
        std::int64_t base = 0;
        if (!is_prime_power(s, &base))
            throw std::invalid_argument("spectrum: " + std::to_string(s) +
                                        " is not a prime power");
        bases.insert(base);
    }
    if (bases.size() > 2)
        throw unsupported_case("spectrum spans more than two primes");
    return spec;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& spec) {
    std::int64_t l = 1;
    for (std::int64_t s : spec) l = checked_lcm(l, s);
    return l;
}

// Powers of `p` shifted one exponent down (p itself drops out), the other
// prime's powers kept.
std::vector<std::int64_t> shift_down(const std::vector<std::int64_t>& spec, std::int64_t p) {
    std::vector<std::int64_t> out;
    for (std::int64_t s : spec) {
        if (s % p == 0) {
            if (s / p > 1) out.push_back(s / p);
        } else {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

using FamilyKey = std::vector<std::int64_t>;

const TileFamily& family_recursive(const FamilyKey& spec);

// All unions of {a_i} + p*Abar_i over a complete residue system a_0 = 0,
// a_1, ..., a_{p-1} mod p with every part inside {0,...,L-1} and every
// Abar_i drawn from the sub-family.
void build_union_case(const FamilyKey& spec, std::int64_t p, std::set<TileSet>& out) {
    const std::int64_t L = lcm_of(spec);
    const TileFamily& sub = family_recursive(shift_down(spec, p));

    struct Part {
        std::int64_t offset;
        const TileSet* bar;
    };
    std::vector<Part> chosen;
    std::vector<std::int64_t> acc;

    std::function<void(std::int64_t)> rec = [&](std::int64_t residue) {
        if (residue == p) {
            std::vector<std::int64_t> elems = acc;
            out.insert(TileSet(std::move(elems)));
            if (out.size() > kMaxFamilySize)
                throw std::runtime_error("enumerate_family: family too large");
            return;
        }
        for (const TileSet& bar : sub.tiles) {
            const std::int64_t top = L - 1 - p * bar.max();
            for (std::int64_t a = residue == 0 ? 0 : residue; a <= top; a += p) {
                const std::size_t mark = acc.size();
                for (std::int64_t v : bar.elements()) acc.push_back(a + p * v);
                rec(residue + 1);
                acc.resize(mark);
                if (residue == 0) break;  // a_0 is pinned to 0
            }
        }
    };
    rec(0);
}

const TileFamily& family_recursive(const FamilyKey& spec) {
    static std::mutex mu;
    static std::map<FamilyKey, TileFamily> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(spec); it != cache.end()) return it->second;
    }

    TileFamily fam;
    fam.spectrum = spec;
    fam.modulus = lcm_of(spec);

    if (spec.empty()) {
        fam.tiles.push_back(TileSet::singleton_zero());
    } else {
        std::set<std::int64_t> bases;
        for (std::int64_t s : spec) {
            std::int64_t b = 0;
            is_prime_power(s, &b);
            bases.insert(b);
        }
        std::set<TileSet> members;
        // If some prime p is itself in the spectrum, the universal complement
        // sits inside pZ and every member splits into p translated parts.
        std::int64_t split_prime = 0;
        for (std::int64_t b : bases) {
            if (std::binary_search(spec.begin(), spec.end(), b)) {
                split_prime = b;
                break;
            }
        }
        if (split_prime != 0) {
            build_union_case(spec, split_prime, members);
        } else {
            // No prime base present: every member is p times a member of the
            // shifted family, for one of the bases.
            for (std::int64_t b : bases) {
                const TileFamily& sub = family_recursive(shift_down(spec, b));
                for (const TileSet& bar : sub.tiles) members.insert(bar.scaled(b));
            }
        }
        fam.tiles.assign(members.begin(), members.end());
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(spec, std::move(fam));
    return it->second;
}

}  // namespace

TileFamily enumerate_family(const std::vector<std::int64_t>& prime_powers) {
    return family_recursive(validated_spectrum(prime_powers));
}

TileFamily enumerate_family(const Spectrum& S) { return enumerate_family(S.prime_powers); }

UniversalComplement universal_complement(const std::vector<std::int64_t>& prime_powers) {
    auto [B, n] = complement_from_spectrum(validated_spectrum(prime_powers));
    return UniversalComplement{std::move(B), n};
}

UniversalComplement universal_complement(const Spectrum& S) {
    return universal_complement(S.prime_powers);
}

std::optional<std::pair<Spectrum, TileSet>> family_membership(const TileSet& A) {
    const TileSet A0 = A.normalized();
    const Spectrum S = cyclotomic_divisors(A0);
    const TileFamily& fam = enumerate_family(S.prime_powers);

    std::set<std::int64_t> residues;
    for (std::int64_t a : A0.elements())
        if (!residues.insert(a % fam.modulus).second)
            return std::nullopt;  // two elements collide mod lcm(S): no member fits
    TileSet reduced(std::vector<std::int64_t>(residues.begin(), residues.end()));

    if (!std::binary_search(fam.tiles.begin(), fam.tiles.end(), reduced)) return std::nullopt;
    return std::make_pair(S, std::move(reduced));
}

namespace {

bool peel(const TileSet& A, std::vector<std::pair<std::int64_t, std::int64_t>>& chain) {
    if (A.size() == 1) return true;  // {0}: empty remainder of the chain
    const std::int64_t k = A.elements_gcd();
    const IntPoly f = mask_poly(A);

    for (std::int64_t q : prime_factors(A.size())) {
        // Candidate first block k{0,...,q-1}, i.e. divide by Phi_q(x^k).
        auto quotient = try_divide(f, expand_scale(cyclotomic(q), k));
        if (!quotient || !quotient->is_zero_one()) continue;

        std::vector<std::int64_t> rest;
        bool aligned = true;
        const auto& qc = quotient->coeffs();
        for (std::size_t d = 0; d < qc.size(); ++d) {
            if (qc[d] == 0) continue;
            if (static_cast<std::int64_t>(d) % q != 0) {
                aligned = false;
                break;
            }
            rest.push_back(static_cast<std::int64_t>(d) / q);
        }
        if (!aligned) continue;

        const std::size_t mark = chain.size();
        chain.emplace_back(k, q);
        std::vector<std::pair<std::int64_t, std::int64_t>> sub;
        if (peel(TileSet(std::move(rest)), sub)) {
            for (const auto& [m, pp] : sub) chain.emplace_back(q * m, pp);
            return true;
        }
        chain.resize(mark);
    }
    return false;
}

}  // namespace

std::optional<NaturalTileDecomposition> decompose_natural_tile(const TileSet& A) {
    NaturalTileDecomposition out;
    if (!peel(A.normalized(), out.factors)) return std::nullopt;
    return out;
}

}  // namespace ztile
