#include "ztile/tiling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ztile/errors.hpp"
#include "ztile/smallnt.hpp"

namespace ztile {

bool verify_certificate(const TilingCertificate& cert) {
    const std::int64_t n = cert.period;
    if (n < 1) throw std::invalid_argument("verify_certificate: period must be >= 1");
    const TileSet& A = cert.tile;
    const TileSet& B = cert.complement_residues;

    // (a) every residue mod n hit exactly once by A + B
    bool residue_ok = A.size() * B.size() == n;
    if (residue_ok) {
        std::vector<std::int8_t> seen(static_cast<std::size_t>(n), 0);
        for (std::int64_t a : A.elements()) {
            for (std::int64_t b : B.elements()) {
                auto& c = seen[static_cast<std::size_t>((a + b) % n)];
                if (c) {
                    residue_ok = false;
                    break;
                }
                c = 1;
            }
            if (!residue_ok) break;
        }
    }

    // (b) A(x) B(x) = 1 + x + ... + x^{n-1} (mod x^n - 1)
    const IntPoly fa = mask_poly(A);
    const IntPoly fb = mask_poly(B);
    const bool poly_ok = mul_mod_cyclic(fa, fb, n) == IntPoly::all_ones(n);

    // (c) n = #A * #B and every Phi_t with t | n, t > 1 divides A(x) or B(x)
    bool divisor_ok = A.size() * B.size() == n;
    if (divisor_ok) {
        for (std::int64_t t : divisors(n)) {
            if (t == 1) continue;
            const IntPoly& phi = cyclotomic(t);
            if (!divides(phi, fa) && !divides(phi, fb)) {
                divisor_ok = false;
                break;
            }
        }
    }

    if (residue_ok != poly_ok || poly_ok != divisor_ok)
        throw internal_check_error("verify_certificate: equivalent criteria disagree on " +
                                   A.str() + " + " + B.str() + " mod " + std::to_string(n));
    return residue_ok;
}

std::pair<TileSet, std::int64_t> complement_from_spectrum(
    const std::vector<std::int64_t>& prime_powers) {
    std::vector<std::int64_t> spec = prime_powers;
    std::sort(spec.begin(), spec.end());
    spec.erase(std::unique(spec.begin(), spec.end()), spec.end());

    std::int64_t n = 1;
    for (std::int64_t s : spec) {
        std::int64_t base = 0;
        if (!is_prime_power(s, &base))
            throw std::invalid_argument("complement_from_spectrum: " + std::to_string(s) +
                                        " is not a prime power");
        n = checked_lcm(n, s);
    }

    IntPoly mask = IntPoly::one();
    for (const auto& [p, e] : factorize(n)) {
        std::int64_t s = 1;
        const std::int64_t coprime_part = n / ipow(p, e);  // largest factor of n coprime to p
        for (std::int64_t k = 1; k <= e; ++k) {
            s *= p;
            if (std::binary_search(spec.begin(), spec.end(), s)) continue;
            mask = mask * expand_scale(cyclotomic(s), coprime_part);
        }
    }

    if (!mask.is_zero_one())
        throw internal_check_error("complement_from_spectrum: mask is not 0/1");
    TileSet B = tile_from_mask(mask);

    // The complement lands in pZ for every prime p present in the spectrum.
    for (std::int64_t s : spec) {
        if (!is_prime(s)) continue;
        for (std::int64_t b : B.elements())
            if (b % s != 0)
                throw internal_check_error("complement_from_spectrum: complement not in " +
                                           std::to_string(s) + "Z");
    }
    return {std::move(B), n};
}

TilingCertificate construct_complement(const TileSet& A) {
    const Spectrum S = cyclotomic_divisors(A);
    const ConditionReport cond = check_t2(A, S);
    if (!cond.t1) throw std::invalid_argument("construct_complement: (T1) fails");
    if (!cond.t2)
        throw std::invalid_argument("construct_complement: (T2) fails, witness " +
                                    std::to_string(*cond.t2_witness));
    auto [B, n] = complement_from_spectrum(S.prime_powers);
    return TilingCertificate{A.normalized(), std::move(B), n};
}

namespace {

// One scan step. State: bit i set <=> cell frontier+i already covered,
// 0 <= i < D. Placing a translate needs the full D+1 bit mask of A since the
// element D lands one past the window before the shift.
struct ScanGraph {
    std::uint32_t tile_mask;   // bits a for a in A (D+1 bits, bit 0 and bit D set)
    std::uint32_t state_mask;  // low D bits
    // Successor, or nullopt at an overlap dead end.
    std::optional<std::uint32_t> step(std::uint32_t m, bool* placed) const {
        if ((m & 1u) == 0) {
            if ((m & tile_mask) != 0) return std::nullopt;  // forced translate overlaps
            *placed = true;
            return (m | tile_mask) >> 1;
        }
        *placed = false;
        return m >> 1;
    }
};

TilingCertificate certificate_from_cycle(const TileSet& A,
                                         const std::vector<std::uint32_t>& cycle) {
    const std::int64_t period = static_cast<std::int64_t>(cycle.size());
    // Rotate so that offset 0 carries a translate: deterministic choice is the
    // smallest placement state on the cycle.
    std::size_t start = 0;
    std::uint32_t best = UINT32_MAX;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if ((cycle[i] & 1u) == 0 && cycle[i] < best) {
            best = cycle[i];
            start = i;
        }
    }
    std::vector<std::int64_t> starts;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const std::uint32_t m = cycle[(start + k) % cycle.size()];
        if ((m & 1u) == 0) starts.push_back(static_cast<std::int64_t>(k));
    }
    return TilingCertificate{A, TileSet(std::move(starts)), period};
}

}  // namespace

std::optional<TilingCertificate> tiles_integers(const TileSet& A, std::int64_t diameter_cap) {
    // Hard bound from the uint32 state encoding and the 2^D state table.
    constexpr std::int64_t kMaxOracleDiameter = 26;
    const std::int64_t effective_cap = std::min(diameter_cap, kMaxOracleDiameter);
    const TileSet A0 = A.normalized();
    const std::int64_t D = A0.diameter();
    if (D > effective_cap) throw diameter_cap_error(D, effective_cap);
    if (D == 0) return TilingCertificate{A0, TileSet::singleton_zero(), 1};

    ScanGraph graph{};
    for (std::int64_t a : A0.elements()) graph.tile_mask |= (1u << a);

    const std::size_t num_states = std::size_t{1} << D;
    enum : std::uint8_t { White, Gray, Black };
    std::vector<std::uint8_t> color(num_states, White);
    std::vector<std::int32_t> path_index(num_states, -1);

    std::vector<std::uint32_t> best_cycle;
    bool best_from_fresh = false;

    std::vector<std::uint32_t> path;
    for (std::uint32_t origin = 0; origin < num_states; ++origin) {
        if (color[origin] != White) continue;
        path.clear();
        std::uint32_t m = origin;
        while (true) {
            color[m] = Gray;
            path_index[m] = static_cast<std::int32_t>(path.size());
            path.push_back(m);
            bool placed = false;
            auto next = graph.step(m, &placed);
            if (!next) break;  // dead end
            if (color[*next] == Gray) {
                // Cycle: the tail of the current path from *next onward.
                std::vector<std::uint32_t> cycle(path.begin() + path_index[*next], path.end());
                const bool from_fresh = origin == 0;
                if (from_fresh || (!best_from_fresh &&
                                   (best_cycle.empty() || cycle.size() < best_cycle.size()))) {
                    best_cycle = std::move(cycle);
                    best_from_fresh = from_fresh;
                }
                break;
            }
            if (color[*next] == Black) break;  // joins an already-resolved component
            m = *next;
        }
        for (std::uint32_t s : path) color[s] = Black;
        // The fresh-boundary orbit decides the reported tiling when it
        // survives; no shorter cycle elsewhere overrides it.
        if (best_from_fresh) break;
    }

    if (best_cycle.empty()) return std::nullopt;
    return certificate_from_cycle(A0, best_cycle);
}

std::optional<TileSet> find_complement_mod_n(const TileSet& A, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("find_complement_mod_n: n must be >= 1");
    if (n % A.size() != 0)
        throw std::invalid_argument("find_complement_mod_n: #A does not divide n");
    const TileSet A0 = A.normalized();

    std::vector<std::int8_t> covered(static_cast<std::size_t>(n), 0);
    std::vector<std::int8_t> used(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> chosen;
    const std::int64_t want = n / A0.size();

    auto place = [&](std::int64_t b, std::int8_t value) {
        for (std::int64_t a : A0.elements())
            covered[static_cast<std::size_t>((a + b) % n)] = value;
    };
    auto fits = [&](std::int64_t b) {
        for (std::int64_t a : A0.elements())
            if (covered[static_cast<std::size_t>((a + b) % n)]) return false;
        return true;
    };

    std::function<bool()> search = [&]() -> bool {
        if (static_cast<std::int64_t>(chosen.size()) == want) return true;
        std::int64_t r = -1;
        for (std::int64_t i = 0; i < n; ++i) {
            if (!covered[static_cast<std::size_t>(i)]) {
                r = i;
                break;
            }
        }
        // Candidate translates covering r, in increasing order.
        std::set<std::int64_t> candidates;
        for (std::int64_t a : A0.elements()) candidates.insert(((r - a) % n + n) % n);
        for (std::int64_t b : candidates) {
            if (used[static_cast<std::size_t>(b)] || !fits(b)) continue;
            used[static_cast<std::size_t>(b)] = 1;
            place(b, 1);
            chosen.push_back(b);
            if (search()) return true;
            chosen.pop_back();
            place(b, 0);
            used[static_cast<std::size_t>(b)] = 0;
        }
        return false;
    };

    if (!search()) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return TileSet(std::move(chosen));
}

TilingCertificate scale_certificate(const TilingCertificate& cert, std::int64_t r) {
    if (r < 1) throw std::invalid_argument("scale_certificate: r must be >= 1");
    if (std::gcd(r, cert.tile.size()) != 1)
        throw std::invalid_argument("scale_certificate: r shares a factor with #tile");

    const std::int64_t n = cert.period;
    TileSet tile = cert.tile.normalized();
    for (const auto& [p, e] : factorize(r)) {
        for (std::int64_t k = 0; k < e; ++k) {
            std::set<std::int64_t> scaled;
            for (std::int64_t a : tile.elements()) {
                const auto v = static_cast<std::int64_t>(static_cast<__int128>(a) * p % n);
                if (!scaled.insert(v).second)
                    throw std::invalid_argument(
                        "scale_certificate: scaling collapsed the tile (certificate invalid?)");
            }
            tile = TileSet(std::vector<std::int64_t>(scaled.begin(), scaled.end())).normalized();
        }
    }
    return TilingCertificate{std::move(tile), cert.complement_residues, n};
}

TilingCertificate reduce_period(const TilingCertificate& cert, std::int64_t r) {
    const std::int64_t n = cert.period;
    if (r <= 1 || n % r != 0)
        throw std::invalid_argument("reduce_period: r must be a factor of the period, r > 1");
    if (std::gcd(r, cert.tile.size()) != 1)
        throw std::invalid_argument("reduce_period: r shares a factor with #tile");

    // Scaling the tile by r keeps the complement; of it only the residues
    // divisible by r land inside rZ, and dividing by r drops the period to
    // n/r. The tile itself is unchanged.
    std::vector<std::int64_t> reduced;
    for (std::int64_t b : cert.complement_residues.elements())
        if (b % r == 0) reduced.push_back(b / r);
    if (static_cast<std::int64_t>(reduced.size()) * cert.tile.size() * r != n)
        throw std::invalid_argument("reduce_period: certificate does not reduce (invalid input?)");
    return TilingCertificate{cert.tile, TileSet(std::move(reduced)), n / r};
}

ContainmentVerdict containment_dichotomy(const TilingCertificate& cert) {
    const auto primes = prime_factors(cert.period);
    if (primes.empty())
        throw std::invalid_argument("containment_dichotomy: period 1 has no prime factor");
    if (primes.size() > 2)
        throw unsupported_case("containment_dichotomy: period has more than two prime factors");
    if (!verify_certificate(cert))
        throw std::invalid_argument("containment_dichotomy: certificate does not verify");

    auto inside = [](const TileSet& s, std::int64_t p) {
        for (std::int64_t v : s.elements())
            if (v % p != 0) return false;
        return true;
    };
    for (std::int64_t p : primes)
        if (inside(cert.tile, p)) return {ContainmentSide::Tile, p};
    for (std::int64_t p : primes)
        if (inside(cert.complement_residues, p)) return {ContainmentSide::Complement, p};
    throw internal_check_error("containment_dichotomy: no containment found");
}

ModularDecomposition decompose_mod(const TileSet& A, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("decompose_mod: k must be >= 2");
    std::vector<std::vector<std::int64_t>> classes(static_cast<std::size_t>(k));
    for (std::int64_t a : A.elements()) classes[static_cast<std::size_t>(a % k)].push_back(a);

    std::vector<std::int64_t> census;
    census.reserve(classes.size());
    for (const auto& c : classes) census.push_back(static_cast<std::int64_t>(c.size()));
    if (std::set<std::int64_t>(census.begin(), census.end()).size() != 1)
        throw unequal_distribution_error(k, std::move(census));

    ModularDecomposition out;
    out.modulus = k;
    for (auto& c : classes) {
        const std::int64_t a_i = c.front();
        std::vector<std::int64_t> bar;
        bar.reserve(c.size());
        for (std::int64_t a : c) bar.push_back((a - a_i) / k);
        out.parts.emplace_back(a_i, TileSet(std::move(bar)));
    }
    return out;
}

bool scaled_mask_congruence(const TileSet& A, const TileSet& B, std::int64_t n,
                            std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("scaled_mask_congruence: p must be prime");
    if (A.size() % p == 0)
        throw std::invalid_argument("scaled_mask_congruence: p divides #A");
    const IntPoly fa = mask_poly(A);
    const IntPoly fb = mask_poly(B);
    const IntPoly ones = IntPoly::all_ones(n);
    if (mul_mod_cyclic(fa, fb, n) != ones)
        throw std::invalid_argument(
            "scaled_mask_congruence: A(x)B(x) is not congruent to 1+x+...+x^{n-1}");
    return mul_mod_cyclic(expand_scale(fa, p), fb, n) == ones;
}

}  // namespace ztile
