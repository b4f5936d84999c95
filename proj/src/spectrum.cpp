#include "ztile/spectrum.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "ztile/errors.hpp"
#include "ztile/smallnt.hpp"

namespace ztile {

namespace {

// Divisor sweeps are quadratic in the diameter; past this the polynomials are
// far outside anything this library is for.
constexpr std::int64_t kMaxSpectrumDiameter = 2048;

// Euler phi for every value up to n, cached across calls. The sweeps ask for
// phi of the same small range millions of times.
const std::vector<std::int32_t>& phi_table(std::int64_t n) {
    static std::mutex mu;
    static std::vector<std::int32_t> table;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<std::int64_t>(table.size()) <= n) {
        const std::size_t size = static_cast<std::size_t>(n) + 1;
        table.resize(size);
        for (std::size_t i = 0; i < size; ++i) table[i] = static_cast<std::int32_t>(i);
        for (std::size_t p = 2; p < size; ++p) {
            if (table[p] != static_cast<std::int32_t>(p)) continue;  // p composite
            for (std::size_t m = p; m < size; m += p) table[m] -= table[m] / p;
        }
    }
    return table;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& values) {
    std::int64_t l = 1;
    for (std::int64_t v : values) l = checked_lcm(l, v);
    return l;
}

}  // namespace

Spectrum cyclotomic_divisors(const TileSet& A) {
    const TileSet A0 = A.normalized();
    const std::int64_t D = A0.diameter();
    Spectrum S;
    if (D == 0) return S;
    if (D > kMaxSpectrumDiameter)
        throw std::invalid_argument("cyclotomic_divisors: diameter too large");

    const std::int64_t bound = 2 * D * D;
    const auto& phi = phi_table(bound);
    const IntPoly f = mask_poly(A0);
    for (std::int64_t t = 2; t <= bound; ++t) {
        if (phi[static_cast<std::size_t>(t)] > D) continue;
        if (!divides(cyclotomic(t), f)) continue;
        S.all_divisors.push_back(t);
        if (is_prime_power(t)) S.prime_powers.push_back(t);
    }
    S.lcm = lcm_of(S.prime_powers);
    return S;
}

bool check_t1(const TileSet& A, const Spectrum& S) {
    std::int64_t product = 1;
    for (std::int64_t s : S.prime_powers) {
        std::int64_t base = 0;
        is_prime_power(s, &base);
        product = checked_mul(product, base);  // Phi_{p^k}(1) = p
    }
    return product == A.size();
}

bool check_t1(const TileSet& A) { return check_t1(A, cyclotomic_divisors(A)); }

namespace {

// DFS over subsets of the prime-power spectrum in lexicographic order,
// extending only with fresh prime bases. The first subset of size >= 2 whose
// product is not a divisor is the witness. A subset whose phi-product
// exceeds the diameter fails outright (deg Phi would exceed deg A), which
// also keeps the products within 64 bits.
struct T2Search {
    const std::vector<std::int64_t>& pp;
    const std::vector<std::int64_t>& all_divisors;
    std::int64_t diameter;
    std::vector<std::int64_t> used_bases;
    std::optional<std::int64_t> witness;

    bool dfs(std::size_t start, std::size_t count, std::int64_t product,
             std::int64_t phi_product) {
        for (std::size_t i = start; i < pp.size(); ++i) {
            std::int64_t base = 0;
            is_prime_power(pp[i], &base);
            if (std::find(used_bases.begin(), used_bases.end(), base) != used_bases.end())
                continue;  // one prime power per prime base
            const std::int64_t prod = checked_mul(product, pp[i]);
            const std::int64_t phi_prod = phi_product * (pp[i] - pp[i] / base);
            if (count + 1 >= 2) {
                const bool ok = phi_prod <= diameter &&
                                std::binary_search(all_divisors.begin(), all_divisors.end(), prod);
                if (!ok) {
                    witness = prod;
                    return false;
                }
            }
            used_bases.push_back(base);
            const bool deeper = dfs(i + 1, count + 1, prod, phi_prod);
            used_bases.pop_back();
            if (!deeper) return false;
        }
        return true;
    }
};

}  // namespace

ConditionReport check_t2(const TileSet& A, const Spectrum& S) {
    ConditionReport report;
    report.t1 = check_t1(A, S);
    T2Search search{S.prime_powers, S.all_divisors, A.diameter(), {}, std::nullopt};
    report.t2 = search.dfs(0, 0, 1, 1);
    report.t2_witness = search.witness;
    return report;
}

ConditionReport check_t2(const TileSet& A) { return check_t2(A, cyclotomic_divisors(A)); }

Spectrum spectrum_scale(const Spectrum& S, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("spectrum_scale: p must be prime");
    Spectrum out;
    for (std::int64_t s : S.prime_powers)
        out.prime_powers.push_back(s % p == 0 ? checked_mul(s, p) : s);
    std::sort(out.prime_powers.begin(), out.prime_powers.end());

    std::set<std::int64_t> divs;
    for (std::int64_t t : S.all_divisors) {
        if (t % p != 0) divs.insert(t);
        divs.insert(checked_mul(t, p));
    }
    out.all_divisors.assign(divs.begin(), divs.end());
    out.lcm = lcm_of(out.prime_powers);
    return out;
}

}  // namespace ztile
