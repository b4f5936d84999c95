#include "ztile/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ztile/smallnt.hpp"

namespace ztile {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::one() { return IntPoly({mpz_class(1)}); }

IntPoly IntPoly::monomial(std::int64_t degree, mpz_class coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (coeff == 0) return zero();
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::power_minus_one(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("power_minus_one: n must be >= 1");
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c.front() = -1;
    c.back() = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::all_ones(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("all_ones: n must be >= 1");
    return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

std::int64_t IntPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

const mpz_class& IntPoly::coeff(std::int64_t d) const {
    static const mpz_class kZero(0);
    if (d < 0 || static_cast<std::size_t>(d) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<std::size_t>(d)];
}

mpz_class IntPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

bool IntPoly::is_zero_one() const {
    for (const auto& c : coeffs_)
        if (c != 0 && c != 1) return false;
    return true;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] -= rhs.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<mpz_class> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[d];
        if (d > 0) os << "*x^" << d;
        first = false;
    }
    return os.str();
}

std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (f.is_zero()) return IntPoly::zero();
    if (f.degree() < d.degree()) return std::nullopt;

    std::vector<mpz_class> rem = f.coeffs();
    const auto& dc = d.coeffs();
    const mpz_class& lead = dc.back();
    std::vector<mpz_class> quot(rem.size() - dc.size() + 1);

    for (std::size_t top = rem.size(); top >= dc.size();) {
        --top;
        mpz_class& r = rem[top];
        if (r == 0) {
            if (top + 1 == dc.size()) break;
            continue;
        }
        // The quotient coefficient is forced; a non-exact step means no
        // integer quotient exists at all.
        if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_class q = r / lead;
        const std::size_t shift = top + 1 - dc.size();
        for (std::size_t j = 0; j + 1 < dc.size(); ++j) rem[shift + j] -= q * dc[j];
        r = 0;
        quot[shift] = std::move(q);
        if (top + 1 == dc.size()) break;
    }
    for (std::size_t j = 0; j + 1 < dc.size() && j < rem.size(); ++j)
        if (rem[j] != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& d, const IntPoly& f) { return try_divide(f, d).has_value(); }

IntPoly mul_mod_cyclic(const IntPoly& f, const IntPoly& g, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mul_mod_cyclic: n must be >= 1");
    if (f.is_zero() || g.is_zero()) return IntPoly::zero();
    std::vector<mpz_class> c(static_cast<std::size_t>(n));
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (fc[i] == 0) continue;
        for (std::size_t j = 0; j < gc.size(); ++j) {
            if (gc[j] == 0) continue;
            c[(i + j) % static_cast<std::size_t>(n)] += fc[i] * gc[j];
        }
    }
    return IntPoly(std::move(c));
}

IntPoly expand_scale(const IntPoly& f, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("expand_scale: k must be >= 1");
    if (f.is_zero()) return IntPoly::zero();
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()) * k + 1);
    const auto& fc = f.coeffs();
    for (std::size_t i = 0; i < fc.size(); ++i) c[i * static_cast<std::size_t>(k)] = fc[i];
    return IntPoly(std::move(c));
}

namespace {

// Phi_s for squarefree s straight from the defining product: divide x^s - 1
// by the product of Phi_d over proper divisors d.
IntPoly cyclotomic_squarefree(std::int64_t s) {
    IntPoly denom = IntPoly::one();
    for (std::int64_t d : divisors(s)) {
        if (d == s) continue;
        denom = denom * cyclotomic(d);
    }
    auto q = try_divide(IntPoly::power_minus_one(s), denom);
    if (!q) throw std::logic_error("cyclotomic: defining division failed");
    return *q;
}

}  // namespace

IntPoly cyclotomic(std::int64_t s) {
    if (s < 1) throw std::invalid_argument("cyclotomic: s must be >= 1");

    static std::mutex mu;
    static std::map<std::int64_t, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(s); it != cache.end()) return it->second;
    }

    IntPoly result;
    if (s == 1) {
        result = IntPoly({mpz_class(-1), mpz_class(1)});
    } else {
        std::int64_t radical = 1;
        for (std::int64_t p : prime_factors(s)) radical *= p;
        if (radical == s) {
            result = cyclotomic_squarefree(s);
        } else {
            // Phi_s(x) = Phi_rad(s)(x^{s/rad(s)}); exact, and keeps the
            // division work on squarefree orders only.
            result = expand_scale(cyclotomic(radical), s / radical);
        }
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(s, std::move(result));
    return it->second;
}

}  // namespace ztile
