#include "chaoszeta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace chaoszeta {

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<PrimePower> out;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    // 2/3/5 wheel: candidate increments cycling mod 30
    static constexpr unsigned step[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    unsigned i = 0;
    while (p * p <= n) {
        if (n % p == 0) strip(p);
        p += step[i];
        i = (i + 1) & 7;
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::uint64_t totient(std::uint64_t q) {
    std::uint64_t phi = q;
    for (const auto& [p, e] : factorize(q)) phi -= phi / p;
    return phi;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::vector<std::uint8_t> composite(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return primes;
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

std::optional<std::uint64_t> bsgs_log(std::uint64_t g, std::uint64_t target,
                                      std::uint64_t order, std::uint64_t m) {
    target %= m;
    const auto steps =
        static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(steps * 2);
    std::uint64_t cur = 1 % m;
    for (std::uint64_t j = 0; j < steps; ++j) {
        baby.emplace(cur, j);
        cur = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(cur) * g % m);
    }
    // giant stride g^{-steps} = g^{order - steps mod order}
    const std::uint64_t stride = pow_mod(g, order - steps % order, m);
    cur = target;
    for (std::uint64_t i = 0; i * steps <= order; ++i) {
        if (auto it = baby.find(cur); it != baby.end()) {
            std::uint64_t x = i * steps + it->second;
            if (x < order) return x;
            if (x % order < order) return x % order;
        }
        cur = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(cur) * stride % m);
    }
    return std::nullopt;
}

namespace {

// order of g mod m given that it divides d
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t m, std::uint64_t d) {
    std::uint64_t order = d;
    for (const auto& [p, e] : factorize(d)) {
        for (unsigned i = 0; i < e && order % p == 0 && pow_mod(g, order / p, m) == 1;
             ++i)
            order /= p;
    }
    return order;
}

// smallest residue generating the full cyclic group mod odd p^k
std::uint64_t smallest_primitive_root(std::uint64_t pp, std::uint64_t phi) {
    auto phi_factors = factorize(phi);
    for (std::uint64_t g = 2; g < pp; ++g) {
        if (std::gcd(g, pp) != 1) continue;
        bool primitive = true;
        for (const auto& [p, e] : phi_factors) {
            if (pow_mod(g, phi / p, pp) == 1) { primitive = false; break; }
        }
        if (primitive) return g;
    }
    throw std::logic_error("smallest_primitive_root: no generator found");
}

// x == a (mod m1), x == 1 (mod m2), gcd(m1, m2) = 1
std::uint64_t crt_lift(std::uint64_t a, std::uint64_t m1, std::uint64_t m2) {
    if (m2 == 1) return a % m1;
    // inverse of m1 mod m2 by extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m2),
                 new_r = static_cast<std::int64_t>(m1 % m2);
    while (new_r != 0) {
        std::int64_t quo = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quo * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quo * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(m2);
    const std::uint64_t inv = static_cast<std::uint64_t>(t);
    // x = a + m1 * ((1 - a) * inv mod m2)
    const std::uint64_t q = m1 * m2;
    const std::uint64_t a_mod = a % m2;
    const std::uint64_t diff = (1 + m2 - a_mod) % m2;
    const std::uint64_t k = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(diff) * inv % m2);
    return (a + m1 * k) % q;
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(std::uint64_t q, std::uint64_t table_limit)
    : q_(q), phi_(1) {
    if (q == 0) throw std::invalid_argument("UnitGroupStructure: q must be >= 1");
    phi_ = totient(q);
    for (const auto& [p, e] : factorize(q)) {
        std::uint64_t pp = 1;
        for (unsigned i = 0; i < e; ++i) pp *= p;
        const std::uint64_t rest = q / pp;
        if (p == 2) {
            if (e == 1) continue;  // (Z/2)^* trivial
            if (e == 2) {
                factors_.push_back({crt_lift(3, pp, rest), 2});
                pp_modulus_.push_back(pp);
                local_gen_.push_back(3);
                continue;
            }
            // (Z/2^k)^* = <-1> x <3>, orders 2 and 2^{k-2}
            factors_.push_back({crt_lift(pp - 1, pp, rest), 2});
            pp_modulus_.push_back(pp);
            local_gen_.push_back(pp - 1);
            factors_.push_back({crt_lift(3, pp, rest), pp / 4});
            pp_modulus_.push_back(pp);
            local_gen_.push_back(3);
        } else {
            const std::uint64_t phi_pp = pp / p * (p - 1);
            const std::uint64_t g = smallest_primitive_root(pp, phi_pp);
            factors_.push_back({crt_lift(g, pp, rest), phi_pp});
            pp_modulus_.push_back(pp);
            local_gen_.push_back(g);
        }
    }
    coprime_.assign(q_, 0);
    for (std::uint64_t r = 0; r < q_; ++r)
        coprime_[r] = (std::gcd(r, q_) == 1) ? 1 : 0;
    if (q_ <= table_limit) build_tables();
}

void UnitGroupStructure::build_tables() {
    const std::size_t k = factors_.size();
    exp_tables_.assign(k, std::vector<std::uint32_t>(q_, 0));
    if (k == 0) return;
    // odometer over exponent tuples; running product updated one generator
    // step at a time (generator^order == 1 mod q, so wrap-around is free)
    std::vector<std::uint32_t> e(k, 0);
    std::uint64_t x = 1 % q_;
    for (std::uint64_t count = 0; count < phi_; ++count) {
        for (std::size_t i = 0; i < k; ++i) exp_tables_[i][x] = e[i];
        std::size_t i = 0;
        while (i < k) {
            x = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(x) * factors_[i].generator % q_);
            if (++e[i] < factors_[i].order) break;
            e[i] = 0;
            ++i;
        }
    }
}

bool UnitGroupStructure::coprime(std::uint64_t n) const {
    return coprime_[n % q_] != 0;
}

std::uint32_t UnitGroupStructure::exponent_of(std::size_t factor,
                                              std::uint64_t residue) const {
    if (!exp_tables_.empty()) return exp_tables_[factor][residue];
    return discrete_log_bsgs(residue)[factor];
}

std::vector<std::uint32_t> UnitGroupStructure::discrete_log(std::uint64_t n) const {
    const std::uint64_t r = n % q_;
    if (!coprime_[r])
        throw std::domain_error("discrete_log: argument not coprime to modulus");
    if (!exp_tables_.empty()) {
        std::vector<std::uint32_t> e(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) e[i] = exp_tables_[i][r];
        return e;
    }
    return discrete_log_bsgs(r);
}

std::vector<std::uint32_t> UnitGroupStructure::discrete_log_bsgs(std::uint64_t n) const {
    std::vector<std::uint32_t> e(factors_.size(), 0);
    std::size_t i = 0;
    while (i < factors_.size()) {
        const std::uint64_t pp = pp_modulus_[i];
        const std::uint64_t target = n % pp;
        const bool two_part = pp % 2 == 0 && i + 1 < factors_.size() &&
                              pp_modulus_[i + 1] == pp;
        if (two_part) {
            // <-1> x <3>: try target and -target in <3>
            if (auto b = bsgs_log(3, target, factors_[i + 1].order, pp)) {
                e[i] = 0;
                e[i + 1] = static_cast<std::uint32_t>(*b);
            } else if (auto b2 = bsgs_log(3, pp - target, factors_[i + 1].order, pp)) {
                e[i] = 1;
                e[i + 1] = static_cast<std::uint32_t>(*b2);
            } else {
                throw std::logic_error("discrete_log: 2-part decomposition failed");
            }
            i += 2;
        } else {
            auto b = bsgs_log(local_gen_[i], target, factors_[i].order, pp);
            if (!b) throw std::logic_error("discrete_log: BSGS failed");
            e[i] = static_cast<std::uint32_t>(*b);
            ++i;
        }
    }
    return e;
}

}  // namespace chaoszeta
