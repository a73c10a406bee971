#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace chaoszeta {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact prime factorization, sorted by prime. factorize(1) == {}.
/// Deterministic trial division with a 2/3/5 wheel; intended for n <= ~1e12.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Euler totient via the factored product formula q * prod (1 - 1/p).
std::uint64_t totient(std::uint64_t q);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// All primes <= n, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// spf[n] = smallest prime factor of n (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n);

struct CyclicFactor {
    std::uint64_t generator;  // residue mod q, lifted through CRT
    std::uint64_t order;      // multiplicative order of the lifted generator
};

/// Cyclic decomposition of (Z/qZ)^*:
///   odd p^k  -> one factor of order phi(p^k), generated by the smallest
///               primitive root mod p^k;
///   4        -> one factor of order 2;
///   2^k, k>2 -> factors of order 2 (gen -1) and 2^{k-2} (gen 3);
///   2        -> nothing.
/// Exponent vectors are cached as full per-residue tables when q <= table_limit,
/// otherwise recovered per query by baby-step giant-step.
class UnitGroupStructure {
public:
    explicit UnitGroupStructure(std::uint64_t q,
                                std::uint64_t table_limit = kDefaultTableLimit);

    std::uint64_t modulus() const { return q_; }
    std::uint64_t totient() const { return phi_; }
    const std::vector<CyclicFactor>& factors() const { return factors_; }

    bool coprime(std::uint64_t n) const;

    /// Exponent vector (e_i) with prod generator_i^{e_i} == n (mod q),
    /// 0 <= e_i < order_i. Throws std::domain_error when gcd(n, q) > 1.
    std::vector<std::uint32_t> discrete_log(std::uint64_t n) const;

    /// Table-mode fast path used by character evaluation; residue must satisfy
    /// coprime(residue). Falls back to BSGS when tables are absent.
    std::uint32_t exponent_of(std::size_t factor, std::uint64_t residue) const;

    bool has_tables() const { return !exp_tables_.empty(); }

    static constexpr std::uint64_t kDefaultTableLimit = 1'000'000;

private:
    void build_tables();
    std::vector<std::uint32_t> discrete_log_bsgs(std::uint64_t n) const;

    std::uint64_t q_;
    std::uint64_t phi_;
    std::vector<CyclicFactor> factors_;
    std::vector<std::uint64_t> pp_modulus_;   // prime-power component per factor
    std::vector<std::uint64_t> local_gen_;    // generator mod pp_modulus_
    std::vector<std::uint8_t> coprime_;       // indexed by residue
    std::vector<std::vector<std::uint32_t>> exp_tables_;  // [factor][residue]
};

/// BSGS discrete log in the cyclic group <g> of the given order mod m.
/// Returns nullopt when target is not a power of g.
std::optional<std::uint64_t> bsgs_log(std::uint64_t g, std::uint64_t target,
                                      std::uint64_t order, std::uint64_t m);

}  // namespace chaoszeta
