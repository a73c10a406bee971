#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "chaoszeta/characters.hpp"

namespace chaoszeta {

/// Counter-based random stream (Philox 2x64-10). A draw is a pure function of
/// (seed, experiment, sample, index), so the same key yields the same value on
/// every platform and under any thread schedule. Index 0 is conventionally
/// reserved for scalar draws; omega sampling uses indices 1..pi(N).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed) {}

    RandomStream with_experiment(std::uint64_t id) const {
        RandomStream s = *this;
        s.experiment_ = id;
        return s;
    }
    RandomStream with_sample(std::uint64_t i) const {
        RandomStream s = *this;
        s.sample_ = i;
        return s;
    }
    RandomStream with_index(std::uint64_t i) const {
        RandomStream s = *this;
        s.index_ = i;
        return s;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t sample() const { return sample_; }
    std::uint64_t index() const { return index_; }

    std::uint64_t draw_u64() const;
    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() const;

private:
    std::uint64_t seed_;
    std::uint64_t experiment_ = 0;
    std::uint64_t sample_ = 0;
    std::uint64_t index_ = 0;
};

/// One uniform angle theta_p in [0,1) per prime p <= N, extended to all
/// integers with prime factors <= N by omega_n = prod omega_{p_i}^{alpha_i}.
/// Angles are stored rather than complex values so |omega_n| = 1 exactly.
class OmegaAssignment {
public:
    OmegaAssignment(std::uint64_t cutoff, std::vector<std::uint32_t> primes,
                    std::vector<double> angles);

    /// All angles equal to theta (theta = 0 gives the deterministic
    /// assignment omega_p = 1 used by degenerate-product checks).
    static OmegaAssignment constant(std::uint64_t cutoff, double theta = 0.0);

    std::uint64_t cutoff() const { return cutoff_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    double angle_of_prime(std::uint64_t p) const;
    std::complex<double> omega_prime(std::uint64_t p) const;

    /// Angle of omega_n: sum of alpha_i * theta_{p_i} mod 1.
    double angle_of(std::uint64_t n) const;
    std::complex<double> omega_of(std::uint64_t n) const;

    /// theta_n for n = 1..limit via smallest-prime-factor recursion; requires
    /// limit <= cutoff (so every needed prime is present).
    std::vector<double> angle_table(std::uint64_t limit) const;

private:
    std::uint64_t cutoff_;
    std::vector<std::uint32_t> primes_;
    std::vector<double> angles_;
};

/// Uniform draw from the phi(q) characters, keyed by the stream.
Character sample_character(const CharacterSet& chars, const RandomStream& stream);

/// Fresh i.i.d. angles for all primes <= N, keyed by (stream, prime index).
OmegaAssignment sample_omegas(std::uint64_t n_cutoff, const RandomStream& stream);

struct MomentFactor {
    std::uint64_t n;
    std::uint32_t k;  // exponent of chi(n) resp. omega_n
    std::uint32_t m;  // exponent of the conjugate
};

/// E[prod chi_q(n_i)^{k_i} conj(chi_q(n_i))^{m_i}] over a uniform character:
/// 1 iff every n_i that actually occurs is coprime to q and
/// prod n_i^{k_i} == prod n_i^{m_i} (mod q); else 0. Exact.
int chi_moment_oracle(std::uint64_t q, std::span<const MomentFactor> factors);

/// E[prod omega_{n_i}^{k_i} conj(omega_{n_i})^{m_i}]: 1 iff the prime
/// factorizations of prod n_i^{k_i} and prod n_i^{m_i} match; else 0.
int omega_moment_oracle(std::span<const MomentFactor> factors);

}  // namespace chaoszeta
