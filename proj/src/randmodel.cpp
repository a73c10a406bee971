#include "chaoszeta/randmodel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace chaoszeta {

namespace {

constexpr std::uint64_t kPhiloxMult = 0xD2B74407B1CE6E93ull;
constexpr std::uint64_t kPhiloxBump = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t philox2x64(std::uint64_t c0, std::uint64_t c1, std::uint64_t key) {
    std::uint64_t x0 = c0, x1 = c1, k = key;
    for (int round = 0; round < 10; ++round) {
        const unsigned __int128 prod =
            static_cast<unsigned __int128>(kPhiloxMult) * x0;
        const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
        const std::uint64_t lo = static_cast<std::uint64_t>(prod);
        x0 = hi ^ k ^ x1;
        x1 = lo;
        k += kPhiloxBump;
    }
    return x0;
}

}  // namespace

std::uint64_t RandomStream::draw_u64() const {
    const std::uint64_t key = splitmix64(splitmix64(seed_) + experiment_);
    return philox2x64(sample_, index_, key);
}

double RandomStream::uniform01() const {
    return static_cast<double>(draw_u64() >> 11) * 0x1.0p-53;
}

OmegaAssignment::OmegaAssignment(std::uint64_t cutoff,
                                 std::vector<std::uint32_t> primes,
                                 std::vector<double> angles)
    : cutoff_(cutoff), primes_(std::move(primes)), angles_(std::move(angles)) {
    if (primes_.size() != angles_.size())
        throw std::invalid_argument("OmegaAssignment: primes/angles size mismatch");
}

OmegaAssignment OmegaAssignment::constant(std::uint64_t cutoff, double theta) {
    auto primes = primes_up_to(static_cast<std::uint32_t>(cutoff));
    std::vector<double> angles(primes.size(), theta);
    return OmegaAssignment(cutoff, std::move(primes), std::move(angles));
}

double OmegaAssignment::angle_of_prime(std::uint64_t p) const {
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
        throw std::domain_error("OmegaAssignment: prime exceeds cutoff or is absent");
    return angles_[static_cast<std::size_t>(it - primes_.begin())];
}

std::complex<double> OmegaAssignment::omega_prime(std::uint64_t p) const {
    const double theta = 2.0 * std::numbers::pi * angle_of_prime(p);
    return {std::cos(theta), std::sin(theta)};
}

double OmegaAssignment::angle_of(std::uint64_t n) const {
    double angle = 0.0;
    for (const auto& [p, e] : factorize(n))
        angle = std::fmod(angle + static_cast<double>(e) * angle_of_prime(p), 1.0);
    return angle;
}

std::complex<double> OmegaAssignment::omega_of(std::uint64_t n) const {
    const double theta = 2.0 * std::numbers::pi * angle_of(n);
    return {std::cos(theta), std::sin(theta)};
}

std::vector<double> OmegaAssignment::angle_table(std::uint64_t limit) const {
    if (limit > cutoff_)
        throw std::domain_error("OmegaAssignment: angle_table limit exceeds cutoff");
    const auto spf = smallest_factor_table(static_cast<std::uint32_t>(limit));
    std::vector<double> theta(limit + 1, 0.0);
    std::vector<double> prime_angle(limit + 1, 0.0);
    for (std::size_t i = 0; i < primes_.size() && primes_[i] <= limit; ++i)
        prime_angle[primes_[i]] = angles_[i];
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const std::uint32_t p = spf[n];
        theta[n] = std::fmod(theta[n / p] + prime_angle[p], 1.0);
    }
    return theta;
}

Character sample_character(const CharacterSet& chars, const RandomStream& stream) {
    return chars[stream.draw_u64() % chars.size()];
}

OmegaAssignment sample_omegas(std::uint64_t n_cutoff, const RandomStream& stream) {
    if (n_cutoff < 2)
        return OmegaAssignment(n_cutoff, {}, {});
    auto primes = primes_up_to(static_cast<std::uint32_t>(n_cutoff));
    std::vector<double> angles(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i)
        angles[i] = stream.with_index(i + 1).uniform01();
    return OmegaAssignment(n_cutoff, std::move(primes), std::move(angles));
}

int chi_moment_oracle(std::uint64_t q, std::span<const MomentFactor> factors) {
    std::uint64_t lhs = 1 % q, rhs = 1 % q;
    for (const auto& f : factors) {
        if (f.k == 0 && f.m == 0) continue;  // chi(n)^0 contributes nothing
        if (std::gcd(f.n, q) != 1) return 0;
        lhs = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(lhs) * pow_mod(f.n, f.k, q) % q);
        rhs = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(rhs) * pow_mod(f.n, f.m, q) % q);
    }
    return lhs == rhs ? 1 : 0;
}

int omega_moment_oracle(std::span<const MomentFactor> factors) {
    std::map<std::uint64_t, std::int64_t> exponent_gap;
    for (const auto& f : factors) {
        if (f.k == f.m) continue;
        for (const auto& [p, e] : factorize(f.n))
            exponent_gap[p] += static_cast<std::int64_t>(e) *
                               (static_cast<std::int64_t>(f.k) -
                                static_cast<std::int64_t>(f.m));
    }
    for (const auto& [p, gap] : exponent_gap)
        if (gap != 0) return 0;
    return 1;
}

}  // namespace chaoszeta
