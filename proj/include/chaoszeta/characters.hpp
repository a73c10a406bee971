#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "chaoszeta/arith.hpp"

namespace chaoszeta {

/// Exact character value: zero, or the root of unity e^{2*pi*i*num/den}
/// with 0 <= num < den. Rendered to complex only on demand, so character
/// sums stay exact up to the final rounding.
struct CharValue {
    bool zero = true;
    std::int64_t num = 0;
    std::int64_t den = 1;

    static CharValue zero_value() { return {}; }
    static CharValue root(std::int64_t num, std::int64_t den);
    std::complex<double> to_complex() const;
    friend bool operator==(const CharValue&, const CharValue&) = default;
};

/// Dirichlet character mod q, stored as an exponent vector over the cyclic
/// decomposition of (Z/qZ)^*. Completely multiplicative, q-periodic, zero
/// off residues coprime to q; the all-zero vector is the principal character.
class Character {
public:
    Character(std::shared_ptr<const UnitGroupStructure> structure,
              std::vector<std::uint32_t> exponents);

    std::uint64_t modulus() const { return structure_->modulus(); }
    bool principal() const { return principal_; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }
    const UnitGroupStructure& structure() const { return *structure_; }

    CharValue value(std::uint64_t n) const;
    std::complex<double> operator()(std::uint64_t n) const {
        return value(n).to_complex();
    }

    /// Mixed-radix rank of the exponent vector (first factor least
    /// significant); rank 0 is the principal character.
    std::uint64_t rank() const;

    Character conjugate() const;
    Character pointwise_product(const Character& other) const;

private:
    std::shared_ptr<const UnitGroupStructure> structure_;
    std::vector<std::uint32_t> exponents_;
    std::vector<std::int64_t> angle_coeff_;  // a_i * (den / order_i) mod den
    std::int64_t den_;                       // lcm of factor orders
    bool principal_;
};

/// All phi(q) Dirichlet characters mod q, indexed by mixed-radix rank.
class CharacterSet {
public:
    explicit CharacterSet(std::uint64_t q);

    std::uint64_t modulus() const { return structure_->modulus(); }
    std::size_t size() const { return characters_.size(); }
    const Character& operator[](std::size_t rank) const { return characters_[rank]; }
    auto begin() const { return characters_.begin(); }
    auto end() const { return characters_.end(); }
    const std::shared_ptr<const UnitGroupStructure>& structure() const {
        return structure_;
    }

private:
    std::shared_ptr<const UnitGroupStructure> structure_;
    std::vector<Character> characters_;
};

CharacterSet enumerate_characters(std::uint64_t q);

/// Sum over all characters mod q of chi(n) * conj(chi(m)). Equals phi(q)
/// when n == m (mod q) with both coprime to q, and 0 otherwise.
std::complex<double> orthogonality_sum(std::uint64_t q, std::uint64_t n,
                                       std::uint64_t m);

}  // namespace chaoszeta
