#include "chaoszeta/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace chaoszeta {

CharValue CharValue::root(std::int64_t num, std::int64_t den) {
    CharValue v;
    v.zero = false;
    v.den = den;
    v.num = ((num % den) + den) % den;
    return v;
}

std::complex<double> CharValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

Character::Character(std::shared_ptr<const UnitGroupStructure> structure,
                     std::vector<std::uint32_t> exponents)
    : structure_(std::move(structure)), exponents_(std::move(exponents)) {
    const auto& factors = structure_->factors();
    if (exponents_.size() != factors.size())
        throw std::invalid_argument("Character: exponent vector length mismatch");
    den_ = 1;
    for (const auto& f : factors)
        den_ = std::lcm(den_, static_cast<std::int64_t>(f.order));
    angle_coeff_.resize(exponents_.size());
    principal_ = true;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] >= factors[i].order)
            throw std::invalid_argument("Character: exponent out of range");
        if (exponents_[i] != 0) principal_ = false;
        angle_coeff_[i] = static_cast<std::int64_t>(exponents_[i]) *
                          (den_ / static_cast<std::int64_t>(factors[i].order)) % den_;
    }
}

CharValue Character::value(std::uint64_t n) const {
    const std::uint64_t r = n % structure_->modulus();
    if (!structure_->coprime(r)) return CharValue::zero_value();
    std::int64_t num = 0;
    for (std::size_t i = 0; i < angle_coeff_.size(); ++i) {
        num = (num + angle_coeff_[i] *
                         static_cast<std::int64_t>(structure_->exponent_of(i, r))) %
              den_;
    }
    return CharValue::root(num, den_);
}

std::uint64_t Character::rank() const {
    std::uint64_t rank = 0, radix = 1;
    const auto& factors = structure_->factors();
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        rank += exponents_[i] * radix;
        radix *= factors[i].order;
    }
    return rank;
}

Character Character::conjugate() const {
    const auto& factors = structure_->factors();
    std::vector<std::uint32_t> e(exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = exponents_[i] == 0
                   ? 0
                   : static_cast<std::uint32_t>(factors[i].order) - exponents_[i];
    return Character(structure_, std::move(e));
}

Character Character::pointwise_product(const Character& other) const {
    if (structure_->modulus() != other.modulus())
        throw std::invalid_argument("pointwise_product: modulus mismatch");
    const auto& factors = structure_->factors();
    std::vector<std::uint32_t> e(exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (exponents_[i] + other.exponents_[i]) %
               static_cast<std::uint32_t>(factors[i].order);
    return Character(structure_, std::move(e));
}

CharacterSet::CharacterSet(std::uint64_t q)
    : structure_(std::make_shared<const UnitGroupStructure>(q)) {
    const auto& factors = structure_->factors();
    const std::uint64_t phi = structure_->totient();
    characters_.reserve(phi);
    for (std::uint64_t rank = 0; rank < phi; ++rank) {
        std::vector<std::uint32_t> e(factors.size());
        std::uint64_t rem = rank;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            e[i] = static_cast<std::uint32_t>(rem % factors[i].order);
            rem /= factors[i].order;
        }
        characters_.emplace_back(structure_, std::move(e));
    }
}

CharacterSet enumerate_characters(std::uint64_t q) { return CharacterSet(q); }

std::complex<double> orthogonality_sum(std::uint64_t q, std::uint64_t n,
                                       std::uint64_t m) {
    const CharacterSet chars(q);
    std::complex<double> sum = 0.0;
    for (const auto& chi : chars) {
        const CharValue vn = chi.value(n);
        const CharValue vm = chi.value(m);
        if (vn.zero || vm.zero) continue;
        const std::int64_t den = std::lcm(vn.den, vm.den);
        sum += CharValue::root(vn.num * (den / vn.den) - vm.num * (den / vm.den), den)
                   .to_complex();
    }
    return sum;
}

}  // namespace chaoszeta
