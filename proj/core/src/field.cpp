#include "minspan/field.hpp"

#include <stdexcept>

namespace minspan {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus >= (1u << 31))
    throw std::invalid_argument("field modulus must be < 2^31, got " + std::to_string(modulus));
  if (!is_prime(modulus))
    throw std::invalid_argument("field modulus must be prime, got " + std::to_string(modulus));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return std::uint32_t(t);
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t e) const {
  std::uint64_t acc = 1 % p_;
  std::uint64_t b = base % p_;
  while (e > 0) {
    if (e & 1) acc = (acc * b) % p_;
    b = (b * b) % p_;
    e >>= 1;
  }
  return std::uint32_t(acc);
}

FieldElement::FieldElement(PrimeField field, std::uint32_t value) : f_(field), v_(value) {
  if (value >= field.modulus())
    throw std::invalid_argument("residue " + std::to_string(value) + " out of range for GF(" +
                                std::to_string(field.modulus()) + ")");
}

std::uint32_t FieldElement::same(const FieldElement& o) const {
  if (!(f_ == o.f_)) throw std::invalid_argument("mixed-field arithmetic");
  return o.v_;
}

}  // namespace minspan
