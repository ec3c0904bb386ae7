#ifndef MINSPAN_FIELD_HPP
#define MINSPAN_FIELD_HPP

#include <cstdint>
#include <string>

namespace minspan {

bool is_prime(std::uint64_t n);

/// Prime field GF(p). Holds the modulus (validated prime, p < 2^31) and does
/// arithmetic on raw residues in [0, p). Residue products go through 64-bit
/// intermediates, so no bignum is needed.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p_) - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;  // throws std::invalid_argument on 0
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t base, std::uint64_t e) const;

  /// Canonical residue of a possibly signed integer.
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return std::uint32_t(r);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// One element of a prime field: a residue bundled with its field so that
/// mixed-field arithmetic is rejected instead of silently reduced.
class FieldElement {
 public:
  FieldElement(PrimeField field, std::uint32_t value);

  std::uint32_t value() const { return v_; }
  const PrimeField& field() const { return f_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return with(f_.add(v_, same(o))); }
  FieldElement operator-(const FieldElement& o) const { return with(f_.sub(v_, same(o))); }
  FieldElement operator*(const FieldElement& o) const { return with(f_.mul(v_, same(o))); }
  FieldElement operator/(const FieldElement& o) const { return with(f_.div(v_, same(o))); }
  FieldElement operator-() const { return with(f_.neg(v_)); }
  FieldElement inverse() const { return with(f_.inv(v_)); }

  bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }

 private:
  FieldElement with(std::uint32_t v) const { return FieldElement(f_, v); }
  std::uint32_t same(const FieldElement& o) const;

  PrimeField f_;
  std::uint32_t v_;
};

}  // namespace minspan

#endif
