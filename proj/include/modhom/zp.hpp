#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modhom {

bool is_prime(std::uint64_t n);
// Throws InputError unless p is a prime below 2^32.
void require_prime(std::uint64_t p);

// Arithmetic helpers on raw residues; p < 2^32 so products fit in 64 bits.
inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;
}
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
// Inverse of a nonzero residue modulo a prime (Fermat).
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
// Reduce any signed integer to its least non-negative residue.
std::uint64_t mod_reduce(long long v, std::uint64_t p);

// Binomial coefficients C(n, k) mod p for 0 <= k <= n <= max_n.
std::vector<std::vector<std::uint64_t>> binomial_table_mod(int max_n, std::uint64_t p);

// Residue class modulo a prime.
class ZpScalar {
 public:
  // Throws InputError if p is not prime.
  ZpScalar(long long value, std::uint64_t p);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  ZpScalar operator+(const ZpScalar& o) const;
  ZpScalar operator-(const ZpScalar& o) const;
  ZpScalar operator*(const ZpScalar& o) const;
  ZpScalar operator-() const;
  ZpScalar pow(std::uint64_t e) const;
  // Throws InputError on zero.
  ZpScalar inverse() const;

  bool operator==(const ZpScalar& o) const { return value_ == o.value_ && p_ == o.p_; }
  bool operator!=(const ZpScalar& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(value_); }

 private:
  struct Unchecked {};
  ZpScalar(Unchecked, std::uint64_t v, std::uint64_t p) : value_(v), p_(p) {}
  void require_same(const ZpScalar& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

// A square root of -1 modulo p, if one exists (smallest representative).
std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p);

}  // namespace modhom
