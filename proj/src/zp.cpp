#include "modhom/zp.hpp"

#include "modhom/errors.hpp"

namespace modhom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InputError("zero has no inverse modulo " + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

std::uint64_t mod_reduce(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

std::vector<std::vector<std::uint64_t>> binomial_table_mod(int max_n, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> c(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    c[n].assign(n + 1, 1 % p);
    for (int k = 1; k < n; ++k) c[n][k] = mod_add(c[n - 1][k - 1], c[n - 1][k], p);
  }
  return c;
}

namespace {

void check_modulus(std::uint64_t p) {
  // Cache the last verified modulus; scalars are built in batches of one prime.
  thread_local std::uint64_t last_ok = 0;
  if (p == last_ok) return;
  if (p >= (1ULL << 32)) throw InputError("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw InputError("modulus is not prime: " + std::to_string(p));
  last_ok = p;
}

}  // namespace

void require_prime(std::uint64_t p) { check_modulus(p); }

ZpScalar::ZpScalar(long long value, std::uint64_t p) : value_(0), p_(p) {
  check_modulus(p);
  value_ = mod_reduce(value, p);
}

void ZpScalar::require_same(const ZpScalar& o) const {
  if (p_ != o.p_) throw InputError("mixed moduli in residue arithmetic");
}

ZpScalar ZpScalar::operator+(const ZpScalar& o) const {
  require_same(o);
  return ZpScalar(Unchecked{}, mod_add(value_, o.value_, p_), p_);
}

ZpScalar ZpScalar::operator-(const ZpScalar& o) const {
  require_same(o);
  return ZpScalar(Unchecked{}, mod_sub(value_, o.value_, p_), p_);
}

ZpScalar ZpScalar::operator*(const ZpScalar& o) const {
  require_same(o);
  return ZpScalar(Unchecked{}, mod_mul(value_, o.value_, p_), p_);
}

ZpScalar ZpScalar::operator-() const {
  return ZpScalar(Unchecked{}, mod_sub(0, value_, p_), p_);
}

ZpScalar ZpScalar::pow(std::uint64_t e) const {
  return ZpScalar(Unchecked{}, mod_pow(value_, e, p_), p_);
}

ZpScalar ZpScalar::inverse() const {
  return ZpScalar(Unchecked{}, mod_inv(value_, p_), p_);
}

std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    if (x * x % p == (p - 1) % p) return x;
  }
  return std::nullopt;
}

}  // namespace modhom
