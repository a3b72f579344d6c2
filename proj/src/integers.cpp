#include "symlift/integers.hpp"

#include <stdexcept>

namespace symlift {

Integer pow_ui(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer binomial_ui(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool divides_ui(unsigned long d, const Integer& n) {
  return mpz_divisible_ui_p(n.get_mpz_t(), d) != 0;
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + to_string(v));
  return v.get_si();
}

unsigned long to_ulong(const Integer& v) {
  if (!v.fits_ulong_p()) throw std::overflow_error("integer does not fit in unsigned long: " + to_string(v));
  return v.get_ui();
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_composite_witness(std::uint64_t a, std::uint64_t d, int s, std::uint64_t n) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for all n < 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (is_composite_witness(a, d, s, n)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    if (i <= bound / i) {
      for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
  }
  return out;
}

std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace symlift
