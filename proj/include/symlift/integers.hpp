// GMP-backed exact integers plus the small number-theoretic helpers used
// throughout the library.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace symlift {

using Integer = mpz_class;

Integer pow_ui(const Integer& base, unsigned long exp);

Integer binomial_ui(unsigned long n, unsigned long k);

/// True iff d divides n exactly (d != 0).
bool divides_ui(unsigned long d, const Integer& n);

/// Checked narrowing; throws std::overflow_error when the value does not fit.
long to_long(const Integer& v);
unsigned long to_ulong(const Integer& v);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::string to_string(const Integer& v);

}  // namespace symlift
