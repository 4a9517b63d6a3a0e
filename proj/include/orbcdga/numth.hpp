#pragma once

#include <utility>
#include <vector>

namespace orbcdga {

bool is_prime(long n);

// (prime, multiplicity) pairs, primes ascending
std::vector<std::pair<long, long>> factorize(long n);

long euler_phi(long n);

std::vector<long> divisors(long n);

// inverse of a modulo m, for gcd(a, m) = 1; throws InputError otherwise
long mod_inverse(long a, long m);

long mod_pow(long base, long exp, long m);

}  // namespace orbcdga
