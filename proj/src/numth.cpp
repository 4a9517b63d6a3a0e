#include "orbcdga/numth.hpp"

#include <algorithm>
#include <numeric>

#include "orbcdga/errors.hpp"

namespace orbcdga {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long, long>> factorize(long n) {
    if (n < 1) throw InputError("factorize: n must be >= 1");
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n) {
    long phi = 1;
    for (auto [p, e] : factorize(n)) {
        long pe = 1;
        for (long i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long mod_inverse(long a, long m) {
    a %= m;
    if (a < 0) a += m;
    long r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
    }
    if (r0 != 1) throw InputError("mod_inverse: arguments not coprime");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

long mod_pow(long base, long exp, long m) {
    base %= m;
    if (base < 0) base += m;
    long result = 1 % m;
    while (exp > 0) {
        if (exp & 1) result = (result * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return result;
}

}  // namespace orbcdga
