#pragma once

#include <gmpxx.h>

#include <string>

namespace orbcdga {

// Exact rationals. mpq_class keeps values canonical: lowest terms,
// denominator > 0.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    Rat r(mpz_class(num), mpz_class(den));
    r.canonicalize();
    return r;
}

inline std::string num_string(const Rat& r) { return r.get_num().get_str(); }
inline std::string den_string(const Rat& r) { return r.get_den().get_str(); }

}  // namespace orbcdga
