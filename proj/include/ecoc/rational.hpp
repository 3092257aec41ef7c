#pragma once

#include <gmpxx.h>

#include <string>

namespace ecoc {

// Exact rational arithmetic carrier. GMP keeps values canonical (lowest
// terms, positive denominator) through all arithmetic, which is what the
// x_v = 0 / x_v = 1 classification relies on; there is no epsilon
// anywhere in this project.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace ecoc
