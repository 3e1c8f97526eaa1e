#pragma once

// Exact rational scalars. Everything in this library is computed over Q;
// there is no floating point anywhere. GMP supplies the arbitrary-precision
// integer backend; mpq_class values are kept canonical (lowest terms,
// positive denominator) as long as they are built through the helpers below.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vfilt {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p/q" or a bare integer, with an optional leading sign.
Rational rational_from_string(const std::string& text);

// Renders "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Int floor_int(const Rational& q);
Int ceil_int(const Rational& q);

// Checked narrowing for pochhammer lengths, multiplicities, weight levels.
long to_long(const Int& z);

inline long ceil_long(const Rational& q) { return to_long(ceil_int(q)); }
inline long floor_long(const Rational& q) { return to_long(floor_int(q)); }

// Thrown when two independently computed routes to the same mathematical
// object disagree. Reaching this means the build itself is falsified, so it
// is never caught and repaired internally.
class inconsistency_error : public std::logic_error {
public:
    explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace vfilt
