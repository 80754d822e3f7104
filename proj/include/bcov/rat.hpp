#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bcov {

/* Exact rationals. mpq_class keeps values canonical (reduced, den > 0),
 * which is exactly the invariant we need; everything here is thin glue. */
using Rat = mpq_class;
using Int = mpz_class;

/* Bad user-facing input (CLI/JSON). Mapped to exit code 2. */
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/* "p/q", or "p" when the denominator is 1. */
std::string rat_str(const Rat& q);

/* Parses "p", "p/q", optional leading '-'. Throws InputError otherwise. */
Rat rat_parse(const std::string& s);

/* The unique rational of smallest denominator (then smallest numerator)
 * in the closed interval [lo, hi]. Stern-Brocot descent. */
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

}  // namespace bcov
