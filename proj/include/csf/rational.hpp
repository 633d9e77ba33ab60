#pragma once

#include <gmpxx.h>

#include <string>

namespace csf {

// Exact arithmetic everywhere: positivity verdicts must never see a rounded
// coefficient. GMP supplies the integer/rational machinery.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_negative(const Rat& r) { return sgn(r) < 0; }

// gmpxx has no long long constructors; LP64 makes long wide enough.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long v) { return Rat(static_cast<long>(v)); }

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
Rat rat_from_string(const std::string& text);

}  // namespace csf
