#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcrys {

using Integer = mpz_class;
using Rational = mpq_class;

/// p/s in lowest terms; s must be nonzero.
Rational make_rational(long p, long s = 1);

/// Parses "p", "-p" or "p/s". Decimals are rejected on purpose: every
/// value that enters the workbench stays exact.
Rational parse_rational(std::string_view text);

/// Canonical "p/s" (or "p" when s = 1).
std::string to_string(const Rational& r);

/// r^e for any integer e; r must be nonzero when e < 0.
Rational pow(const Rational& r, long e);

}  // namespace qcrys
