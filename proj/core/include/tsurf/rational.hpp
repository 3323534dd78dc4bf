#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tsurf {

using Rational = mpq_class;

Rational rat(std::int64_t num, std::int64_t den = 1);
Rational parse_rational(const std::string &text);
std::string to_string(const Rational &x);

mpz_class floor_of(const Rational &x);
// Representative of x modulo m in [0, m).
Rational mod(const Rational &x, const Rational &m);
bool is_integer(const Rational &x);
std::int64_t to_int64(const Rational &x);

} // namespace tsurf
