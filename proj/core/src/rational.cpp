#include "tsurf/rational.hpp"
#include "tsurf/errors.hpp"

#include <limits>

namespace tsurf {

Rational rat(std::int64_t num, std::int64_t den)
{
  if (den == 0)
    throw ValidationError("zero denominator");
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string &text)
{
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw ValidationError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &x)
{
  return x.get_str();
}

mpz_class floor_of(const Rational &x)
{
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational mod(const Rational &x, const Rational &m)
{
  Rational q = x / m;
  Rational r = x - Rational(floor_of(q)) * m;
  return r;
}

bool is_integer(const Rational &x)
{
  return x.get_den() == 1;
}

std::int64_t to_int64(const Rational &x)
{
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw std::overflow_error("rational does not fit in int64: " + to_string(x));
  return x.get_num().get_si();
}

} // namespace tsurf
