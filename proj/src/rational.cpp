#include "divatlas/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace divatlas {

namespace {

bool is_integer_literal(std::string_view s)
{
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s)
{
  if (!is_integer_literal(s))
    throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));

  Integer num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");

  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(unsigned long n)
{
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

} // namespace divatlas
