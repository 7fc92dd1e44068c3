#include "bquant/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace bquant {

Integer floor(const Rational& q) {
  Integer num = mp::numerator(q);
  Integer den = mp::denominator(q);
  Integer quot = num / den;
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

Integer ceil(const Rational& q) { return -floor(-q); }

bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size())
    throw std::invalid_argument("not an exact rational: \"" + std::string(whole) + "\"");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an exact rational: \"" + std::string(whole) + "\"");
  }
  std::string digits(text.substr(start));
  Integer value(digits);
  return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("signed denominator in \"" + std::string(text) + "\"");
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

}  // namespace bquant
