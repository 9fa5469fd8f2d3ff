#include "arbor/rational.hpp"

namespace arbor {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational");
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("bad rational '" + text + "'");
  }
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

} // namespace arbor
