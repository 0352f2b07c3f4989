#include "hc3/rational.hpp"

#include <regex>

namespace hc3 {

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw InvalidArgument("malformed rational: " + text);
  BigInt num(m[1].str());
  BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw InvalidArgument("zero denominator: " + text);
  return Rational(num, den);
}

}  // namespace hc3
