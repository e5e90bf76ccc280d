#include "odoseq/numeric.hpp"

#include <cctype>

namespace odoseq {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return make_rational(std::move(num), std::move(den));
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  // decimal literal: digits.digits -> scaled integer over a power of ten
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0 || digits.empty()) throw std::invalid_argument("malformed decimal: " + text);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])) &&
        !(i == 0 && (digits[i] == '-' || digits[i] == '+')))
      throw std::invalid_argument("malformed decimal: " + text);
  }
  return make_rational(BigInt(digits), pow10(frac_len));
}

}  // namespace odoseq
