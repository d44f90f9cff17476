#include "homlie/rational.hpp"

#include <cctype>

namespace homlie {

namespace {

/// Parses a decimal integer (optionally signed when allowSign is set).
std::optional<Integer> parseInteger(const std::string& text, bool allowSign) {
  if (text.empty()) return std::nullopt;
  std::size_t start = 0;
  if (allowSign && (text[0] == '+' || text[0] == '-')) start = 1;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  return Integer(text);
}

}  // namespace

std::optional<Rational> parseRational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    auto num = parseInteger(text, true);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  if (text.find('/', slash + 1) != std::string::npos) return std::nullopt;
  auto num = parseInteger(text.substr(0, slash), true);
  auto den = parseInteger(text.substr(slash + 1), false);
  if (!num || !den || *den == 0) return std::nullopt;
  // Constructing from the integer pair canonicalizes (lowest terms, positive
  // denominator), which constructing from the raw string would not.
  return Rational(*num, *den);
}

std::string formatRational(const Rational& value) {
  return value.str();
}

}  // namespace homlie
