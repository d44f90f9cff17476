#ifndef HOMLIE_RATIONAL_HPP
#define HOMLIE_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <string>

namespace homlie {

/// Exact field scalar: an arbitrary-precision rational, always kept in lowest
/// terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/**
 * Parses a rational from the textual form "a/b" or "a", where a and b are
 * decimal integers (a possibly signed).  The result is reduced to lowest
 * terms with a positive denominator regardless of how the input was written.
 *
 * @returns the parsed value, or std::nullopt when the text is malformed or
 *          the denominator is zero.
 */
std::optional<Rational> parseRational(const std::string& text);

/**
 * Renders a rational as "a/b" in lowest terms, omitting "/b" when the
 * denominator is 1.  parseRational(formatRational(x)) == x for every x.
 */
std::string formatRational(const Rational& value);

}  // namespace homlie

#endif  // HOMLIE_RATIONAL_HPP
