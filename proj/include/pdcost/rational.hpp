#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pdcost {

/// Exact arbitrary-precision rational; always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "-1.25" into an exact
/// rational. Returns nullopt on malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& value);

/// Smallest integer >= value.
Integer ceil(const Rational& value);

/// Converts a non-negative integer that fits into 64 bits; throws RangeError
/// otherwise.
std::uint64_t to_u64(const Integer& value);

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace pdcost
