#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superschur {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a numerator/denominator
/// pair must go through make_scalar.
using Scalar = mpq_class;

Scalar make_scalar(long numerator, long denominator = 1);

/// Parses "p" or "p/q" with optional leading sign. Returns false on malformed
/// input or a zero denominator.
bool parse_scalar(std::string_view text, Scalar& out);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& x);

}  // namespace superschur
