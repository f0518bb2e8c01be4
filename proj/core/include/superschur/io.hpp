#pragma once

#include <string>
#include <string_view>

#include "superschur/algebra.hpp"

namespace superschur {

/// Reads the line-oriented `.lsa` format:
///
///     # comment
///     algebra "H(1,1)"
///     even u1 v1 z
///     odd  w1
///     [u1,v1] = z
///     [w1,w1] = z
///
/// Coefficients are integers or p/q, "1" may be omitted, and terms are joined
/// by + or -. A bracket given as [b,a] with b after a is stored as
/// -(-1)^{|a||b|} times the right-hand side on [a,b].
///
/// Throws SyntaxError, DuplicateIdentifier, UnknownIdentifier,
/// InconsistentBracket, or a ValidationError from the algebra checks.
LieSuperalgebra parse_algebra(std::string_view text);

/// Canonical text for an algebra; parse_algebra(emit_algebra(L)) rebuilds L
/// and emit is a fixed point on its own output.
std::string emit_algebra(const LieSuperalgebra& L);

}  // namespace superschur
