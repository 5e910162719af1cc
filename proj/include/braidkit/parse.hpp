#pragma once

#include <string_view>

#include "braidkit/ncpoly.hpp"
#include "braidkit/scalar.hpp"

namespace braidkit {

/// Where a fragment sits in its source file, for error positions.
struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Parses element syntax such as `x*y (x) a + q^2 * 1 (x) b`.
///
/// `(x)` separates tensor slots and binds tighter than + and -; slot i is
/// resolved against signature[i]. Products within a slot are concatenated
/// but not normalized. `q` is the deformation parameter and cannot be a
/// generator name. Throws ParseError (SyntaxError / UnknownGenerator /
/// SignatureMismatch).
NcElement parse_element(std::string_view text, const Signature& signature, SourcePos at = {});

/// Parses a scalar such as `q^2 - 1` or `-3/2*q^-1`.
Scalar parse_scalar(std::string_view text, SourcePos at = {});

}  // namespace braidkit
