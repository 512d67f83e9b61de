#pragma once

#include "qgalois/algebras.hpp"

#include <string>

namespace qgalois {

/// Text presentation, one directive per line, '#' starts a comment:
///
///   name: example
///   letters: a b
///   weights: 1 1          (optional; default plain deglex)
///   rule: a*b -> 1
///
/// Left-hand sides must be single words. Rules are checked against the order
/// but confluence is not certified. Errors throw ParseError (line number as
/// position) or std::invalid_argument.
AlgebraPtr parse_presentation(const std::string& text);
AlgebraPtr load_presentation(const std::string& path);

}  // namespace qgalois
