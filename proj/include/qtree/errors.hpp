#pragma once

#include <stdexcept>
#include <string>

namespace qtree {

/// Malformed textual input (rotations, set systems, edge lists, ...).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was asked to run outside the hypothesis under which its
/// result is valid (e.g. the determinant formula on a bouquet with two
/// non-orientable loops).
class EligibilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exhaustive enumeration refused because the input is too large.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qtree
