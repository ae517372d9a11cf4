#pragma once

#include <stdexcept>
#include <string>

namespace qmagnus {

struct ArithmeticError : std::domain_error {
	using std::domain_error::domain_error;
};

struct DimensionError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// Raised by operators whose defining series does not converge on the
// given input (e.g. the summation operator on a nonzero constant term).
struct DivergenceError : std::domain_error {
	using std::domain_error::domain_error;
};

// Raised for products involving the adjoined unit that are left
// undefined, such as 1 ≺ 1 and 1 ≻ 1.
struct UnitError : std::domain_error {
	using std::domain_error::domain_error;
};

struct PreconditionError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

} // namespace qmagnus
