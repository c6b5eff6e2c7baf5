#pragma once

#include <functional>
#include <string>

namespace bolab {

// Compile a closed-form coefficient expression over the variables x and t into
// a callable. Supported: numeric literals, x, t, pi, + - * / with unary minus,
// parentheses, and the functions sin, cos, exp. Malformed input raises
// ValidationError naming the character position.
std::function<double(double, double)> compile_expression(const std::string& text);

} // namespace bolab
