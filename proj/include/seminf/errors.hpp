#pragma once

#include <stdexcept>
#include <string>

namespace seminf {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Operands of incompatible value kinds (lex pair vs scalar, sqrt(2) vs sqrt(3)).
struct kind_error : error {
    explicit kind_error(const std::string& what) : error(what) {}
};

// Mathematically invalid input (failed precondition, invalid delta-sequence, ...).
struct math_error : error {
    explicit math_error(const std::string& what) : error(what) {}
};

// A caller-supplied digit/search budget ran out before the answer was decided.
// Distinct from math_error: the question remains open, the input is not wrong.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

// Text input (polynomial grammar, JSON document, CLI value syntax) failed to parse.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace seminf
