#pragma once

#include <stdexcept>
#include <string>

namespace gridlab {

/// Malformed input file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An exact routine was asked to run beyond its documented size limit.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rotation system or face labeling violates its structural invariants.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A constructive step produced something its own checks reject.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gridlab
