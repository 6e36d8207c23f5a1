#pragma once

#include <stdexcept>
#include <string>

namespace necone {

/// Category of a failure. The CLI maps these onto exit codes.
enum class ErrorKind {
    Arithmetic,     // non-real scalar, mixed radicands, division by zero
    Model,          // malformed or inconsistent surface data
    Precondition,   // operation called outside its domain
    Infeasible,     // numerical conditions on r are not met
    Internal        // an identity that must hold did not
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what)
{
    if (!cond) fail(kind, what);
}

}  // namespace necone
