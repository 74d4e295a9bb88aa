#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Base for all domain errors.  `kind()` names the violated invariant and is
/// what the CLI reports on exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define BRAUER_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}  \
    }

BRAUER_DEFINE_ERROR(EmptyTree);
BRAUER_DEFINE_ERROR(NotATree);
BRAUER_DEFINE_ERROR(BadCyclicOrder);
BRAUER_DEFINE_ERROR(MultipleExceptional);
BRAUER_DEFINE_ERROR(NotSpecial);
BRAUER_DEFINE_ERROR(LabelNotInTree);
BRAUER_DEFINE_ERROR(LabelNotInW);
BRAUER_DEFINE_ERROR(EmptyW);
BRAUER_DEFINE_ERROR(BadParameter);
BRAUER_DEFINE_ERROR(BadDivisor);
BRAUER_DEFINE_ERROR(ZeroModule);
BRAUER_DEFINE_ERROR(BoundExceeded);
BRAUER_DEFINE_ERROR(ParseError);

#undef BRAUER_DEFINE_ERROR

} // namespace brauer
