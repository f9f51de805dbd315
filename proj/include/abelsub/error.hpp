#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelsub {

// Base of every error the library throws. `code()` is a stable short name
// (CycleError, NotLattice, ...) suitable for reports and tests.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed input text. The CLI maps this to exit status 2.
class ParseError : public Error {
public:
    ParseError(std::string_view source, std::size_t line, const std::string& message)
        : Error("ParseError", std::string(source) + ":" + std::to_string(line) + ": " + message) {}
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

}  // namespace abelsub
