#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace halfstep {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::string expected)
        : Error("syntax error at byte " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

class UnknownIdentifier : public Error {
public:
    UnknownIdentifier(std::string name, std::size_t offset)
        : Error("unknown identifier '" + name + "' at byte " + std::to_string(offset)),
          name_(std::move(name)), offset_(offset) {}

    const std::string& name() const noexcept { return name_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string name_;
    std::size_t offset_;
};

struct UnknownBuiltin : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };
struct InvalidInterval : InvalidInput { using InvalidInput::InvalidInput; };
struct NoSignChange : Error { using Error::Error; };
struct ZeroDerivative : Error { using Error::Error; };
struct Unscalable : Error { using Error::Error; };
struct NoRecommendation : Error { using Error::Error; };

}  // namespace halfstep
