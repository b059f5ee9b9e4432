#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace quip {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed resource content. line() is 1-based; 0 when not line-oriented.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Two words that normalize to the same form carry no incongruity.
class RejectedPair : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Engine construction failure; resource() names the offending resource key.
class BuildError : public Error {
public:
    BuildError(std::string resource, const std::string& detail)
        : Error(resource + ": " + detail), resource_(std::move(resource)) {}

    const std::string& resource() const noexcept { return resource_; }

private:
    std::string resource_;
};

}  // namespace quip
