#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tropdesc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed key, rational or command-line input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parameter outside an operation's domain (e.g. d <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Tangency profile inconsistent with the degree.
class ProfileError : public Error {
public:
    using Error::Error;
};

/// Cache file could not be read. `position()` is a byte offset into the file.
class CacheError : public Error {
public:
    CacheError(const std::string& what, std::size_t position)
        : Error(what + " (at byte " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A closed formula needs an auxiliary invariant that no provider can supply.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(std::vector<std::string> missing)
        : Error(make_message(missing)), missing_(std::move(missing)) {}

    const std::vector<std::string>& missing_keys() const noexcept { return missing_; }

private:
    static std::string make_message(const std::vector<std::string>& missing) {
        std::string msg = "insufficient auxiliary data: missing";
        for (const auto& k : missing) msg += " " + k;
        return msg;
    }

    std::vector<std::string> missing_;
};

}  // namespace tropdesc
