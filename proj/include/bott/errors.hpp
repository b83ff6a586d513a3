#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bott {

// Base of every domain error. `code()` is the stable machine-readable name
// surfaced by the CLI's structured error output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct MalformedBottNumbers : Error {
    explicit MalformedBottNumbers(const std::string& what)
        : Error("MalformedBottNumbers", what) {}
};

// Internal consistency failure: Bott data always yields a smooth fan.
struct NonSmoothFan : Error {
    explicit NonSmoothFan(const std::string& what) : Error("NonSmoothFan", what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error("LengthMismatch", what) {}
};

class InvalidPair : public Error {
public:
    explicit InvalidPair(int pair_index)
        : Error("InvalidPair",
                "coordinate pair " + std::to_string(pair_index) + " is (0, 0)"),
          pair_index_(pair_index) {}

    int pair_index() const noexcept { return pair_index_; }

private:
    int pair_index_;
};

struct MissingValues : Error {
    explicit MissingValues(const std::string& what) : Error("MissingValues", what) {}
};

struct NonPositiveBottNumbers : Error {
    explicit NonPositiveBottNumbers(const std::string& what)
        : Error("NonPositiveBottNumbers", what) {}
};

struct NotNef : Error {
    explicit NotNef(const std::string& what) : Error("NotNef", what) {}
};

// Unreachable for smooth fans; kept as an internal failure signal.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& what) : Error("SingularSystem", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace bott
