#ifndef CROSSCOUNT_ERROR_HPP
#define CROSSCOUNT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crosscount {

enum class ErrorKind {
    ParseError,
    IndexOutOfRange,
    DuplicateEdge,
    CoordinateOverflow,
    PerturbationFailed,
    GenerationFailed,
    InvalidSpec,
    GeneralPositionViolation,
    InternalInconsistency,
    NotConvexPosition,
    EmbeddingFailed,
    InvalidLayering,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Line numbers are 1-based; 0 means "end of input".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace crosscount

#endif  // CROSSCOUNT_ERROR_HPP
