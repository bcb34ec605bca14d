#ifndef NASHLIFT_ERRORS_HPP
#define NASHLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nashlift {

enum class ErrorKind {
    Context,               // operands live in different rings
    Size,                  // matrix/minor dimensions out of range
    Argument,              // precondition on an argument violated
    Parse,                 // malformed input text
    DegenerateFrame,       // no admissible differential frame
    DegenerateInput,       // all Gauss minors vanish on the chart
    DegenerateLadder,      // too few sections to form a wedge
    NonLiftableDivision,   // series division with val(a) < val(b)
    IndeterminatePullback, // denominator vanishes along the arc
    HypothesisViolation,   // arc trapped in a singular locus or blowup center
    InsufficientPrecision, // truncation exhausted
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column,
               const std::string& file = "")
        : Error(ErrorKind::Parse, format(what, line, column, file)),
          message_(what), line_(line), column_(column), file_(file) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& file() const noexcept { return file_; }

    /// Same error attributed to `file` unless it already names one.
    ParseError in_file(const std::string& file) const {
        return file_.empty() ? ParseError(message_, line_, column_, file) : *this;
    }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column,
                              const std::string& file) {
        std::string where = "line " + std::to_string(line) + ", column " + std::to_string(column);
        if (!file.empty()) where = file + ": " + where;
        return where + ": " + what;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
    std::string file_;
};

/// Message fragment used whenever an arc misses the nonsingular locus.
inline constexpr const char* kNonsingularPointHypothesis =
    "image contains a nonsingular point";

/// Carries the precision an arc would have needed.
class InsufficientPrecisionError : public Error {
public:
    InsufficientPrecisionError(const std::string& what, long required)
        : Error(ErrorKind::InsufficientPrecision,
                what + " (required minimum truncation T = " + std::to_string(required) + ")"),
          required_(required) {}

    long required() const noexcept { return required_; }

private:
    long required_;
};

} // namespace nashlift

#endif
