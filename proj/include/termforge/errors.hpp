#pragma once

#include <stdexcept>
#include <string>

namespace termforge {

// Exit codes shared by the command line tools.
enum ExitCode : int {
    exit_ok = 0,
    exit_compile = 1,
    exit_runtime = 2,
    exit_protocol = 3,
    exit_io = 4,
    exit_nondeterminism = 5,
};

// Lexer, parser and compiler diagnostics. Rendered as "file:line:col: message".
class CompileError : public std::runtime_error {
public:
    CompileError(int line, int column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

// Errors raised while executing statements on terms.
class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wire protocol violations and malformed messages.
class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Connection setup and teardown failures, unexpected peer loss.
class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File I/O failures, corrupted or truncated on-disk data.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Benchmark runs produced diverging outputs; timings would be meaningless.
class NondeterminismError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace termforge
