#pragma once

#include <stdexcept>
#include <string>

namespace gader {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Presentation / word / element text that does not conform to the grammar.
/// Carries a 1-based line and column of the offending token.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

/// Strategy validation failure: non-confluent rules, malformed multiplication
/// table, completion cap exhausted, relator in a free context, ...
struct ValidationError : Error {
    using Error::Error;
};

/// An enumeration exceeded its element-count cap.
struct CapError : Error {
    using Error::Error;
};

/// A generator id outside the context, or a name that is not a generator.
struct UnknownGeneratorError : Error {
    using Error::Error;
};

/// Two values from different group contexts were combined.
struct CtxMismatchError : Error {
    using Error::Error;
};

/// An operator was asked for a column it does not materialize. Distinguished
/// from mathematical failures: a missing column is a truncation artifact.
struct MissingColumnError : Error {
    std::string column_word;
    MissingColumnError(const std::string& msg, std::string column)
        : Error(msg), column_word(std::move(column)) {}
};

/// Morphisms whose source/target do not line up for composition.
struct NonComposableError : Error {
    using Error::Error;
};

/// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

/// A value outside the domain an operation can honestly answer for
/// (incomplete table coverage, chi outside its closure, disconnected
/// truncation, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace gader
