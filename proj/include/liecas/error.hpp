#pragma once

#include <stdexcept>
#include <string>

namespace liecas {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input: scalar literals, polynomial expressions, JSON documents.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, std::size_t position = npos)
        : Error(position == npos ? msg : msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t pos;
};

/// Shape or index mismatch between operands.
struct ShapeError : Error {
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// A mathematical precondition failed: the input parsed fine but the requested
/// operation is not defined for it (bracket leaves a subspace, CYBE violated,
/// map is not a homomorphism, ...). The message carries the witness.
struct MathError : Error {
    explicit MathError(const std::string& msg) : Error(msg) {}
};

} // namespace liecas
