#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace nell2rdf {

enum class Errc {
    InvalidIri,
    EmptyToken,
    WrongFieldCount,
    UnknownPredicate,
    NonIntegerIteration,
    ProbabilityOutOfRange,
    IterationProbabilityArityMismatch,
    GrammarError,
    UnknownComponent,
    TokenShapeError,
    MalformedEncoding,
    InvalidLiteral,
    IoError,
};

const char* errc_name(Errc c);

struct Error {
    Errc code;
    std::string message;
    // Byte offset into the offending input, when meaningful (GrammarError).
    std::size_t offset = static_cast<std::size_t>(-1);
};

/// Value-or-error carrier used by all parsing entry points.
template <class T>
class Result {
  public:
    Result(T value) : v_(std::move(value)) {}
    Result(Error err) : v_(std::move(err)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    T& value() {
        if (!ok()) throw std::runtime_error("Result::value on error: " + error().message);
        return std::get<T>(v_);
    }
    const T& value() const {
        if (!ok()) throw std::runtime_error("Result::value on error: " + error().message);
        return std::get<T>(v_);
    }
    const Error& error() const { return std::get<Error>(v_); }

    T take() { return std::move(value()); }

  private:
    std::variant<T, Error> v_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidIri: return "InvalidIri";
        case Errc::EmptyToken: return "EmptyToken";
        case Errc::WrongFieldCount: return "WrongFieldCount";
        case Errc::UnknownPredicate: return "UnknownPredicate";
        case Errc::NonIntegerIteration: return "NonIntegerIteration";
        case Errc::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
        case Errc::IterationProbabilityArityMismatch: return "IterationProbabilityArityMismatch";
        case Errc::GrammarError: return "GrammarError";
        case Errc::UnknownComponent: return "UnknownComponent";
        case Errc::TokenShapeError: return "TokenShapeError";
        case Errc::MalformedEncoding: return "MalformedEncoding";
        case Errc::InvalidLiteral: return "InvalidLiteral";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace nell2rdf
