#pragma once

#include <stdexcept>
#include <string>

namespace gqsem {

// Error categories, each with a stable process exit code used by the CLI.
// Truth values are never encoded in exit codes; these signal operational
// failures only.
enum class ErrorCode : int {
    ModelParse = 3,        // malformed model file
    ModelValidation = 4,   // well-formed file, inconsistent content
    UnknownWord = 5,       // sentence word not in the lexicon
    ShapeMismatch = 6,     // sentence does not match a supported production
    CapExceeded = 7,       // universe / table / morphism size cap hit
    MixedMonotonicity = 8, // branching requested for an unsupported pair
    UniverseMismatch = 9,  // operands bound to different universes
    TypeMismatch = 10,     // morphism domain/codomain conflict
    UnknownName = 11,      // denotation or quantifier name not in the model
    AmbiguousClass = 12,   // word appears in two lexicon classes
    Internal = 70,         // cross-backend contract violation
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

struct UniverseMismatchError : Error {
    explicit UniverseMismatchError(const std::string& what)
        : Error(ErrorCode::UniverseMismatch, what) {}
};

struct CapExceededError : Error {
    explicit CapExceededError(const std::string& what)
        : Error(ErrorCode::CapExceeded, what) {}
};

struct TypeMismatchError : Error {
    explicit TypeMismatchError(const std::string& what)
        : Error(ErrorCode::TypeMismatch, what) {}
};

struct UnknownWordError : Error {
    explicit UnknownWordError(const std::string& word)
        : Error(ErrorCode::UnknownWord, "unknown word: '" + word + "'"), word(word) {}
    std::string word;
};

struct ShapeMismatchError : Error {
    explicit ShapeMismatchError(const std::string& what)
        : Error(ErrorCode::ShapeMismatch, what) {}
};

struct AmbiguousClassError : Error {
    explicit AmbiguousClassError(const std::string& word)
        : Error(ErrorCode::AmbiguousClass,
                "word '" + word + "' appears in more than one lexicon class"),
          word(word) {}
    std::string word;
};

struct MixedMonotonicityError : Error {
    explicit MixedMonotonicityError(const std::string& what)
        : Error(ErrorCode::MixedMonotonicity, what) {}
};

struct UnknownNameError : Error {
    explicit UnknownNameError(const std::string& what)
        : Error(ErrorCode::UnknownName, what) {}
};

struct ModelParseError : Error {
    explicit ModelParseError(const std::string& what)
        : Error(ErrorCode::ModelParse, what) {}
};

struct ModelValidationError : Error {
    explicit ModelValidationError(const std::string& what)
        : Error(ErrorCode::ModelValidation, what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what)
        : Error(ErrorCode::Internal, what) {}
};

} // namespace gqsem
