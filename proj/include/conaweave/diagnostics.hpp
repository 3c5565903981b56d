#pragma once

#include <string>
#include <vector>

#include "conaweave/source_span.hpp"

namespace conaweave {

/// Codes for everything the frontend and validator can reject.
/// LexError/ParseError come from the frontend; the rest are static
/// well-formedness violations reported by validate_program.
enum class DiagCode {
    LexError,
    ParseError,
    CycleInHierarchy,
    UnknownSupertype,
    UnboundPointcut,
    ImpureAssertion,
    MissingCategory,
    ArityMismatchOnOverride,
    DuplicateField,
    DuplicateDefinition,
    MissingReturn,
    MissingAdvice,
};

std::string diag_code_name(DiagCode code);

struct Diagnostic {
    DiagCode code;
    std::string message;
    SourceSpan span;
};

/// "file:line:col: Code: message" — the CLI's one-line diagnostic form.
std::string format_diagnostic(const Diagnostic& d);

} // namespace conaweave
