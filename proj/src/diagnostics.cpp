#include "conaweave/diagnostics.hpp"

namespace conaweave {

std::string diag_code_name(DiagCode code) {
    switch (code) {
    case DiagCode::LexError: return "LexError";
    case DiagCode::ParseError: return "ParseError";
    case DiagCode::CycleInHierarchy: return "CycleInHierarchy";
    case DiagCode::UnknownSupertype: return "UnknownSupertype";
    case DiagCode::UnboundPointcut: return "UnboundPointcut";
    case DiagCode::ImpureAssertion: return "ImpureAssertion";
    case DiagCode::MissingCategory: return "MissingCategory";
    case DiagCode::ArityMismatchOnOverride: return "ArityMismatchOnOverride";
    case DiagCode::DuplicateField: return "DuplicateField";
    case DiagCode::DuplicateDefinition: return "DuplicateDefinition";
    case DiagCode::MissingReturn: return "MissingReturn";
    case DiagCode::MissingAdvice: return "MissingAdvice";
    }
    return "Unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
    return to_string(d.span) + ": " + diag_code_name(d.code) + ": " + d.message;
}

} // namespace conaweave
