#pragma once

#include <string>
#include <vector>

#include "conaweave/ast.hpp"
#include "conaweave/diagnostics.hpp"
#include "conaweave/token.hpp"

namespace conaweave {

struct ParseResult {
    RawProgram program;              // partial on error (recovered declarations kept)
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty(); }
};

/// Recursive-descent parser. Recovers at declaration boundaries so several
/// errors can be reported from one pass.
///
/// Context rules enforced here:
///   - `result` may appear only in method ensures clauses and in
///     after-advice clauses and bodies;
///   - `old(...)` may appear only in ensures clauses and does not nest;
///   - calls are rejected inside requires/ensures clauses;
///   - `return` is rejected inside advice bodies;
///   - an `aspect` declaration without a category keyword is reported
///     with code MissingCategory.
ParseResult parse(const std::vector<Token>& tokens);

/// Convenience: lex + parse.
ParseResult parse_source(const std::string& source, const std::string& file = "<input>");

} // namespace conaweave
