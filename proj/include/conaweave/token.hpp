#pragma once

#include <string>
#include <vector>

#include "conaweave/diagnostics.hpp"
#include "conaweave/source_span.hpp"

namespace conaweave {

enum class TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    StringLiteral,
    Operator,
    Punctuation,
    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string lexeme;        // keyword/identifier text, operator spelling, decoded string value
    SourceSpan span;

    bool is_keyword(const std::string& kw) const {
        return kind == TokenKind::Keyword && lexeme == kw;
    }
    bool is_op(const std::string& op) const {
        return (kind == TokenKind::Operator || kind == TokenKind::Punctuation) && lexeme == op;
    }
};

/// The language's full keyword set.
const std::vector<std::string>& keyword_list();

bool is_keyword(const std::string& word);

struct LexResult {
    std::vector<Token> tokens;       // ends with EndOfInput on success
    std::vector<Diagnostic> errors;  // non-empty on failure
    bool ok() const { return errors.empty(); }
};

/// Tokenizes UTF-8 source. `//` comments run to end of line. On error the
/// token list still ends with EndOfInput so a recovering parser can proceed.
LexResult lex(const std::string& source, const std::string& file = "<input>");

} // namespace conaweave
