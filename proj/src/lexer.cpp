#include "conaweave/token.hpp"

#include <algorithm>
#include <cctype>

namespace conaweave {

const std::vector<std::string>& keyword_list() {
    static const std::vector<std::string> kws = {
        "class", "extends", "method", "requires", "ensures",
        "aspect", "agnostic", "obedient", "rebellious", "pointcut",
        "before", "after", "old", "result", "returns",
        "var", "if", "else", "return", "true", "false",
    };
    return kws;
}

bool is_keyword(const std::string& word) {
    const auto& kws = keyword_list();
    return std::find(kws.begin(), kws.end(), word) != kws.end();
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
    const std::string& src;
    std::string file;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= src.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    SourceSpan span_here(int length = 1) const { return {file, line, col, length}; }
};

} // namespace

LexResult lex(const std::string& source, const std::string& file) {
    LexResult out;
    Cursor cur{source, file};

    auto push = [&](TokenKind kind, std::string lexeme, SourceSpan span) {
        out.tokens.push_back(Token{kind, std::move(lexeme), span});
    };

    while (!cur.eof()) {
        char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.eof() && cur.peek() != '\n') cur.advance();
            continue;
        }

        SourceSpan start = cur.span_here();

        if (is_ident_start(c)) {
            std::string word;
            while (!cur.eof() && is_ident_char(cur.peek())) word.push_back(cur.advance());
            start.length = static_cast<int>(word.size());
            push(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, word, start);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                digits.push_back(cur.advance());
            start.length = static_cast<int>(digits.size());
            push(TokenKind::IntLiteral, digits, start);
            continue;
        }

        if (c == '"') {
            cur.advance();
            std::string text;
            bool closed = false;
            int raw_len = 1;
            while (!cur.eof()) {
                char d = cur.advance();
                ++raw_len;
                if (d == '"') {
                    closed = true;
                    break;
                }
                if (d == '\n') break;   // strings do not span lines
                if (d == '\\') {
                    if (cur.eof()) break;
                    char e = cur.advance();
                    ++raw_len;
                    switch (e) {
                    case 'n': text.push_back('\n'); break;
                    case 't': text.push_back('\t'); break;
                    case '"': text.push_back('"'); break;
                    case '\\': text.push_back('\\'); break;
                    default:
                        out.errors.push_back({DiagCode::LexError,
                                              std::string("unknown escape '\\") + e + "' in string literal",
                                              start});
                        break;
                    }
                    continue;
                }
                text.push_back(d);
            }
            if (!closed) {
                out.errors.push_back({DiagCode::LexError, "unterminated string literal", start});
                continue;
            }
            start.length = raw_len;
            push(TokenKind::StringLiteral, text, start);
            continue;
        }

        // Two-character operators first.
        static const char* two_char[] = {"==", "!=", "<=", ">=", "&&", "||"};
        bool matched = false;
        for (const char* op : two_char) {
            if (c == op[0] && cur.peek(1) == op[1]) {
                cur.advance();
                cur.advance();
                start.length = 2;
                push(TokenKind::Operator, op, start);
                matched = true;
                break;
            }
        }
        if (matched) continue;

        if (std::string("+-*/%<>!=").find(c) != std::string::npos) {
            cur.advance();
            push(TokenKind::Operator, std::string(1, c), start);
            continue;
        }
        if (std::string("(){},;:.").find(c) != std::string::npos) {
            cur.advance();
            push(TokenKind::Punctuation, std::string(1, c), start);
            continue;
        }

        out.errors.push_back({DiagCode::LexError,
                              std::string("illegal character '") + c + "'", start});
        cur.advance();
    }

    out.tokens.push_back(Token{TokenKind::EndOfInput, "", cur.span_here(0)});
    return out;
}

} // namespace conaweave
