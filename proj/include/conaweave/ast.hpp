#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conaweave/source_span.hpp"
#include "conaweave/value.hpp"

namespace conaweave {

enum class UnaryOp { Neg, Not };
enum class BinaryOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };

std::string op_spelling(UnaryOp op);
std::string op_spelling(BinaryOp op);

/// Expression tree shared by assertion clauses and statement bodies.
///
/// The parser never produces Assign nodes (assignment is a statement) and
/// never produces Call nodes inside requires/ensures clauses; both shapes are
/// still representable so that validate_program's purity walk has something
/// real to reject when a program is built by hand.
struct Expr {
    enum class Kind { IntLit, BoolLit, StringLit, Name, Result, Old, Unary, Binary, Call, Assign };

    Kind kind = Kind::BoolLit;
    SourceSpan span;
    int64_t int_value = 0;
    bool bool_value = false;
    std::string text;   // Name: identifier; Call: method name; StringLit: decoded value
    UnaryOp un_op = UnaryOp::Not;
    BinaryOp bin_op = BinaryOp::And;
    // Unary/Old: 1 child; Binary: 2; Call: args; Assign: [lvalue-name, value]
    std::vector<Expr> children;

    static Expr literal_true(SourceSpan span = {});
};

struct Stmt {
    enum class Kind { Local, Assign, If, Return, ExprStmt };

    Kind kind = Kind::ExprStmt;
    SourceSpan span;
    std::string name;                           // Local: declared name; Assign: target name ("result" allowed)
    ValueKind declared_kind = ValueKind::None;  // Local: optional annotation (None = infer from value)
    std::optional<Expr> expr;                   // Local init / Assign value / If condition / Return value / expression
    std::vector<Stmt> then_body;
    std::vector<Stmt> else_body;
};

enum class AspectCategory { Agnostic, Obedient, Rebellious };

std::string category_name(AspectCategory c);

enum class AdvicePosition { Before, After };

std::string position_name(AdvicePosition p);

struct Param {
    std::string name;
    ValueKind kind = ValueKind::Int;
    SourceSpan span;
};

struct FieldDecl {
    std::string name;
    ValueKind kind = ValueKind::Int;
    SourceSpan span;
};

struct MethodDecl {
    std::string name;
    std::vector<Param> params;
    ValueKind return_kind = ValueKind::None;
    Expr pre;    // defaults to `true` when no requires clause was written
    Expr post;   // defaults to `true`
    std::vector<Stmt> body;
    SourceSpan span;       // method header
    SourceSpan pre_span;   // span of the conjoined requires clause(s)
    SourceSpan post_span;
};

struct ClassDecl {
    std::string name;
    std::optional<std::string> supertype;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;   // declaration order
    SourceSpan span;
};

struct AdviceDecl {
    AdvicePosition position = AdvicePosition::Before;
    Expr pre;
    Expr post;
    std::vector<Stmt> body;
    SourceSpan span;
    SourceSpan pre_span;
    SourceSpan post_span;
};

struct Pointcut {
    std::string class_pattern;   // class name or "*"
    std::string method_name;
    SourceSpan span;

    bool matches(const std::string& class_name, const std::string& method) const {
        return method_name == method && (class_pattern == "*" || class_pattern == class_name);
    }
};

struct AspectDecl {
    std::string name;
    std::optional<AspectCategory> category;   // absent only in hand-built programs
    Pointcut pointcut;
    std::optional<AdviceDecl> before;
    std::optional<AdviceDecl> after;
    SourceSpan span;
};

/// Parser output: syntactically well-formed, not yet validated.
struct RawProgram {
    std::vector<ClassDecl> classes;   // declaration order
    std::vector<AspectDecl> aspects;  // declaration order = aspect precedence
};

} // namespace conaweave
