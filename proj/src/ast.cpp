#include "conaweave/ast.hpp"

namespace conaweave {

std::string op_spelling(UnaryOp op) {
    return op == UnaryOp::Neg ? "-" : "!";
}

std::string op_spelling(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
    }
    return "?";
}

std::string category_name(AspectCategory c) {
    switch (c) {
    case AspectCategory::Agnostic: return "agnostic";
    case AspectCategory::Obedient: return "obedient";
    case AspectCategory::Rebellious: return "rebellious";
    }
    return "?";
}

std::string position_name(AdvicePosition p) {
    return p == AdvicePosition::Before ? "before" : "after";
}

Expr Expr::literal_true(SourceSpan span) {
    Expr e;
    e.kind = Kind::BoolLit;
    e.bool_value = true;
    e.span = span;
    return e;
}

} // namespace conaweave
