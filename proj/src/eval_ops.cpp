#include "conaweave/eval_ops.hpp"

namespace conaweave {

namespace {

EvalFault kind_mismatch(const std::string& message, const SourceSpan& span) {
    return EvalFault{FaultKind::KindMismatch, message, span};
}

} // namespace

ValueOrFault apply_binary(BinaryOp op, const Value& lhs, const Value& rhs, const SourceSpan& span) {
    switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Sub:
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: {
        if (!lhs.is_int() || !rhs.is_int())
            return kind_mismatch("arithmetic needs int operands, got " + kind_name(lhs.kind()) +
                                     " and " + kind_name(rhs.kind()),
                                 span);
        int64_t a = lhs.as_int();
        int64_t b = rhs.as_int();
        switch (op) {
        case BinaryOp::Add: return Value(a + b);
        case BinaryOp::Sub: return Value(a - b);
        case BinaryOp::Mul: return Value(a * b);
        case BinaryOp::Div:
        case BinaryOp::Mod:
            if (b == 0)
                return EvalFault{FaultKind::DivisionByZero,
                                 op == BinaryOp::Div ? "division by zero" : "modulo by zero", span};
            return Value(op == BinaryOp::Div ? a / b : a % b);
        default: break;
        }
        break;
    }
    case BinaryOp::Eq:
    case BinaryOp::Ne: {
        if (lhs.kind() != rhs.kind())
            return kind_mismatch("cannot compare " + kind_name(lhs.kind()) + " with " +
                                     kind_name(rhs.kind()),
                                 span);
        bool eq = lhs == rhs;
        return Value(op == BinaryOp::Eq ? eq : !eq);
    }
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: {
        if (!lhs.is_int() || !rhs.is_int())
            return kind_mismatch("ordering needs int operands, got " + kind_name(lhs.kind()) +
                                     " and " + kind_name(rhs.kind()),
                                 span);
        int64_t a = lhs.as_int();
        int64_t b = rhs.as_int();
        switch (op) {
        case BinaryOp::Lt: return Value(a < b);
        case BinaryOp::Le: return Value(a <= b);
        case BinaryOp::Gt: return Value(a > b);
        default: return Value(a >= b);
        }
    }
    case BinaryOp::And:
    case BinaryOp::Or:
        // Short-circuited by the evaluators; reaching here is a bug upstream.
        return kind_mismatch("internal: non-short-circuit boolean operator", span);
    }
    return kind_mismatch("internal: unhandled operator", span);
}

ValueOrFault apply_unary(UnaryOp op, const Value& operand, const SourceSpan& span) {
    if (op == UnaryOp::Neg) {
        if (!operand.is_int())
            return kind_mismatch("unary '-' needs an int operand, got " + kind_name(operand.kind()),
                                 span);
        return Value(-operand.as_int());
    }
    if (!operand.is_bool())
        return kind_mismatch("'!' needs a bool operand, got " + kind_name(operand.kind()), span);
    return Value(!operand.as_bool());
}

} // namespace conaweave
