#pragma once

#include <variant>

#include "conaweave/assertion_eval.hpp"
#include "conaweave/ast.hpp"
#include "conaweave/value.hpp"

namespace conaweave {

using ValueOrFault = std::variant<Value, EvalFault>;

/// Operator semantics shared by assertion evaluation and body execution.
/// Integer arithmetic only; == and != work on matching kinds; ordering is
/// int-only. And/Or are handled by the callers (short-circuit).
ValueOrFault apply_binary(BinaryOp op, const Value& lhs, const Value& rhs, const SourceSpan& span);
ValueOrFault apply_unary(UnaryOp op, const Value& operand, const SourceSpan& span);

} // namespace conaweave
