#pragma once

#include <string>
#include <variant>

#include "conaweave/ast.hpp"
#include "conaweave/env.hpp"

namespace conaweave {

enum class FaultKind { UnboundName, KindMismatch, DivisionByZero };

std::string fault_kind_name(FaultKind k);

/// A crash inside an assertion (or a body). Reported as an EvaluationFault
/// blamed on the owning entity, never confused with a failed check.
struct EvalFault {
    FaultKind kind;
    std::string message;
    SourceSpan span;
};

using EvalResult = std::variant<CheckOutcome, EvalFault>;

bool eval_ok(const EvalResult& r);
const CheckOutcome& eval_outcome(const EvalResult& r);
const EvalFault& eval_fault(const EvalResult& r);

/// Evaluates a side-effect-free boolean expression against `env`.
/// Deterministic; `env` is never modified. && and || short-circuit, so
/// guarded expressions like `x != 0 && y / x > 2` are safe.
EvalResult eval_assert(const Expr& expr, const Env& env, const std::string& assertion_id = "");

/// Runtime implication on the single current env: passes iff the antecedent
/// is false or the consequent is true. `antecedent_old` / `consequent_old`
/// select the snapshot each side's `old(...)` resolves against; empty means
/// env.active_old.
EvalResult eval_implication(const Expr& antecedent, const Expr& consequent, const Env& env,
                            const std::string& assertion_id = "",
                            const std::string& antecedent_old = "",
                            const std::string& consequent_old = "");

} // namespace conaweave
