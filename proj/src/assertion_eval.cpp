#include "conaweave/assertion_eval.hpp"

#include "conaweave/eval_ops.hpp"

namespace conaweave {

std::string fault_kind_name(FaultKind k) {
    switch (k) {
    case FaultKind::UnboundName: return "UnboundName";
    case FaultKind::KindMismatch: return "KindMismatch";
    case FaultKind::DivisionByZero: return "DivisionByZero";
    }
    return "?";
}

bool eval_ok(const EvalResult& r) { return std::holds_alternative<CheckOutcome>(r); }
const CheckOutcome& eval_outcome(const EvalResult& r) { return std::get<CheckOutcome>(r); }
const EvalFault& eval_fault(const EvalResult& r) { return std::get<EvalFault>(r); }

namespace {

struct FaultSignal {
    EvalFault fault;
};

class AssertEvaluator {
  public:
    AssertEvaluator(const Env& env, const std::string& old_key)
        : env_(env), old_key_(old_key.empty() ? env.active_old : old_key) {}

    Value eval(const Expr& e, bool in_old) {
        switch (e.kind) {
        case Expr::Kind::IntLit: return Value(e.int_value);
        case Expr::Kind::BoolLit: return Value(e.bool_value);
        case Expr::Kind::StringLit: return Value(e.text);
        case Expr::Kind::Name: return lookup(e, in_old);
        case Expr::Kind::Result: {
            if (in_old || !env_.result.has_value())
                throw FaultSignal{{FaultKind::UnboundName, "'result' is not available here", e.span}};
            witnesses_["result"] = *env_.result;
            return *env_.result;
        }
        case Expr::Kind::Old: {
            if (in_old)
                throw FaultSignal{{FaultKind::UnboundName, "old(...) cannot nest", e.span}};
            if (old_key_.empty() || !env_.old_snapshots.count(old_key_))
                throw FaultSignal{
                    {FaultKind::UnboundName, "no old-state snapshot is available here", e.span}};
            return eval(e.children[0], /*in_old=*/true);
        }
        case Expr::Kind::Unary: {
            Value v = eval(e.children[0], in_old);
            return unwrap(apply_unary(e.un_op, v, e.span));
        }
        case Expr::Kind::Binary: {
            if (e.bin_op == BinaryOp::And || e.bin_op == BinaryOp::Or) {
                Value lhs = as_bool(eval(e.children[0], in_old), e.children[0].span);
                if (e.bin_op == BinaryOp::And && !lhs.as_bool()) return Value(false);
                if (e.bin_op == BinaryOp::Or && lhs.as_bool()) return Value(true);
                return as_bool(eval(e.children[1], in_old), e.children[1].span);
            }
            Value lhs = eval(e.children[0], in_old);
            Value rhs = eval(e.children[1], in_old);
            return unwrap(apply_binary(e.bin_op, lhs, rhs, e.span));
        }
        case Expr::Kind::Call:
            throw FaultSignal{{FaultKind::UnboundName,
                               "call to '" + e.text + "' in an assertion (assertions are pure)",
                               e.span}};
        case Expr::Kind::Assign:
            throw FaultSignal{
                {FaultKind::UnboundName, "assignment in an assertion (assertions are pure)", e.span}};
        }
        throw FaultSignal{{FaultKind::UnboundName, "internal: unhandled expression", e.span}};
    }

    // Smallest subterm that explains a false result; follows only branches
    // that actually evaluated.
    SourceSpan explain_failure(const Expr& e, bool in_old) {
        if (e.kind == Expr::Kind::Binary && e.bin_op == BinaryOp::And) {
            Value lhs = eval(e.children[0], in_old);
            if (lhs.is_bool() && !lhs.as_bool()) return explain_failure(e.children[0], in_old);
            return explain_failure(e.children[1], in_old);
        }
        if (e.kind == Expr::Kind::Old) return explain_failure(e.children[0], true);
        return e.span;
    }

    std::map<std::string, Value> take_witnesses() { return std::move(witnesses_); }

  private:
    const Env& env_;
    std::string old_key_;
    std::map<std::string, Value> witnesses_;

    Value lookup(const Expr& e, bool in_old) {
        if (in_old) {
            const OldSnapshot& snap = env_.old_snapshots.at(old_key_);
            if (auto it = snap.args.find(e.text); it != snap.args.end()) {
                witnesses_["old." + e.text] = it->second;
                return it->second;
            }
            if (auto it = snap.fields.find(e.text); it != snap.fields.end()) {
                witnesses_["old." + e.text] = it->second;
                return it->second;
            }
            throw FaultSignal{
                {FaultKind::UnboundName, "'" + e.text + "' is not in the old-state snapshot", e.span}};
        }
        if (auto it = env_.args.find(e.text); it != env_.args.end()) {
            witnesses_[e.text] = it->second;
            return it->second;
        }
        if (auto it = env_.fields.find(e.text); it != env_.fields.end()) {
            witnesses_[e.text] = it->second;
            return it->second;
        }
        throw FaultSignal{{FaultKind::UnboundName, "unbound name '" + e.text + "'", e.span}};
    }

    Value unwrap(ValueOrFault r) {
        if (std::holds_alternative<EvalFault>(r)) throw FaultSignal{std::get<EvalFault>(r)};
        return std::get<Value>(std::move(r));
    }

    Value as_bool(Value v, const SourceSpan& span) {
        if (!v.is_bool())
            throw FaultSignal{{FaultKind::KindMismatch,
                               "expected bool, got " + kind_name(v.kind()), span}};
        return v;
    }
};

EvalResult eval_with_old(const Expr& expr, const Env& env, const std::string& assertion_id,
                         const std::string& old_key) {
    AssertEvaluator ev(env, old_key);
    try {
        Value v = ev.eval(expr, /*in_old=*/false);
        if (!v.is_bool())
            return EvalFault{FaultKind::KindMismatch,
                             "assertion evaluated to " + kind_name(v.kind()) + ", expected bool",
                             expr.span};
        CheckOutcome out;
        out.passed = v.as_bool();
        out.assertion_id = assertion_id;
        if (!out.passed) out.failing_span = ev.explain_failure(expr, false);
        out.witnesses = ev.take_witnesses();
        return out;
    } catch (const FaultSignal& f) {
        return f.fault;
    }
}

} // namespace

EvalResult eval_assert(const Expr& expr, const Env& env, const std::string& assertion_id) {
    return eval_with_old(expr, env, assertion_id, "");
}

EvalResult eval_implication(const Expr& antecedent, const Expr& consequent, const Env& env,
                            const std::string& assertion_id, const std::string& antecedent_old,
                            const std::string& consequent_old) {
    EvalResult a = eval_with_old(antecedent, env, assertion_id, antecedent_old);
    if (!eval_ok(a)) return a;
    const CheckOutcome& a_out = eval_outcome(a);
    if (!a_out.passed) {
        // Antecedent false: the implication holds vacuously.
        CheckOutcome out;
        out.passed = true;
        out.assertion_id = assertion_id;
        out.witnesses = a_out.witnesses;
        return out;
    }
    EvalResult c = eval_with_old(consequent, env, assertion_id, consequent_old);
    if (!eval_ok(c)) return c;
    CheckOutcome out = eval_outcome(c);
    out.assertion_id = assertion_id;
    for (const auto& [k, v] : a_out.witnesses) out.witnesses.emplace(k, v);
    return out;
}

} // namespace conaweave
