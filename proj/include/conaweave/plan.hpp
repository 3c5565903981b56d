#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conaweave/ast.hpp"

namespace conaweave {

/// Party a failed check is charged to.
struct BlameParty {
    enum class Kind { Caller, Method, Advice, Aspect, Subtype };

    Kind kind = Kind::Caller;
    std::string name;                                  // aspect name (Advice/Aspect) or class name (Subtype)
    AdvicePosition position = AdvicePosition::Before;  // Advice only

    static BlameParty caller() { return {Kind::Caller, "", AdvicePosition::Before}; }
    static BlameParty method() { return {Kind::Method, "", AdvicePosition::Before}; }
    static BlameParty advice(std::string aspect, AdvicePosition pos) {
        return {Kind::Advice, std::move(aspect), pos};
    }
    static BlameParty aspect(std::string aspect) {
        return {Kind::Aspect, std::move(aspect), AdvicePosition::Before};
    }
    static BlameParty subtype(std::string class_name) {
        return {Kind::Subtype, std::move(class_name), AdvicePosition::Before};
    }

    /// "Caller" / "Method" / "Advice" / "Aspect" / "Subtype" — the table column value.
    std::string column_label() const;
    /// Qualified form, e.g. "Aspect(ShippingCost)", "Advice(ShippingCost, after)".
    std::string label() const;

    bool operator==(const BlameParty&) const = default;
};

/// Names one assertion occurrence: whose contract, which side, and which
/// old-state snapshot its `old(...)` reads resolve against.
struct AssertionRef {
    enum class Source { MethodPre, MethodPost, AdvicePre, AdvicePost };

    Source source = Source::MethodPre;
    std::string owner_class;   // method assertions: the class whose contract this is
    std::string method_name;
    std::string aspect;        // advice assertions
    AdvicePosition position = AdvicePosition::Before;
    const Expr* expr = nullptr;
    SourceSpan span;
    std::string old_key;   // snapshot key ("" = none)
    std::string label;     // table-style label, e.g. "m_pre", "after.post", "ILBranch::m_post"
    std::string id;        // qualified id, e.g. "ILBranch.sale.post", "ShippingCost.after.pre"
};

enum class HierDir { None, Pre, Post };

struct PlanStep {
    enum class Kind {
        CheckAssert,
        CheckImplication,
        RunBeforeAdvice,
        RunBody,
        RunAfterAdvice,
        SnapshotOld,
    };

    Kind kind = Kind::RunBody;
    AssertionRef assertion;    // CheckAssert
    AssertionRef antecedent;   // CheckImplication
    AssertionRef consequent;
    BlameParty blame;          // Check* steps carry exactly one blame party
    std::string aspect;        // Run*Advice
    std::string snapshot_key;  // SnapshotOld: "method" or "advice:<aspect>:<position>"
    HierDir hierarchy = HierDir::None;
    std::optional<AspectCategory> category;   // category of the level that emitted this check

    /// Compact form used for trace/plan conformance and goldens, without blame.
    std::string label() const;
};

enum class PlanMode { Categorized, LegacyA, LegacyB, LegacyC };

std::string mode_name(PlanMode mode);

/// Ordered, executable realization of one method call's checking discipline.
struct CheckPlan {
    std::string class_name;    // receiver's dynamic class
    std::string method_name;
    PlanMode mode = PlanMode::Categorized;
    std::vector<std::string> aspects;   // participating, precedence order
    std::vector<PlanStep> steps;

    /// (assertion label, blame column) pairs of the check steps, top to bottom.
    std::vector<std::pair<std::string, std::string>> check_rows() const;
};

std::string snapshot_key_method();
std::string snapshot_key_advice(const std::string& aspect, AdvicePosition pos);

} // namespace conaweave
