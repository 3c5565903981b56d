#pragma once

#include <stdexcept>
#include <vector>

#include "conaweave/plan.hpp"
#include "conaweave/program.hpp"

namespace conaweave {

/// Internal bug guard: a planner entry point was handed an aspect of the
/// wrong category.
struct CategoryMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

/// Plain OOP discipline: hierarchy pre-checks, m_pre blamed on the caller,
/// the body, m_post blamed on the method, hierarchy post-checks.
CheckPlan plan_no_aspect(const Program& program, const std::string& class_name,
                         const std::string& method);

/// Category disciplines for a single aspect. Advice that is absent elides
/// its run step, every check mentioning its contract symbols, and (for the
/// agnostic re-checks) the duplicated m_pre / m_post row it guards.
CheckPlan plan_agnostic(const Program& program, const std::string& class_name,
                        const std::string& method, const AspectDecl& aspect);
CheckPlan plan_obedient(const Program& program, const std::string& class_name,
                        const std::string& method, const AspectDecl& aspect);
CheckPlan plan_rebellious(const Program& program, const std::string& class_name,
                          const std::string& method, const AspectDecl& aspect);

/// Behavioral-subtyping checks for an override chain: for each adjacent pair
/// of definitions (subtype first), a pre-direction implication
/// super::m_pre -> sub::m_pre and a post-direction implication
/// sub::m_post -> super::m_post, both blaming the subtype. Pre-direction
/// steps come first in the returned list; plan composition places them
/// before the body and the post-direction steps after it.
std::vector<PlanStep> plan_hierarchy_checks(const std::vector<OverrideEntry>& chain);

/// Composition entry point. Aspects must already be filtered by pointcut
/// match and sorted by precedence (Program::matching_aspects does both).
/// Multiple aspects nest by precedence: the first aspect's plan treats the
/// rest plus the body as its join point body; every level checks the
/// original method's contract. Legacy modes force the raw interleavings
/// (advice only, no aspect contracts or implications) for all aspects.
CheckPlan plan_call(const Program& program, const std::string& class_name,
                    const std::string& method, const std::vector<const AspectDecl*>& aspects,
                    PlanMode mode = PlanMode::Categorized);

enum class ExecOrder { None, A, B, C };

std::string exec_order_name(ExecOrder order);

/// Positional analysis of a single-aspect plan with both advice present:
/// order A = advice outside the standalone m_pre/m_post checks, order B =
/// advice strictly inside with the caller-visible m_post evaluated last,
/// order C = m_pre and m_post each checked twice.
ExecOrder classify_exec_order(const CheckPlan& plan);

} // namespace conaweave
