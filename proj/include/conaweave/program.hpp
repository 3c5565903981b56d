#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conaweave/ast.hpp"
#include "conaweave/diagnostics.hpp"

namespace conaweave {

/// Validated program: hierarchy resolved, pointcuts bound, assertions pure.
/// Immutable after validation; engines share it read-only.
struct Program {
    std::vector<ClassDecl> classes;    // declaration order
    std::vector<AspectDecl> aspects;   // declaration order = precedence (every category set)

    // Resolved at validation.
    std::map<std::string, std::vector<std::string>> supertype_chain;    // class → [self, super, …, root]
    std::map<std::string, std::vector<FieldDecl>> resolved_fields;      // own + inherited, root first
    std::map<std::string, std::vector<std::string>> aspect_bindings;    // aspect → classes its pointcut hits

    const ClassDecl* find_class(const std::string& name) const;

    /// Dynamic dispatch: most-derived definition of `method` visible from
    /// `class_name`. Sets `defined_in` to the defining class when found.
    const MethodDecl* find_method(const std::string& class_name, const std::string& method,
                                  std::string* defined_in = nullptr) const;

    /// Aspects whose pointcut matches a call to class_name.method, in
    /// precedence (declaration) order.
    std::vector<const AspectDecl*> matching_aspects(const std::string& class_name,
                                                    const std::string& method) const;
};

struct OverrideEntry {
    std::string class_name;
    const MethodDecl* method = nullptr;
};

/// Definitions of `method` along the hierarchy, most-derived first, root
/// last. Empty result means NoSuchMethod (class unknown or method not
/// reachable); on success the list has length >= 1.
std::vector<OverrideEntry> resolve_override_chain(const Program& program,
                                                  const std::string& class_name,
                                                  const std::string& method);

struct ValidateResult {
    std::optional<Program> program;
    std::vector<Diagnostic> errors;   // every violation found, not just the first
    bool ok() const { return errors.empty(); }
};

/// All static well-formedness checks over a parsed (or hand-built) program:
/// hierarchy is a forest, supertypes exist, overrides keep arity and kinds,
/// field names stay unique through inheritance, every aspect has a category
/// and a pointcut that binds, assertions are side-effect-free, and every
/// path of a value-returning body ends in a valued return.
ValidateResult validate_program(const RawProgram& raw);

/// The declarations of a validated program, re-wrapped as parser output.
/// validate_program(to_raw(p)) reproduces p (idempotence).
RawProgram to_raw(const Program& program);

} // namespace conaweave
