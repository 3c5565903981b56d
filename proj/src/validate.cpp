#include "conaweave/program.hpp"

#include <functional>
#include <set>

namespace conaweave {

const ClassDecl* Program::find_class(const std::string& name) const {
    for (const auto& c : classes)
        if (c.name == name) return &c;
    return nullptr;
}

const MethodDecl* Program::find_method(const std::string& class_name, const std::string& method,
                                       std::string* defined_in) const {
    auto chain_it = supertype_chain.find(class_name);
    if (chain_it == supertype_chain.end()) return nullptr;
    for (const auto& cls_name : chain_it->second) {
        const ClassDecl* cls = find_class(cls_name);
        if (!cls) continue;
        for (const auto& m : cls->methods) {
            if (m.name == method) {
                if (defined_in) *defined_in = cls_name;
                return &m;
            }
        }
    }
    return nullptr;
}

std::vector<const AspectDecl*> Program::matching_aspects(const std::string& class_name,
                                                         const std::string& method) const {
    std::vector<const AspectDecl*> out;
    for (const auto& a : aspects)
        if (a.pointcut.matches(class_name, method)) out.push_back(&a);
    return out;
}

std::vector<OverrideEntry> resolve_override_chain(const Program& program,
                                                  const std::string& class_name,
                                                  const std::string& method) {
    std::vector<OverrideEntry> chain;
    auto it = program.supertype_chain.find(class_name);
    if (it == program.supertype_chain.end()) return chain;
    for (const auto& cls_name : it->second) {
        const ClassDecl* cls = program.find_class(cls_name);
        if (!cls) continue;
        for (const auto& m : cls->methods)
            if (m.name == method) chain.push_back({cls_name, &m});
    }
    return chain;   // most-derived definition first, root definition last
}

namespace {

// True when every path through the statement list ends in a valued return.
bool all_paths_return(const std::vector<Stmt>& body) {
    for (const auto& s : body) {
        switch (s.kind) {
        case Stmt::Kind::Return:
            if (s.expr.has_value()) return true;
            break;   // bare return ends the path without a value
        case Stmt::Kind::If:
            if (!s.else_body.empty() && all_paths_return(s.then_body) &&
                all_paths_return(s.else_body))
                return true;
            break;
        default:
            break;
        }
    }
    return false;
}

// Assertions must stay side-effect-free: no assignment nodes, no calls.
void check_assertion_purity(const Expr& expr, const SourceSpan& clause_span,
                            const std::string& owner, std::vector<Diagnostic>& errors) {
    if (expr.kind == Expr::Kind::Assign) {
        errors.push_back({DiagCode::ImpureAssertion,
                          "assertion of " + owner + " contains an assignment",
                          expr.span.length > 0 ? expr.span : clause_span});
        return;
    }
    if (expr.kind == Expr::Kind::Call) {
        errors.push_back({DiagCode::ImpureAssertion,
                          "assertion of " + owner + " calls method '" + expr.text + "'",
                          expr.span.length > 0 ? expr.span : clause_span});
        return;
    }
    for (const auto& child : expr.children)
        check_assertion_purity(child, clause_span, owner, errors);
}

} // namespace

ValidateResult validate_program(const RawProgram& raw) {
    ValidateResult out;
    auto& errors = out.errors;

    Program prog;
    prog.classes = raw.classes;
    prog.aspects = raw.aspects;

    // Unique class names.
    std::set<std::string> class_names;
    for (const auto& c : prog.classes) {
        if (!class_names.insert(c.name).second)
            errors.push_back({DiagCode::DuplicateDefinition,
                              "class '" + c.name + "' is defined more than once", c.span});
    }

    // Supertypes exist, hierarchy is a forest.
    for (const auto& c : prog.classes) {
        if (c.supertype && !class_names.count(*c.supertype))
            errors.push_back({DiagCode::UnknownSupertype,
                              "class '" + c.name + "' extends unknown class '" + *c.supertype + "'",
                              c.span});
    }
    for (const auto& c : prog.classes) {
        std::vector<std::string> chain;
        std::set<std::string> seen;
        const ClassDecl* cur = &c;
        bool broken = false;
        while (cur) {
            if (!seen.insert(cur->name).second) {
                errors.push_back({DiagCode::CycleInHierarchy,
                                  "inheritance cycle through class '" + cur->name + "'", c.span});
                broken = true;
                break;
            }
            chain.push_back(cur->name);
            cur = cur->supertype ? prog.find_class(*cur->supertype) : nullptr;
        }
        if (!broken) prog.supertype_chain[c.name] = std::move(chain);
    }

    // Method and field uniqueness; overrides keep signatures.
    for (const auto& c : prog.classes) {
        std::set<std::string> method_names;
        for (const auto& m : c.methods) {
            if (!method_names.insert(m.name).second)
                errors.push_back({DiagCode::DuplicateDefinition,
                                  "method '" + c.name + "." + m.name + "' is defined more than once",
                                  m.span});
        }

        auto chain_it = prog.supertype_chain.find(c.name);
        if (chain_it == prog.supertype_chain.end()) continue;   // cyclic, reported above

        // Fields: own names must not collide with each other or anything inherited.
        std::set<std::string> inherited;
        for (size_t i = 1; i < chain_it->second.size(); ++i) {
            const ClassDecl* ancestor = prog.find_class(chain_it->second[i]);
            if (!ancestor) continue;
            for (const auto& f : ancestor->fields) inherited.insert(f.name);
        }
        std::set<std::string> own;
        for (const auto& f : c.fields) {
            if (!own.insert(f.name).second)
                errors.push_back({DiagCode::DuplicateField,
                                  "field '" + f.name + "' is declared twice in class '" + c.name + "'",
                                  f.span});
            else if (inherited.count(f.name))
                errors.push_back({DiagCode::DuplicateField,
                                  "field '" + f.name + "' in class '" + c.name +
                                      "' shadows an inherited field",
                                  f.span});
        }

        // Override signature checks against the nearest supertype definition.
        for (const auto& m : c.methods) {
            const MethodDecl* overridden = nullptr;
            for (size_t i = 1; i < chain_it->second.size() && !overridden; ++i) {
                const ClassDecl* ancestor = prog.find_class(chain_it->second[i]);
                if (!ancestor) continue;
                for (const auto& sm : ancestor->methods)
                    if (sm.name == m.name) {
                        overridden = &sm;
                        break;
                    }
            }
            if (!overridden) continue;
            bool mismatch = m.params.size() != overridden->params.size() ||
                            m.return_kind != overridden->return_kind;
            for (size_t i = 0; !mismatch && i < m.params.size(); ++i)
                mismatch = m.params[i].kind != overridden->params[i].kind;
            if (mismatch)
                errors.push_back({DiagCode::ArityMismatchOnOverride,
                                  "override '" + c.name + "." + m.name +
                                      "' does not match the overridden signature",
                                  m.span});
        }
    }

    // Bodies of value-returning methods must return on every path.
    for (const auto& c : prog.classes) {
        for (const auto& m : c.methods) {
            if (m.return_kind != ValueKind::None && !all_paths_return(m.body))
                errors.push_back({DiagCode::MissingReturn,
                                  "method '" + c.name + "." + m.name +
                                      "' does not return a value on every path",
                                  m.span});
        }
    }

    // Assertions are side-effect-free.
    for (const auto& c : prog.classes) {
        for (const auto& m : c.methods) {
            const std::string owner = c.name + "." + m.name;
            check_assertion_purity(m.pre, m.pre_span, owner, errors);
            check_assertion_purity(m.post, m.post_span, owner, errors);
        }
    }
    for (const auto& a : prog.aspects) {
        for (const auto* adv : {&a.before, &a.after}) {
            if (!adv->has_value()) continue;
            const std::string owner = a.name + "." + position_name((*adv)->position);
            check_assertion_purity((*adv)->pre, (*adv)->pre_span, owner, errors);
            check_assertion_purity((*adv)->post, (*adv)->post_span, owner, errors);
        }
    }

    // Aspect checks: named, categorized, at least one advice, pointcut binds.
    std::set<std::string> aspect_names;
    for (const auto& a : prog.aspects) {
        if (!aspect_names.insert(a.name).second)
            errors.push_back({DiagCode::DuplicateDefinition,
                              "aspect '" + a.name + "' is defined more than once", a.span});
        if (!a.category.has_value())
            errors.push_back({DiagCode::MissingCategory,
                              "aspect '" + a.name + "' has no category "
                              "(agnostic, obedient or rebellious)",
                              a.span});
        if (!a.before.has_value() && !a.after.has_value())
            errors.push_back({DiagCode::MissingAdvice,
                              "aspect '" + a.name + "' declares no advice", a.span});

        std::vector<std::string> bound;
        for (const auto& c : prog.classes) {
            if (!prog.supertype_chain.count(c.name)) continue;
            if (a.pointcut.matches(c.name, a.pointcut.method_name) &&
                prog.find_method(c.name, a.pointcut.method_name))
                bound.push_back(c.name);
        }
        if (bound.empty())
            errors.push_back({DiagCode::UnboundPointcut,
                              "pointcut '" + a.pointcut.class_pattern + "." + a.pointcut.method_name +
                                  "' of aspect '" + a.name + "' matches no method",
                              a.pointcut.span});
        prog.aspect_bindings[a.name] = std::move(bound);
    }

    if (!errors.empty()) return out;

    // Flattened field tables, root-first, for object construction.
    for (const auto& c : prog.classes) {
        std::vector<FieldDecl> fields;
        const auto& chain = prog.supertype_chain.at(c.name);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            const ClassDecl* cls = prog.find_class(*it);
            for (const auto& f : cls->fields) fields.push_back(f);
        }
        prog.resolved_fields[c.name] = std::move(fields);
    }

    out.program = std::move(prog);
    return out;
}

RawProgram to_raw(const Program& program) {
    RawProgram raw;
    raw.classes = program.classes;
    raw.aspects = program.aspects;
    return raw;
}

} // namespace conaweave
