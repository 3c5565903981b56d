#pragma once

#include <map>
#include <optional>
#include <string>

#include "conaweave/source_span.hpp"
#include "conaweave/value.hpp"

namespace conaweave {

/// Pre-state capture for `old(...)`: the target object's fields plus the
/// argument values at snapshot time. Deliberately excludes `result`.
struct OldSnapshot {
    std::map<std::string, Value> fields;
    std::map<std::string, Value> args;

    bool operator==(const OldSnapshot&) const = default;
};

/// Join-point context an assertion is evaluated against. Lookup of an
/// unbound name is always an error, never a default value.
struct Env {
    std::map<std::string, Value> args;     // parameters by name
    std::map<std::string, Value> fields;   // receiver's current field values
    std::optional<Value> result;           // present only after a producing step

    /// Snapshots keyed by owner ("method", "advice:<aspect>:<position>").
    std::map<std::string, OldSnapshot> old_snapshots;
    /// Key `old(...)` resolves against by default; empty = no snapshot taken.
    std::string active_old;

    bool operator==(const Env&) const = default;
};

struct CheckOutcome {
    bool passed = true;
    std::string assertion_id;
    std::optional<SourceSpan> failing_span;        // set only when failed
    std::map<std::string, Value> witnesses;        // names read during evaluation
};

} // namespace conaweave
