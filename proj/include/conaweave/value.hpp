#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace conaweave {

/// Kinds a field, parameter or return slot can be declared with.
/// None marks "no return value" on procedures.
enum class ValueKind { Int, Bool, String, None };

std::string kind_name(ValueKind k);

/// Runtime value. Money is modeled as integer minor units (cents, agorot),
/// so the whole value domain stays exact.
class Value {
  public:
    Value() : data_(int64_t{0}) {}
    explicit Value(int64_t v) : data_(v) {}
    explicit Value(bool v) : data_(v) {}
    explicit Value(std::string v) : data_(std::move(v)) {}

    ValueKind kind() const {
        if (std::holds_alternative<int64_t>(data_)) return ValueKind::Int;
        if (std::holds_alternative<bool>(data_)) return ValueKind::Bool;
        return ValueKind::String;
    }

    bool is_int() const { return kind() == ValueKind::Int; }
    bool is_bool() const { return kind() == ValueKind::Bool; }
    bool is_string() const { return kind() == ValueKind::String; }

    int64_t as_int() const { return std::get<int64_t>(data_); }
    bool as_bool() const { return std::get<bool>(data_); }
    const std::string& as_string() const { return std::get<std::string>(data_); }

    bool operator==(const Value&) const = default;

    /// Display form used in witness maps and human reports.
    std::string display() const;

    /// Zero value for a declared kind (0, false, "").
    static Value default_for(ValueKind k);

  private:
    std::variant<int64_t, bool, std::string> data_;
};

} // namespace conaweave
