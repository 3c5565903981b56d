#include "conaweave/value.hpp"

namespace conaweave {

std::string kind_name(ValueKind k) {
    switch (k) {
    case ValueKind::Int: return "int";
    case ValueKind::Bool: return "bool";
    case ValueKind::String: return "string";
    case ValueKind::None: return "none";
    }
    return "?";
}

std::string Value::display() const {
    switch (kind()) {
    case ValueKind::Int: return std::to_string(as_int());
    case ValueKind::Bool: return as_bool() ? "true" : "false";
    default: return "\"" + as_string() + "\"";
    }
}

Value Value::default_for(ValueKind k) {
    switch (k) {
    case ValueKind::Bool: return Value(false);
    case ValueKind::String: return Value(std::string{});
    default: return Value(int64_t{0});
    }
}

} // namespace conaweave
