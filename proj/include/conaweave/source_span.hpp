#pragma once

#include <string>

namespace conaweave {

/// Half-open character range in a source file. Lines and columns are 1-based.
struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;
    int length = 0;

    bool operator==(const SourceSpan&) const = default;
};

inline std::string to_string(const SourceSpan& s) {
    return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
}

} // namespace conaweave
