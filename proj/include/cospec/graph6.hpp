#pragma once

#include <istream>
#include <optional>
#include <string>

#include "cospec/graph.hpp"

namespace cospec {
namespace graph6 {

// graph6: size bytes (chr(n+63) for n<=62, longer prefixed forms above),
// then the upper adjacency triangle column by column, 6 bits per printable
// character (values 63..126), big-endian within a character, zero padded.

/// Strict mode rejects nonzero padding bits; lenient ignores them. The
/// body length must match the vertex count exactly, so codes circulating
/// with stray trailing characters (a 10-vertex code is exactly 9
/// characters) are rejected rather than silently truncated.
Graph decode(const std::string& s, bool strict = true);

/// Minimal-length canonical encoding (short size form for n <= 62).
std::string encode(const Graph& g);

struct StreamItem {
    Graph graph;
    std::string code;
    size_t line_number;  // 1-based
};

/// Newline-delimited reader; tolerates an optional ">>graph6<<" header.
/// skip_malformed=false rethrows MalformedGraph6 annotated with the line
/// number; true counts and skips bad lines.
class Reader {
public:
    explicit Reader(std::istream& in, bool strict = true, bool skip_malformed = false);

    std::optional<StreamItem> next();

    size_t skipped() const { return skipped_; }

private:
    std::istream& in_;
    bool strict_;
    bool skip_malformed_;
    size_t line_ = 0;
    size_t skipped_ = 0;
    bool header_checked_ = false;
};

}  // namespace graph6
}  // namespace cospec
