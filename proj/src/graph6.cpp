#include "cospec/graph6.hpp"

#include <algorithm>

namespace cospec {
namespace graph6 {

namespace {

constexpr int kLo = 63;
constexpr int kHi = 126;
constexpr long long kMaxOrder = 100000;  // practical guard; format allows far more

void check_chars(const std::string& s) {
    for (char ch : s) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (c < kLo || c > kHi)
            throw MalformedGraph6("character out of range 63..126");
    }
}

}  // namespace

Graph decode(const std::string& s, bool strict) {
    if (s.empty()) throw MalformedGraph6("empty graph6 string");
    check_chars(s);
    size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = s[0] - kLo;
        pos = 1;
    } else if (s.size() >= 4 && s[1] != '~') {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - kLo);
        pos = 4;
    } else if (s.size() >= 8 && s[1] == '~') {
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | (s[i] - kLo);
        pos = 8;
    } else {
        throw MalformedGraph6("truncated size prefix");
    }
    if (n > kMaxOrder) throw MalformedGraph6("vertex count too large");
    long long nbits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw MalformedGraph6("body length mismatch: expected " + std::to_string(need) +
                              " characters, got " + std::to_string(s.size() - pos));
    Graph g(static_cast<int>(n));
    // Upper triangle, column by column, 6 bits per char, MSB first.
    size_t ci = pos;
    int acc = 0, avail = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (avail == 0) {
                acc = s[ci++] - kLo;
                avail = 6;
            }
            if ((acc >> --avail) & 1) g.add_edge(row, col);
        }
    if (strict && avail > 0 && (acc & ((1 << avail) - 1)) != 0)
        throw MalformedGraph6("nonzero padding bits");
    return g;
}

std::string encode(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kLo));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kLo));
        out.push_back(static_cast<char>((n & 63) + kLo));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kLo));
    }
    int acc = 0, filled = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kLo));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kLo));
    return out;
}

Reader::Reader(std::istream& in, bool strict, bool skip_malformed)
    : in_(in), strict_(strict), skip_malformed_(skip_malformed) {}

std::optional<StreamItem> Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_checked_) {
            header_checked_ = true;
            if (line == ">>graph6<<") continue;
            if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        }
        try {
            Graph g = decode(line, strict_);
            return StreamItem{std::move(g), line, line_};
        } catch (const MalformedGraph6& e) {
            if (!skip_malformed_)
                throw MalformedGraph6("line " + std::to_string(line_) + ": " + e.what());
            ++skipped_;
        }
    }
    return std::nullopt;
}

}  // namespace graph6
}  // namespace cospec
