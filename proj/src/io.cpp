#include "hyperlines/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hyperlines/common.hpp"

namespace hyperlines {

namespace {

// One whitespace-tokenized input line with its 1-based position; comments
// (`#` to end of line) and blank lines are dropped before tokenizing.
struct Row {
    int line = 0;
    std::vector<std::string> tok;
};

std::vector<Row> tokenize(std::istream& is) {
    std::vector<Row> rows;
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Row row{line, {}};
        std::istringstream ls(raw);
        std::string t;
        while (ls >> t) row.tok.push_back(t);
        if (!row.tok.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

long long parse_int(const Row& row, const std::string& t, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw parse_error(row.line, std::string("bad ") + what + " '" + t + "'");
    return v;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

void write_hl3(std::ostream& os, const Colouring& s, Hl3Encoding enc) {
    os << "n " << s.n() << '\n';
    const std::uint64_t total = choose3(s.n());
    if (enc == Hl3Encoding::red_list) {
        for (std::uint64_t r = 0; r < total; ++r) {
            if (!s.rank_red(r)) continue;
            auto [i, j, k] = triple_unrank(r);
            os << "red " << i << ' ' << j << ' ' << k << '\n';
        }
        return;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex;
    const std::uint64_t ndigits = (total + 3) / 4;
    hex.reserve(ndigits);
    for (std::uint64_t d = 0; d < ndigits; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            std::uint64_t r = 4 * d + b;
            if (r < total && s.rank_red(r)) v |= 1 << (3 - b);
        }
        hex.push_back(digits[v]);
    }
    // n = 2 has no triples and therefore no digits; the header alone
    // already describes the system.
    if (ndigits > 0) os << "bits " << hex << '\n';
}

Colouring read_hl3(std::istream& is) {
    auto rows = tokenize(is);
    if (rows.empty()) throw parse_error(1, "empty input, expected 'n <N>' header");
    const Row& head = rows.front();
    if (head.tok[0] != "n" || head.tok.size() != 2)
        throw parse_error(head.line, "expected 'n <N>' header");
    long long n = parse_int(head, head.tok[1], "point count");
    if (n < 2 || n > 64)
        throw parse_error(head.line, "point count " + std::to_string(n) + " outside 2..64");

    Colouring s(static_cast<int>(n));
    const std::uint64_t total = choose3(static_cast<int>(n));
    bool saw_red = false, saw_bits = false;
    for (std::size_t idx = 1; idx < rows.size(); ++idx) {
        const Row& row = rows[idx];
        const std::string& kw = row.tok[0];
        if (kw == "red") {
            if (saw_bits) throw parse_error(row.line, "'red' row after 'bits' row");
            if (row.tok.size() != 4) throw parse_error(row.line, "expected 'red <i> <j> <k>'");
            long long v[3];
            for (int t = 0; t < 3; ++t) v[t] = parse_int(row, row.tok[t + 1], "point index");
            if (!(0 <= v[0] && v[0] < v[1] && v[1] < v[2] && v[2] < n))
                throw parse_error(row.line, "indices must be ascending and below " + std::to_string(n));
            std::uint64_t r = triple_rank(static_cast<int>(v[0]), static_cast<int>(v[1]),
                                          static_cast<int>(v[2]));
            if (s.rank_red(r)) throw parse_error(row.line, "duplicate red triple");
            s.set_rank(r, true);
            saw_red = true;
        } else if (kw == "bits") {
            if (saw_red) throw parse_error(row.line, "'bits' row after 'red' row");
            if (saw_bits) throw parse_error(row.line, "second 'bits' row");
            if (row.tok.size() != 2) throw parse_error(row.line, "expected 'bits <hexstring>'");
            const std::string& hex = row.tok[1];
            const std::uint64_t ndigits = (total + 3) / 4;
            if (hex.size() != ndigits)
                throw parse_error(row.line, "expected " + std::to_string(ndigits) +
                                                " hex digits, got " + std::to_string(hex.size()));
            for (std::uint64_t d = 0; d < ndigits; ++d) {
                int v = hex_value(hex[d]);
                if (v < 0)
                    throw parse_error(row.line, std::string("bad hex digit '") + hex[d] + "'");
                for (int b = 0; b < 4; ++b) {
                    if (!(v & (1 << (3 - b)))) continue;
                    std::uint64_t r = 4 * d + b;
                    if (r >= total) throw parse_error(row.line, "nonzero padding bits");
                    s.set_rank(r, true);
                }
            }
            saw_bits = true;
        } else {
            throw parse_error(row.line, "unknown keyword '" + kw + "'");
        }
    }
    return s;
}

std::string to_hl3_string(const Colouring& s, Hl3Encoding enc) {
    std::ostringstream os;
    write_hl3(os, s, enc);
    return os.str();
}

Colouring from_hl3_string(const std::string& text) {
    std::istringstream is(text);
    return read_hl3(is);
}

void write_graph(std::ostream& os, const WeightedGraph& g) {
    os << "n " << g.n << '\n';
    for (const auto& e : g.edges) os << "edge " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

WeightedGraph read_graph(std::istream& is) {
    auto rows = tokenize(is);
    if (rows.empty()) throw parse_error(1, "empty input, expected 'n <N>' header");
    const Row& head = rows.front();
    if (head.tok[0] != "n" || head.tok.size() != 2)
        throw parse_error(head.line, "expected 'n <N>' header");
    long long n = parse_int(head, head.tok[1], "vertex count");
    if (n < 1 || n > 64)
        throw parse_error(head.line, "vertex count " + std::to_string(n) + " outside 1..64");

    WeightedGraph g{static_cast<int>(n), {}};
    for (std::size_t idx = 1; idx < rows.size(); ++idx) {
        const Row& row = rows[idx];
        if (row.tok[0] != "edge")
            throw parse_error(row.line, "unknown keyword '" + row.tok[0] + "'");
        if (row.tok.size() != 3 && row.tok.size() != 4)
            throw parse_error(row.line, "expected 'edge <u> <v> [w]'");
        long long u = parse_int(row, row.tok[1], "vertex");
        long long v = parse_int(row, row.tok[2], "vertex");
        long long w = row.tok.size() == 4 ? parse_int(row, row.tok[3], "weight") : 1;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(row.line, "vertex outside 0.." + std::to_string(n - 1));
        if (u == v) throw parse_error(row.line, "self-loop");
        if (w < 1) throw parse_error(row.line, "weight must be positive");
        g.edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    return g;
}

}  // namespace hyperlines
