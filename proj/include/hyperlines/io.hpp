#pragma once

#include <iosfwd>
#include <string>

#include "hyperlines/colouring.hpp"
#include "hyperlines/treespace.hpp"

namespace hyperlines {

/// Parse failure with the 1-based line number of the offending input line.
class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_ = 0;
};

enum class Hl3Encoding { red_list, bits };

/// System text format (".hl3"):
///   line 1:  n <N>
///   then either one `red <i> <j> <k>` line per red triple (0-based,
///   ascending indices; unlisted triples are blue), or a single
///   `bits <hexstring>` line holding the colex bit array MSB-first,
///   zero-padded to a whole number of hex digits.
/// `#` starts a comment; a file carries exactly one of the two encodings.
void write_hl3(std::ostream& os, const Colouring& s, Hl3Encoding enc = Hl3Encoding::red_list);
Colouring read_hl3(std::istream& is);

std::string to_hl3_string(const Colouring& s, Hl3Encoding enc = Hl3Encoding::red_list);
Colouring from_hl3_string(const std::string& text);

/// Graph text format: line 1 `n <N>`, then `edge <u> <v> [w]` lines
/// (weight defaults to 1). `#` starts a comment.
void write_graph(std::ostream& os, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& is);

}  // namespace hyperlines
