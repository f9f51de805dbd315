#pragma once

// Line-oriented formats. `#` starts a comment; blank lines are ignored.
//
//   poset:     elements x y z        (may repeat; names accumulate)
//              le x y                (x <= y; closure is taken)
//   oml:       the poset lines plus  ortho x y
//   greechie:  atoms a b c ...
//              block a b c

#include <string>
#include <string_view>
#include <vector>

#include "abelsub/oml.hpp"
#include "abelsub/poset.hpp"

namespace abelsub {

enum class TextKind { poset, oml, greechie, unknown };

// Guesses the format from the directives present.
TextKind detect_kind(std::string_view text);

// ParseError on malformed lines; PosetError/OmlError when the parsed data
// violates the structure's axioms.
Poset parse_poset(std::string_view text, std::string_view source = "<input>");
Oml parse_oml(std::string_view text, std::string_view source = "<input>");
GreechieDiagram parse_greechie(std::string_view text, std::string_view source = "<input>");

// Covers only; parsing the output yields an equal value.
std::string write_poset(const Poset& p);
std::string write_oml(const Oml& l);
std::string write_greechie(const GreechieDiagram& d);

// Hasse diagram of BSub(L) in Graphviz form, nodes in index order.
std::string write_bsub_dot(const BsubPoset& b);

std::string read_file(const std::string& path);

// Whitespace-split lines with comments removed, paired with 1-based line numbers.
struct TextLine {
    std::size_t number;
    std::vector<std::string> words;
};
std::vector<TextLine> tokenize_lines(std::string_view text);

}  // namespace abelsub
