#pragma once

// Files describing an isomorphism j: BSub(L) -> BSub(M).
//
//   left standard mo 2         or  left oml path/to/file, left greechie path
//   right standard mo 2
//   identity                   j(D) = D, both sides must be the same lattice
//   map {0,a,a',1} {0,b,b',1}  or one line per left subalgebra
//
// Paths are relative to the file.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelsub/oml.hpp"
#include "abelsub/reconstruct.hpp"

namespace abelsub {

// OML or Greechie text, chosen by content. ParseError for anything else.
Oml load_oml(const std::string& path);

struct BsubIsoFile {
    std::vector<std::string> left, right;  // words after the keyword
    bool identity = false;
    std::vector<std::pair<std::string, std::string>> maps;
};

BsubIsoFile parse_bsub_iso(std::string_view text, std::string_view source = "<input>");
std::string write_bsub_iso(const BsubIsoFile& f);
// Throws ParseError for unresolvable sides or member sets, ReconstructError /
// PosetError when the map is not a BSub isomorphism.
BsubIso build_bsub_iso(const BsubIsoFile& f, const std::string& base_dir = ".");
BsubIso load_bsub_iso(const std::string& path);

}  // namespace abelsub
