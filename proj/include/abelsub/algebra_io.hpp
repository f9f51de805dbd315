#pragma once

// YAML algebra files:
//
//   summands: [3, 1]
//   partitions:
//     diag:
//       - [[["1","0","0"],["0","0","0"],["0","0","0"]], [["0"]]]
//       - ...
//
// Each partition is a list of atoms, each atom a list of blocks, each block a
// list of rows of scalar strings ("a/b+c/d i").

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelsub/algebra.hpp"
#include "abelsub/matalg.hpp"

namespace abelsub {

struct AlgebraFile {
    FinDimAlgebra algebra;
    // Raw atoms in file order; validation is left to the caller.
    std::vector<std::pair<std::string, std::vector<AlgElement>>> partitions;

    // Throws AlgebraError when an entry is not a partition of unity.
    std::vector<NamedPartition> named_partitions() const;
    AbelianFragment fragment(bool require_closed = false) const;
};

// ParseError for YAML or shape problems.
AlgebraFile parse_algebra(std::string_view text, std::string_view source = "<input>");
AlgebraFile read_algebra(const std::string& path);
std::string write_algebra(const AlgebraFile& f);
AlgebraFile to_algebra_file(const AbelianFragment& f);

}  // namespace abelsub
