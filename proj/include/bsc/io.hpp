#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "bsc/designs.hpp"
#include "bsc/graphs.hpp"
#include "bsc/permgroup.hpp"

namespace bsc {

// Text formats. Blank lines and lines starting with '#' are ignored everywhere.
//
//   permutations:  optional "degree n" header, then one permutation per line,
//                  either as 0-based images ("1 0 2") or in cycle notation
//                  ("(0 1)(2 3)", needs the header). A group file is the same
//                  list read as generators.
//   graph:         "graph n", then "i j mult" for i <= j (i == j: loops).
//   bipartite:     "bipartite n m", then "i j mult" with i an input, j an output.
//   design:        "design v b", then one block per line as 0-based points.
//
// Writers emit entries in row-major order with mult > 0 only, so a write/read
// round trip reproduces the object and the text byte for byte.

struct PermutationList {
    std::size_t degree = 0;
    std::vector<Permutation> perms;
};

PermutationList parse_permutations(std::istream& in);
PermutationList read_permutations(const std::string& path);
std::string format_permutation(const Permutation& p);
std::string write_permutations(const PermutationList& list);

/// Closure of the generators in a group file.
FiniteGroup read_group(const std::string& path);

/// Resolves "sym:n", "alt:n", "cyclic:n", "trivial:n" and "m12"; anything else
/// is read as a group file.
FiniteGroup resolve_group(const std::string& spec);

using AnyGraph = std::variant<Graph, BipartiteGraph>;

std::string write_graph(const Graph& g);
std::string write_graph(const BipartiteGraph& g);
AnyGraph parse_graph(std::istream& in);
AnyGraph read_graph(const std::string& path);

std::string write_design(const Design& d);
Design parse_design(std::istream& in);
Design read_design(const std::string& path);

/// x rounded to `digits` significant decimal digits.
double round_sig(double x, int digits = 12);
std::string format_sig(double x, int digits = 12);

}  // namespace bsc
