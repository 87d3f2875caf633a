#pragma once

#include <string>
#include <vector>

#include "contraction/chordal_reduction.hpp"
#include "contraction/graph.hpp"
#include "contraction/split_gadget.hpp"

namespace contraction {

// All formats: whitespace-separated integers, UNIX newlines, and '#' starts
// a comment running to the end of its line. Vertices are 0-indexed.
// Errors carry 1-based line numbers where one applies.

// "n m" header, then m lines "u v". Self-loops and duplicates rejected.
Graph parse_graph(const std::string& text);
// "n m t" header, then m lines "u v c" with colors 1..t in files
// (0..t-1 internally).
ColoredGraph parse_colored_graph(const std::string& text);
// "n m k" header, then m lines "size e1 ... e_size".
SetCoverInstance parse_setcover(const std::string& text);
// "m" header, then m lines "u v". Duplicates (as unordered pairs) rejected.
EdgeSet parse_edge_set(const std::string& text);

std::string serialize_graph(const Graph& g);
std::string serialize_colored_graph(const ColoredGraph& cg);
std::string serialize_setcover(const SetCoverInstance& sc);
std::string serialize_edge_set(const EdgeSet& f);

// Seeded generators; identical bytes for identical arguments.
//   random: every pair is an edge with probability 1/2.
//   perturbed-clique: complete graph minus max(1, n/3) random edges.
//   perturbed-split: random split graph plus up to two independent-side edges.
Graph gen_random_graph(int n, unsigned long long seed);
Graph gen_perturbed_clique(int n, unsigned long long seed);
Graph gen_perturbed_split(int n, unsigned long long seed);

// Command-line entry point. args excludes the program name.
// Exit codes: 0 success, 2 malformed input, 3 infeasible / trivial-no /
// failed check, 4 violated internal invariant.
int run(const std::vector<std::string>& args);

}  // namespace contraction
