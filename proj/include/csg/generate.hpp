#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csg/graph.hpp"

namespace csg {

// Canonical labeling for small graphs: the lexicographically greatest
// upper-triangle adjacency bit string over all node orders that list
// refinement classes in canonical class order. Equal byte strings <=>
// isomorphic. Cost grows with the product of class-size factorials, so
// keep this to roughly ten nodes.
std::vector<std::uint8_t> canonical_form(const Graph& g);

// One representative per isomorphism class, by levelwise vertex
// extension; sorted by canonical form. all_graphs(8) has 12346 entries.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

bool is_connected(const Graph& g);
Graph complement(const Graph& g);
bool is_strongly_regular(const Graph& g, int n, int k, int lambda, int mu);

// Paley graph on GF(25) = GF(5)[x]/(x^2-2): quadratic-residue adjacency.
Graph paley_25();

// Graphs of all order-5 Latin squares (rows x cols, adjacent on shared
// row/column/symbol), deduplicated up to isomorphism (two classes).
std::vector<Graph> latin_square_graphs_5();

// A published strongly regular (25,12,5,6) adjacency matrix.
Graph known_srg_25();

// The 26 descendants of the regular two-graph a (25,12,5,6) graph
// extends to: add an isolated point, switch each point's neighborhood to
// isolate it, delete it. Every output is again SRG(25,12,5,6).
std::vector<Graph> two_graph_descendants(const Graph& g);

// Simulated-annealing search for an SRG via degree-preserving edge swaps;
// cost = squared deviation of common-neighbor counts from lambda/mu.
// Returns nullopt when max_steps runs out first.
std::optional<Graph> anneal_srg(int n, int k, int lambda, int mu,
                                std::uint64_t seed, std::int64_t max_steps);

// Full (25,12,5,6) pipeline: seeds + descendant/complement closure +
// hop restarts (scramble a found graph, descend back to cost 0) until
// `target` pairwise non-isomorphic graphs are found or restarts run out.
// Deterministic output order.
std::vector<Graph> generate_srg_25(int target, int anneal_restarts = 2000);

// 2 * pair_count graphs, consecutive pairs: disjoint unions of cycles
// with equal node count and distinct part multisets, parts within
// [min_part, max_part]. Each pair is degree-refinement-equivalent but
// structurally distinct.
std::vector<Graph> cycle_union_pairs(int pair_count, int min_part = 3,
                                     int max_part = 6);

// Disjoint union of cycles with the given part lengths.
Graph cycle_union(const std::vector<int>& parts);

// Named small fixtures used across tests and golden files.
Graph decalin();        // two hexagons sharing an edge
Graph bicyclopentyl();  // two pentagons joined by a bridge edge
Graph petersen();
Graph rook_4x4();       // SRG(16,6,2,2)
Graph shrikhande();     // SRG(16,6,2,2), not isomorphic to rook_4x4

}  // namespace csg
