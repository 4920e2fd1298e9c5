// Test-only oracles, independent of the library's solver implementations:
// exhaustive layout separation, direct monotone game-tree search, a
// caterpillar recognizer, and small-graph generators.
#ifndef LAYERBOUND_TESTS_ORACLES_HPP
#define LAYERBOUND_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "layerbound/graph.hpp"

namespace layerbound::oracles {

/// Minimum vertex separation over all n! layouts (n <= 9 or so).
int brute_force_min_separation(const Graph& g);

/// True iff all edges can be cleaned by a monotone strategy using at most c
/// simultaneous guards, by direct game-tree search (n <= 8).
bool decide_ns_le_bruteforce(const Graph& g, int c);

/// Smallest c accepted by decide_ns_le_bruteforce; 0 for edgeless graphs.
int brute_force_search_number(const Graph& g);

/// True iff g is a tree whose non-leaf vertices induce a path (or g has at
/// most 2 vertices).
bool is_caterpillar_tree(const Graph& g);

/// All unlabeled trees with exactly n vertices, one representative each.
std::vector<Graph> all_trees(int n);

/// Random connected graph on n vertices (edge probability p, resampled until
/// connected).
Graph random_connected_graph(std::mt19937& rng, int n, double p);

}  // namespace layerbound::oracles

#endif
