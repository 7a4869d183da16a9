#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cyfeyn {

// A stable graph: per-vertex geometric genus, a multiset of undirected edges
// (loops allowed), and labeled legs attached to vertices. Stored normalized:
// each edge as (i, j) with i <= j, the edge list sorted.
struct StableGraph {
    std::vector<int> genus;                 // genus[v] >= 0
    std::vector<std::pair<int, int>> edges; // sorted pairs, i <= j
    std::vector<int> legs;                  // legs[l] = vertex carrying leg l

    int num_vertices() const { return static_cast<int>(genus.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_legs() const { return static_cast<int>(legs.size()); }

    // Total genus: sum of vertex genera plus the first Betti number.
    int total_genus() const;
    // Incident half-edges plus legs; a loop contributes 2.
    int valence(int v) const;
};

bool operator==(const StableGraph& a, const StableGraph& b);
bool operator<(const StableGraph& a, const StableGraph& b);

// Checks connectivity, nonnegative genera, index ranges, normalized edge
// storage, and per-vertex stability 2 g_v - 2 + n_v > 0. Returns a reason for
// failure through the optional out-parameter.
bool graph_valid(const StableGraph& G, std::string* why = nullptr);

// The lexicographically least relabeling of G over all vertex permutations
// (legs keep their labels; only their target vertices are renamed).
StableGraph canonical_form(const StableGraph& G);

// All isomorphism classes of stable graphs of genus g with n labeled legs,
// in a deterministic (sorted canonical) order. Memoized. Throws UnstablePair
// when 2g - 2 + n <= 0.
const std::vector<StableGraph>& enumerate(int g, int n);

// Order of the automorphism group fixing every leg: label-preserving vertex
// permutations times parallel-edge permutations times loop half-edge swaps.
long aut_order(const StableGraph& G);

// Normalized text form "V:[g0,g1,...] E:[(i,j),...] L:[v1,...]".
std::string graph_str(const StableGraph& G);

} // namespace cyfeyn
