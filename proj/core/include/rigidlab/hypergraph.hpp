#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rigidlab {

// k-uniform hypergraph with unordered hyperedges. Vertices may repeat inside
// a hyperedge (loops in the k=2 case: "semisimple" graphs); hyperedges
// themselves never repeat. Each edge is stored as an ascending multiset so an
// edge has exactly one representation — antisymmetric metrics later rely on
// that ascending evaluation order.
struct Hypergraph {
    int k = 2;
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_simple() const;  // k=2 and no loops
};

// Red/blue (or generally small-integer) colouring of the edges of a graph,
// stored positionally: colour_of[i] colours edges[i].
struct EdgeColouring {
    std::vector<int> colour_of;
};

// Validates, sorts each edge ascending, rejects out-of-range vertices and
// duplicate hyperedges. Throws UsageError on violations.
Hypergraph make_hypergraph(int k, int vertex_count, std::vector<std::vector<int>> edges);

// Convenience constructors used across tests and experiments.
Hypergraph complete_graph(int n);
Hypergraph path_graph(int n);
Hypergraph cycle_graph(int n);
Hypergraph star_graph(int leaves);                 // centre = 0
Hypergraph complete_with_loops(int n);             // all pairs + all loops, k=2
Hypergraph complete_uniform_with_repeats(int n, int k);  // all k-multisets

// Max over vertices of the number of incident hyperedges (a repeated vertex
// still counts its hyperedge once).
int max_degree(const Hypergraph& g);

bool is_connected(const Hypergraph& g);

// Tree packing (k=2 simple graphs): true iff G contains two edge-disjoint
// spanning trees. Disconnected input returns false. Matroid-union
// augmenting-path algorithm.
bool has_two_edge_disjoint_spanning_trees(const Hypergraph& g);

// Adds one vertex adjacent exactly to u and w (u != w). k=2 only.
Hypergraph zero_extension(const Hypergraph& g, int u, int w);

// True when `colouring` (entries 0=red/1=blue, positional on g.edges) is a
// NAC-colouring: both colours used and every simple cycle is monochromatic
// or carries at least 2 edges of each colour.
bool is_nac_colouring(const Hypergraph& g, const std::vector<int>& colouring);

// Exhaustive NAC search over all 2^|E| colourings (|E| <= 20, otherwise
// BudgetError). Returns the first valid colouring in mask order, or nullopt.
std::optional<EdgeColouring> find_nac_colouring(const Hypergraph& g);

// All simple cycles of a k=2 graph, each as a list of edge indices.
std::vector<std::vector<int>> simple_cycles(const Hypergraph& g);

// BFS levels from root; requires G to be a tree (else UsageError).
std::vector<std::vector<int>> depth_partition(const Hypergraph& g, int root);

// Parent of each vertex in the BFS tree from root (root's parent = -1);
// requires G to be a tree.
std::vector<int> tree_parents(const Hypergraph& g, int root);

}  // namespace rigidlab
