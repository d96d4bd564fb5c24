#pragma once

#include "tropcurve/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropcurve {

// Simple undirected graph with string vertex labels. Immutable after
// construction: loops and parallel edges are rejected outright.
class Graph {
public:
    Graph() = default;
    Graph(std::string name, const std::vector<std::string>& vertex_labels,
          const std::vector<std::pair<std::string, std::string>>& edge_list);

    int size() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& name() const { return name_; }
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;
    int require_index(const std::string& label) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(int u, int v) const;
    bool has_vertex(const std::string& label) const { return index_of(label).has_value(); }

    // New graph with the given edge subset removed (labels kept).
    Graph without_edges(const std::vector<std::pair<int, int>>& removed) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;       // normalized u < v, sorted
    std::vector<std::vector<int>> adj_;            // sorted neighbor lists
};

// Parsed graph file: the graph plus optional rotation system and outer-face
// hint, exactly as given in the text format.
struct GraphFile {
    Graph graph;
    std::map<std::string, std::vector<std::string>> rotation;  // label -> neighbor labels
    std::vector<std::string> outer;                            // vertex labels of the outer face
};

GraphFile parse_graph(const std::string& text);
GraphFile parse_graph_from_file(const std::string& path);

bool is_connected(const Graph& g);
bool is_cubic(const Graph& g);

// First Betti number |E| - |V| + 1. Throws on disconnected input.
int genus(const Graph& g);

// Size of a minimum edge cut, by exhausting all k-subsets for k below the
// minimum degree. Throws on disconnected input.
int edge_connectivity(const Graph& g);

// Canonical certificate for isomorphism testing of small graphs (census
// dedup); two graphs are isomorphic iff their codes are equal.
std::string canonical_code(const Graph& g);

// Vertex bijection a -> b preserving adjacency, or nullopt. Deterministic
// search order.
std::optional<std::vector<int>> find_graph_isomorphism(const Graph& a, const Graph& b);

}  // namespace tropcurve
