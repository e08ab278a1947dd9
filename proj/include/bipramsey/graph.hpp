#pragma once

#include "bipramsey/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bipramsey {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. The vertex index is the
/// labelling position, so edges (i, j) witness bandwidth |i - j|.
class TargetGraph {
public:
    TargetGraph() = default;

    /// Normalises each edge to (min, max), sorts and removes duplicates.
    /// Throws Structural on self-loops or endpoints outside [0, n).
    TargetGraph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<int>& neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    int max_degree() const;
    bool adjacent(int u, int v) const;

    /// Same graph with vertex v moved to position perm[v].
    TargetGraph relabelled(const std::vector<int>& perm) const;

    friend bool operator==(const TargetGraph& a, const TargetGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Assignment of every vertex to colour 1 or 2.
struct VertexTwoColouring {
    std::vector<int> colour;

    int size() const noexcept { return static_cast<int>(colour.size()); }
    int count(int c) const;
    bool is_proper_on(const TargetGraph& h) const;
};

TargetGraph make_path(int n);
TargetGraph make_even_cycle(int n);
TargetGraph make_grid(int a, int b);
TargetGraph make_star(int leaves);
TargetGraph make_edgeless(int n);

/// Parses "P5", "C6", "G2x3", "S4" (star with 4 leaves), "E3" (edgeless).
TargetGraph make_named_graph(const std::string& name);

int bandwidth_of_labelling(const TargetGraph& h);

constexpr int kExactBandwidthCap = 10;

/// Minimum bandwidth over all relabellings by branch-and-bound over
/// positions. SizeLimit for n > kExactBandwidthCap.
int exact_bandwidth(const TargetGraph& h);

/// BFS 2-colouring; the smallest vertex of each component gets colour 1.
std::optional<VertexTwoColouring> proper_two_colouring(const TargetGraph& h);

/// Like proper_two_colouring but throws Structural for non-bipartite graphs.
VertexTwoColouring require_two_colouring(const TargetGraph& h);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const TargetGraph& h);

struct BalanceReport {
    bool balanced = false;
    std::vector<std::string> failed_clauses;
    int bandwidth = 0;
    int max_degree = 0;
    int class_one = 0;
    int class_two = 0;
};

/// Checks the balanced (beta, delta)-graph clauses; each failed clause is
/// named in the report ("improper-colouring", "bandwidth", "max-degree",
/// "class-balance").
BalanceReport is_balanced_beta_graph(const TargetGraph& h, const VertexTwoColouring& chi,
                                     const Rational& beta, int delta);

/// "graph n" followed by sorted 1-based "i j" lines. The reader skips leading
/// "#" comment lines.
void write_graph(std::ostream& out, const TargetGraph& h);
TargetGraph read_graph(std::istream& in);

}  // namespace bipramsey
