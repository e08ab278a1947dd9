#pragma once

#include "bipramsey/regularity.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bipramsey {

/// A matching of one colour whose edges all lie in one connected component
/// of that colour's subgraph of the reduced graph.
struct ConnectedMatching {
    int colour = 0;
    std::vector<int> component;                  // sorted reduced vertices
    std::vector<std::pair<int, int>> edges;      // (a, b) with a < b, sorted
    int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Maximum matching (augmenting paths) inside every component of the colour-s
/// subgraph; returns the component with the largest one, ties to the
/// component holding the smallest vertex. Size 0 when colour s has no edges.
ConnectedMatching find_connected_matching(const ReducedColouredGraph& r, int s);

/// Best over all colours, ties to the smaller colour. Colours run in parallel.
ConnectedMatching best_monochromatic_connected_matching(const ReducedColouredGraph& r, int workers = 0);

/// Monochromatic, vertex-disjoint, and inside one component (checked by BFS).
bool validate_connected_matching(const ReducedColouredGraph& r, const ConnectedMatching& m);

struct MatchingLemmaReport {
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    /// Hypotheses hold but the found matching is too small.
    bool counterexample = false;
    std::vector<std::string> unmet;
};

/// Hypotheses: eps < 1/(3*10^5), k >= (3 + 3*10^5 eps) k', and (when given)
/// every vertex has at most eps k' non-neighbours. Conclusion: |found| >= k'.
MatchingLemmaReport check_matching_lemma_bound(int k, int k_prime, const Rational& eps, const ConnectedMatching& found,
                                               std::optional<int> max_non_neighbours = std::nullopt);

/// Tree on labels 0..2l+l'-1: x_i is label i-1, y_i is label l+i-1, z_j is
/// label 2l+j-1. x_i y_i are the matching edges.
struct ShapeTree {
    int ell = 0;
    int ell_prime = 0;
    std::vector<std::pair<int, int>> edges;  // (a, b) with a < b, sorted
    /// Labels in the same colour class of the tree as the x labels.
    std::vector<char> x_class;

    int label_count() const noexcept { return 2 * ell + ell_prime; }
    std::string label_name(int label) const;
    int partner(int label) const;  // matched partner, -1 for z labels
    bool has_edge(int a, int b) const;
    std::vector<std::pair<int, int>> matching() const;
    /// Vertex sequence of the unique path from a to b.
    std::vector<int> path(int a, int b) const;
};

/// Result of labelling a tree with a matching: tree vertex ids per label.
struct TreeLabelling {
    std::vector<int> chi;  // proper 2-colouring of the tree, 1 or 2
    std::vector<int> x;    // tree vertex of x_i
    std::vector<int> y;
    std::vector<int> z;
    ShapeTree shape;       // the same tree relabelled
    std::vector<int> label_of;  // tree vertex -> label
};

/// 2-colours the tree rooted at the smallest matched vertex (colour 1). The
/// colour-1 endpoint of each matching edge becomes x_i, in increasing vertex
/// order; unmatched vertices become z_j in increasing order. Structural error
/// when the edges do not form a tree on 0..n-1 or M is not a matching in it.
TreeLabelling even_distance_labelling(int n, const std::vector<std::pair<int, int>>& tree,
                                      const std::vector<std::pair<int, int>>& matching);

/// Distances from `source` in an unweighted tree or forest; -1 when unreachable.
std::vector<int> tree_distances(int n, const std::vector<std::pair<int, int>>& edges, int source);

struct CmShape {
    int colour = 0;
    int k = 0;  // non-exceptional classes (both sides together)
    Rational epsilon;
    Rational density;  // guaranteed chosen-colour density on tree edges
    ShapeTree tree;
    std::vector<int> reduced_vertex;  // label -> reduced-graph vertex
    std::vector<HostClass> classes;   // label -> host class
    /// l >= (k/2) / (3 + 24*10^5 eps), informational only.
    bool ell_bound_holds = false;
    /// Every tree edge is regular in the chosen colour with density >= 1/3.
    bool tree_edges_certified = false;
    ReducedColouredGraph reduced;

    int ell() const noexcept { return tree.ell; }
    int ell_prime() const noexcept { return tree.ell_prime; }
};

/// Spanning tree of the matching's component that contains every matching
/// edge: matching edges first, then the component's edges in BFS order from
/// the smallest matched vertex, skipping cycles.
std::vector<std::pair<int, int>> spanning_tree_with_matching(const ReducedColouredGraph& r, const ConnectedMatching& m);

/// Reduced graph, best connected matching, spanning tree, even-distance
/// labelling and host classes. NoShape when no colour has a matching edge.
CmShape assemble_cm_shape(const HostColouring& c, const std::vector<HostClass>& partition, const Rational& eps,
                          const ReduceOptions& options = {});

/// "cmshape l lprime k colour", then "tedge", "medge" and "class" lines using
/// label names and global host ids.
void write_cm_shape(std::ostream& out, const CmShape& shape, const HostColouring& c);

}  // namespace bipramsey
