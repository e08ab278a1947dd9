#pragma once

#include "bipramsey/colouring.hpp"
#include "bipramsey/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bipramsey {

/// A class of host vertices, all on one side.
struct HostClass {
    Side side = Side::Left;
    std::vector<int> vertices;  // side-local, 0-based
};

/// Bipartite graph between two disjoint non-empty vertex sets A and B,
/// stored as bit rows in both directions. Vertices are local (0-based);
/// `a_ids` / `b_ids` carry the ids used in reports.
class VertexPair {
public:
    VertexPair(int a_size, int b_size, const std::vector<std::pair<int, int>>& edges);

    /// Pair (a, b) of host classes on opposite sides, edges of colour s.
    static VertexPair from_colouring(const HostColouring& c, int s, const HostClass& a, const HostClass& b);

    int a_size() const noexcept { return a_size_; }
    int b_size() const noexcept { return b_size_; }
    std::int64_t edge_count() const noexcept { return edges_; }
    bool has(int i, int j) const;
    int degree_a(int i) const;
    int degree_b(int j) const;

    /// Neighbours in B of a vertex of A, as a bit row of b_words() words.
    const std::uint64_t* a_row(int i) const { return &a_rows_[static_cast<std::size_t>(i) * b_words_]; }
    const std::uint64_t* b_row(int j) const { return &b_rows_[static_cast<std::size_t>(j) * a_words_]; }
    std::size_t a_words() const noexcept { return a_words_; }
    std::size_t b_words() const noexcept { return b_words_; }

    /// Edges between subsets X of A and Y of B.
    std::int64_t edges_between(const std::vector<int>& x, const std::vector<int>& y) const;

    VertexPair transposed() const;

    std::vector<int> a_ids;
    std::vector<int> b_ids;

private:
    VertexPair() = default;
    int a_size_ = 0;
    int b_size_ = 0;
    std::size_t a_words_ = 0;
    std::size_t b_words_ = 0;
    std::int64_t edges_ = 0;
    std::vector<std::uint64_t> a_rows_;
    std::vector<std::uint64_t> b_rows_;
};

/// d(A, B) = e(A, B) / (|A||B|).
Rational density(const VertexPair& p);

enum class CertificateMethod { Exhaustive, Sampled };

struct RegularityCertificate {
    Rational epsilon;
    bool regular = true;
    CertificateMethod method = CertificateMethod::Exhaustive;
    std::int64_t samples = 0;
    /// Violating sub-pair (local indices) when irregular.
    std::vector<int> x;
    std::vector<int> y;
};

/// True when (x, y) is a genuine violator: |X| >= eps|A|, |Y| >= eps|B| and
/// |d(X, Y) - d(A, B)| >= eps, evaluated exactly.
bool is_violating_subpair(const VertexPair& p, const Rational& eps, const std::vector<int>& x,
                          const std::vector<int>& y);

constexpr int kExhaustiveRegularityCap = 16;

/// Complete decision over every qualifying X; for each X the extreme
/// sub-densities over Y of each admissible size come from the top and bottom
/// degree sums into X, which covers every Y. The X loop is OpenMP-parallel; the
/// reported violator is the one with the smallest X bitmask. SizeLimit when
/// either side exceeds kExhaustiveRegularityCap.
RegularityCertificate eps_regular_exhaustive(const VertexPair& p, const Rational& eps, int workers = 0);

/// Draws `samples` random qualifying sets on one side (alternating sides per
/// draw) and optimises the other side exactly. "irregular" is sound;
/// "regular" only means no violator was found.
RegularityCertificate eps_regular_sampled(const VertexPair& p, const Rational& eps, std::int64_t samples,
                                          std::uint64_t seed);

constexpr std::int64_t kDefaultRegularitySamples = 2000;

/// Exhaustive when both sides are within the cap, sampled otherwise.
RegularityCertificate eps_regular(const VertexPair& p, const Rational& eps, std::int64_t samples = kDefaultRegularitySamples,
                                  std::uint64_t seed = 0);

/// eps-regular and every vertex has degree strictly above d times the other side.
bool is_super_regular(const VertexPair& p, const Rational& eps, const Rational& d,
                      std::int64_t samples = kDefaultRegularitySamples, std::uint64_t seed = 0);

struct SliceParameters {
    Rational epsilon;             // max(eps / alpha, 2 eps)
    Rational density_shift_bound; // |d(A,B) - d(A',B')| < eps
};

/// Regularity of a slice (A', B') with |A'| >= alpha|A|, |B'| >= alpha|B|.
/// Precondition error unless 0 < eps < alpha <= 1.
SliceParameters slice_parameters(const Rational& eps, const Rational& alpha);

struct SuperSliceResult {
    std::vector<HostClass> classes;  // matched classes trimmed, others untouched
    int target_size = 0;             // ceil((1 - eps r) m)
    Rational epsilon;                // eps / (1 - eps r)
    Rational density;                // d - (1 + r) eps
    std::vector<std::vector<int>> removed;
    /// Per matching edge: super-regularity at the new parameters, or nullopt
    /// when the trimmed pair is beyond the exhaustive cap.
    std::vector<std::optional<bool>> verified;
};

/// Trims each matched class of colour-s partner degree <= (d - eps) m to
/// exactly ceil((1 - eps r) m) vertices: lowest partner degree first, and among
/// equal degrees the highest vertex id first. SliceFailure when more low-degree
/// vertices exist than may be removed.
SuperSliceResult super_slice(const HostColouring& c, int s, const std::vector<HostClass>& classes,
                             const std::vector<std::pair<int, int>>& tree_edges,
                             const std::vector<std::pair<int, int>>& matching, const Rational& eps,
                             const Rational& d, int r);

/// Largest colour index attaining the maximum count (1-based).
int majority_colour(std::span<const std::int64_t> counts);

struct PairVerdict {
    int i = 0;
    int j = 0;
    bool adjacent = false;
    int colour = 0;  // majority colour, also recorded for non-adjacent pairs
    std::vector<std::int64_t> counts;
    std::vector<RegularityCertificate> certificates;  // one per colour
    bool majority_bound_holds = false;                // r * count >= |Vi||Vj|
};

struct ReducedEdge {
    int a = 0;  // class index, a < b
    int b = 0;
    int colour = 0;
};

/// Classes as vertices; an edge for every cross-side pair that is regular in
/// every colour, coloured by majority.
class ReducedColouredGraph {
public:
    ReducedColouredGraph() = default;
    ReducedColouredGraph(std::vector<Side> sides, int colours, std::vector<ReducedEdge> edges);

    int vertex_count() const noexcept { return static_cast<int>(sides_.size()); }
    int colour_count() const noexcept { return colours_; }
    Side side(int v) const { return sides_[static_cast<std::size_t>(v)]; }
    const std::vector<ReducedEdge>& edges() const noexcept { return edges_; }
    /// 0 when the pair is not an edge.
    int colour_of(int a, int b) const;
    /// Sorted neighbour lists in the colour-s subgraph.
    std::vector<std::vector<int>> colour_adjacency(int s) const;
    /// Largest number of cross-side non-neighbours over all vertices.
    int max_non_neighbours() const;

    std::vector<HostClass> classes;
    std::vector<PairVerdict> verdicts;
    Rational epsilon;

private:
    std::vector<Side> sides_;
    int colours_ = 0;
    std::vector<ReducedEdge> edges_;
    std::vector<int> colour_matrix_;
};

enum class RegularityMode { Exhaustive, Sampled, Auto };

struct ReduceOptions {
    RegularityMode mode = RegularityMode::Exhaustive;
    std::int64_t samples = kDefaultRegularitySamples;
    std::uint64_t seed = 0;
    int workers = 0;
};

/// Partition error on empty, unequal, out-of-range or overlapping classes.
void validate_partition(const HostColouring& c, const std::vector<HostClass>& partition);

/// Certifies every cross-side pair in every colour (pairs in parallel) and
/// folds the verdicts into the reduced graph in pair order.
ReducedColouredGraph build_reduced_graph(const HostColouring& c, const std::vector<HostClass>& partition,
                                         const Rational& eps, const ReduceOptions& options = {});

/// Splits each side into `per_side` consecutive classes of equal size; the
/// remainder is left out (the exceptional class).
std::vector<HostClass> equal_partition(const HostColouring& c, int per_side);

/// "pair i j eps verdict method [X-ids | Y-ids]" with 1-based class indices.
std::string certificate_line(int i, int j, const RegularityCertificate& cert, const std::vector<int>& a_ids,
                             const std::vector<int>& b_ids);

std::string method_name(const RegularityCertificate& cert);

}  // namespace bipramsey
