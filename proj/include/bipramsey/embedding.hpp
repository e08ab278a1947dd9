#pragma once

#include "bipramsey/cm_shape.hpp"
#include "bipramsey/partition.hpp"
#include "bipramsey/subgraph_search.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bipramsey {

struct CompatibilityReport {
    Rational epsilon;
    std::vector<int> w_size;        // per label, H side
    std::vector<int> v_size;        // per label, host side
    std::vector<int> u_size;        // |U_i|
    std::vector<int> u_prime_size;  // |U'_i|
    int s_min = 0;
    std::vector<Edge> edge_violations;      // H edges breaking (i)
    std::vector<int> size_violations;       // labels breaking (ii)
    std::vector<int> u_violations;          // labels breaking (iii)
    std::vector<int> u_prime_violations;    // labels breaking (iv)
    std::array<bool, 4> conditions{};
    bool compatible = false;
    /// |U_i| <= (eps / (2 Delta)) |S_min| for every i: the bound the size
    /// estimates give when checking at eps built from half of it.
    bool u_chain_holds = false;
    /// |U'_i| <= Delta |U_partner(i)| for matched labels, |U'_i| = 0 for z labels.
    bool u_prime_chain_holds = false;
};

/// Recomputes U_i (vertices of W_i with a neighbour across a non-matching tree
/// edge), U = union U_i and U'_i = N(U) cap (W_i \ U), then evaluates the four
/// compatibility conditions exactly. Structural error when the plan, tree and
/// host classes disagree on the number of labels.
CompatibilityReport compatibility_check(const PartitionPlan& plan, const TargetGraph& h, const ShapeTree& tree,
                                        const std::vector<HostClass>& host_classes, const Rational& eps);

CompatibilityReport compatibility_check(const PartitionPlan& plan, const TargetGraph& h, const CmShape& shape,
                                        const Rational& eps);

struct EmbedOptions {
    std::uint64_t budget = 200000;  // total search nodes over all restarts
    std::uint64_t seed = 0;
};

struct EmbeddingResult {
    bool success = false;
    std::vector<HostVertex> map;  // H vertex -> host vertex
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    int restarts = 0;
    int deferred = 0;  // vertices placed by the matching completion
    std::string reason;
};

/// Embeds H into colour s of the host, sending class W_i into V_i. Vertices go
/// in labelling order; the candidates for w are the unused vertices of its
/// host class adjacent to every image of an earlier neighbour. Candidates that
/// would leave a later neighbour without options are dropped, and the rest are
/// tried from least to most forward flexibility, ties by id (shuffled on
/// restarts). An independent set of trailing X/Y vertices is held back and
/// placed at the end by bipartite matching. A restart follows each attempt
/// that hits its node limit; an attempt that exhausts its tree ends the run.
/// Failure is a result, not an error.
EmbeddingResult greedy_embed(const TargetGraph& h, const PartitionPlan& plan, const HostColouring& c, int s,
                             const std::vector<HostClass>& host_classes, const EmbedOptions& options = {});

/// Injective, class-respecting, and every H edge lands on a colour-s host edge.
bool verify_embedding(const EmbeddingResult& result, const TargetGraph& h, const HostColouring& c, int s,
                      const PartitionPlan& plan, const std::vector<HostClass>& host_classes);

}  // namespace bipramsey
