#pragma once

#include "bipramsey/cm_shape.hpp"
#include "bipramsey/graph.hpp"
#include "bipramsey/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bipramsey {

struct AuditItem {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct ConstantsProfile {
    Rational gamma;
    int delta = 0;
    Rational eps1;
    int k0 = 0;
    Rational eps;
    Rational xi;
    Rational beta;
    Rational hat_ell_max;  // 7 K0 / xi + 2 K0
    std::vector<AuditItem> audit;

    bool audit_holds() const;
};

/// eps = min(eps1/2, (gamma/2) / (24*10^5 + 2(3 + gamma/2))), xi = gamma/6,
/// beta = eps xi (1 + 2 xi) / (72 delta^2 K0^2), plus an exact audit of the
/// block-count bound and the chain 4 l hat_l beta <= (1+gamma/3) eps/(2 delta^2) <= xi
/// at l = K0 and the largest admissible hat_l.
ConstantsProfile derive_constants(const Rational& gamma, int delta, const Rational& eps1, int k0);

/// 1 - beta <= C1/C2 <= 1 + beta. An empty count pair is balanced; C2 = 0 with
/// C1 > 0 is not.
bool beta_balanced_check(std::int64_t c1, std::int64_t c2, const Rational& beta);
bool beta_balanced_check(const VertexTwoColouring& chi, const std::vector<int>& w, const Rational& beta);

/// hat_ell contiguous blocks of the labelling order. Divisibility error when
/// hat_ell does not divide n.
std::vector<std::vector<int>> equi_partition(const TargetGraph& h, int hat_ell);

using ColourCounts = std::pair<std::int64_t, std::int64_t>;  // (C1, C2)

std::vector<ColourCounts> block_counts(const VertexTwoColouring& chi, const std::vector<std::vector<int>>& blocks);

/// Every run sigma(a..b) with b - a + 1 >= min_window has |C1 - C2| <= xi C2.
bool verify_permutation(const std::vector<ColourCounts>& counts, const std::vector<int>& sigma, const Rational& xi,
                        int min_window);

constexpr int kExhaustivePermutationCap = 9;

/// 0-based sigma (position -> block). Up to kExhaustivePermutationCap blocks the
/// lexicographically first valid sigma is found by backtracking; beyond it a
/// greedy interleave by colour excess is tried and verified.
std::optional<std::vector<int>> find_balanced_permutation(const std::vector<ColourCounts>& counts, const Rational& xi,
                                                          int min_window);

struct LinkPiece {
    int j = 0;                 // 1-based piece index inside the link
    std::vector<int> vertices;
    int colour_one_label = 0;  // class receiving the chi = 1 vertices
    int colour_two_label = 0;
};

struct PartitionPlan {
    int n = 0;
    int hat_ell = 0;
    int ell = 0;
    int ell_prime = 0;
    int piece_size = 0;  // ceil(beta n)
    std::vector<std::vector<int>> blocks;  // W'_1.. in labelling order
    std::vector<int> sigma;                // position -> block, 0-based
    std::vector<std::pair<int, int>> family_bounds;  // (a_i, b_i), 1-based positions
    std::vector<int> family_of_block;
    std::vector<std::vector<LinkPiece>> links;  // per block
    std::vector<std::vector<int>> kernels;      // per block
    std::vector<std::vector<int>> classes;      // per shape label (X..., Y..., Z...)
    std::vector<int> class_of;                  // H vertex -> label

    std::string label_name(int label) const;
};

/// Blocks, sigma and the families W_i = {W'_sigma(a_i), ..., W'_sigma(b_i)} with
/// a_i = (i-1) hat_l / l + 1, b_i = i hat_l / l. Divisibility error unless l divides hat_l.
PartitionPlan make_plan(const TargetGraph& h, int hat_ell, int ell, int ell_prime, std::vector<int> sigma);

/// For every block W'_i whose successor W'_{i+1} lies in another family, carves
/// t+1 trailing pieces of ceil(beta n) vertices, t being the number of tree
/// vertices strictly between the two matching edges on the x_r..x_s path, and
/// routes piece j along that path: its chi = 1 vertices go to whichever of
/// u_{j-1}, u_j is on the x side of the tree. Other vertices form the kernels.
/// Parameter error when a block cannot hold its link.
void build_links_kernels(PartitionPlan& plan, const ShapeTree& tree, const Rational& beta);

/// Kernel vertices of family i go to X_i (chi = 1) or Y_i (chi = 2); link
/// pieces follow their routing. Structural error when chi is not proper.
void assign_classes(PartitionPlan& plan, const VertexTwoColouring& chi, const TargetGraph& h);

struct PlanBounds {
    Rational xy_bound;  // (1 + 2 xi) n / (2 l)
    std::int64_t z_bound = 0;  // 2 hat_l ceil(beta n)
    int largest_xy = 0;
    int largest_z = 0;
    bool holds = false;
};

PlanBounds check_plan_bounds(const PartitionPlan& plan, const Rational& xi);

/// Classes partition V_H, no edge inside a class, every cross-class edge on a tree edge.
bool plan_respects_tree(const PartitionPlan& plan, const TargetGraph& h, const ShapeTree& tree);

/// "plan n hat_ell l lprime", "sigma ...", "family i a_i b_i",
/// "link i j size labels", "class label vertex-ids" (1-based vertices).
void write_plan(std::ostream& out, const PartitionPlan& plan);

}  // namespace bipramsey
