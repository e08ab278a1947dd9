#pragma once

#include "bipramsey/colouring.hpp"
#include "bipramsey/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bipramsey {

struct HostVertex {
    Side side = Side::Left;
    int index = 0;

    friend bool operator==(const HostVertex&, const HostVertex&) = default;
};

/// Adjacency of one colour class of a (possibly partial) colouring of K_{L,R},
/// stored as bit rows so that candidate sets are word-wise intersections.
class ColourLayer {
public:
    ColourLayer() = default;
    ColourLayer(int left, int right);
    static ColourLayer from_colouring(const HostColouring& c, int s);

    int left_size() const noexcept { return left_; }
    int right_size() const noexcept { return right_; }
    int words(Side side) const noexcept { return side == Side::Left ? left_words_ : right_words_; }

    void set(int u, int v);
    void clear(int u, int v);
    bool has(int u, int v) const;

    /// Row of neighbours (on the opposite side) of a vertex.
    const std::uint64_t* row(Side side, int v) const;
    int degree(Side side, int v) const;

private:
    int left_ = 0;
    int right_ = 0;
    int left_words_ = 0;   // words needed to index left vertices
    int right_words_ = 0;  // words needed to index right vertices
    std::vector<std::uint64_t> left_rows_;   // left u -> bitset over right
    std::vector<std::uint64_t> right_rows_;  // right v -> bitset over left
};

/// Backtracking search for a copy of a bipartite target inside one colour
/// layer. Vertices are placed in labelling order, preferring the smallest
/// label that already has a placed neighbour, so candidates come from
/// intersecting neighbour rows; host vertices whose layer degree is below the
/// target degree are pruned up front.
class CopyFinder {
public:
    /// Throws Structural when h is not bipartite.
    explicit CopyFinder(const TargetGraph& h);

    const TargetGraph& target() const noexcept { return h_; }

    std::optional<std::vector<HostVertex>> find(const ColourLayer& layer, std::uint64_t* nodes = nullptr) const;

    /// Copies that use the host edge (u, v) as the image of some target edge.
    std::optional<std::vector<HostVertex>> find_through(const ColourLayer& layer, int u, int v,
                                                        std::uint64_t* nodes = nullptr) const;

private:
    struct Order {
        std::vector<int> sequence;
        std::vector<std::vector<int>> earlier;  // placed neighbours of sequence[k]
        std::vector<char> opens_component;
    };
    Order make_order(std::vector<int> seeds) const;
    bool search(const ColourLayer& layer, const Order& order, std::size_t k, std::vector<int>& orient,
                std::vector<HostVertex>& map, std::vector<std::uint64_t>& used_left,
                std::vector<std::uint64_t>& used_right, std::uint64_t& nodes) const;
    Side side_of(int w, const std::vector<int>& orient) const;

    TargetGraph h_;
    VertexTwoColouring chi_;
    std::vector<int> component_;
    int component_count_ = 0;
    Order free_order_;
    std::vector<Order> edge_orders_;
};

}  // namespace bipramsey
