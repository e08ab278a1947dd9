#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace bipramsey {

enum class Side { Left, Right };

/// Total r-edge-colouring of K_{L,R}. Vertices are side-local, 0-based;
/// colours are 1..r.
class HostColouring {
public:
    HostColouring() = default;
    HostColouring(int left, int right, int colours, std::vector<std::uint8_t> colour);

    /// Every pair coloured `fill`.
    static HostColouring uniform(int left, int right, int colours, int fill);

    int left_size() const noexcept { return left_; }
    int right_size() const noexcept { return right_; }
    int colour_count() const noexcept { return colours_; }
    int colour(int u, int v) const {
        return colour_[static_cast<std::size_t>(u) * static_cast<std::size_t>(right_) + static_cast<std::size_t>(v)];
    }
    const std::vector<std::uint8_t>& raw() const noexcept { return colour_; }

    /// Global 1-based id used in text dumps: left u -> u+1, right v -> L+v+1.
    int global_id(Side side, int v) const { return side == Side::Left ? v + 1 : left_ + v + 1; }

    friend bool operator==(const HostColouring&, const HostColouring&) = default;

private:
    int left_ = 0;
    int right_ = 0;
    int colours_ = 1;
    std::vector<std::uint8_t> colour_;
};

/// Right class split into three parts of size n/2-1; edges at part i get colour i.
HostColouring extremal_three_split(int n);

HostColouring random_colouring(int n, int colours, std::uint64_t seed);

using BipartiteEdges = std::vector<std::pair<int, int>>;

/// Pairs (u, v) of colour s in lexicographic order.
BipartiteEdges colour_subgraph(const HostColouring& c, int s);

/// "bipcol L R r" then L*R lines "u v c" in lexicographic (u, v) order.
void write_colouring(std::ostream& out, const HostColouring& c);

/// Accepts pairs in any order; rejects missing, duplicate or out-of-range pairs.
HostColouring read_colouring(std::istream& in);

}  // namespace bipramsey
