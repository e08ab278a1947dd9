#include "bipramsey/subgraph_search.hpp"

#include "bipramsey/error.hpp"

#include <algorithm>
#include <bit>

namespace bipramsey {

namespace {
int words_for(int n) { return std::max(1, (n + 63) / 64); }

inline bool test_bit(const std::uint64_t* bits, int i) { return (bits[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(std::uint64_t* bits, int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(std::uint64_t* bits, int i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
}  // namespace

ColourLayer::ColourLayer(int left, int right)
    : left_(left), right_(right), left_words_(words_for(left)), right_words_(words_for(right)),
      left_rows_(static_cast<std::size_t>(left) * static_cast<std::size_t>(right_words_), 0),
      right_rows_(static_cast<std::size_t>(right) * static_cast<std::size_t>(left_words_), 0) {}

ColourLayer ColourLayer::from_colouring(const HostColouring& c, int s) {
    require(s >= 1 && s <= c.colour_count(), ErrorCode::InvalidColour, "colour " + std::to_string(s) + " out of range");
    ColourLayer layer(c.left_size(), c.right_size());
    for (int u = 0; u < c.left_size(); ++u)
        for (int v = 0; v < c.right_size(); ++v)
            if (c.colour(u, v) == s)
                layer.set(u, v);
    return layer;
}

void ColourLayer::set(int u, int v) {
    set_bit(&left_rows_[static_cast<std::size_t>(u) * static_cast<std::size_t>(right_words_)], v);
    set_bit(&right_rows_[static_cast<std::size_t>(v) * static_cast<std::size_t>(left_words_)], u);
}

void ColourLayer::clear(int u, int v) {
    clear_bit(&left_rows_[static_cast<std::size_t>(u) * static_cast<std::size_t>(right_words_)], v);
    clear_bit(&right_rows_[static_cast<std::size_t>(v) * static_cast<std::size_t>(left_words_)], u);
}

bool ColourLayer::has(int u, int v) const {
    return test_bit(&left_rows_[static_cast<std::size_t>(u) * static_cast<std::size_t>(right_words_)], v);
}

const std::uint64_t* ColourLayer::row(Side side, int v) const {
    return side == Side::Left ? &left_rows_[static_cast<std::size_t>(v) * static_cast<std::size_t>(right_words_)]
                              : &right_rows_[static_cast<std::size_t>(v) * static_cast<std::size_t>(left_words_)];
}

int ColourLayer::degree(Side side, int v) const {
    const std::uint64_t* r = row(side, v);
    const int w = side == Side::Left ? right_words_ : left_words_;
    int d = 0;
    for (int i = 0; i < w; ++i)
        d += std::popcount(r[i]);
    return d;
}

CopyFinder::CopyFinder(const TargetGraph& h) : h_(h), chi_(require_two_colouring(h)) {
    component_.assign(static_cast<std::size_t>(h.vertex_count()), -1);
    for (const auto& comp : connected_components(h)) {
        for (int v : comp)
            component_[static_cast<std::size_t>(v)] = component_count_;
        ++component_count_;
    }
    free_order_ = make_order({});
    for (const auto& [a, b] : h.edges())
        edge_orders_.push_back(make_order({a, b}));
}

CopyFinder::Order CopyFinder::make_order(std::vector<int> seeds) const {
    const int n = h_.vertex_count();
    Order order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<char> touched(static_cast<std::size_t>(component_count_), 0);
    auto push = [&](int w) {
        std::vector<int> earlier;
        for (int x : h_.neighbours(w))
            if (placed[static_cast<std::size_t>(x)])
                earlier.push_back(x);
        const int c = component_[static_cast<std::size_t>(w)];
        order.opens_component.push_back(touched[static_cast<std::size_t>(c)] ? 0 : 1);
        touched[static_cast<std::size_t>(c)] = 1;
        order.sequence.push_back(w);
        order.earlier.push_back(std::move(earlier));
        placed[static_cast<std::size_t>(w)] = 1;
    };
    for (int s : seeds)
        push(s);
    while (static_cast<int>(order.sequence.size()) < n) {
        int next = -1;
        for (int w = 0; w < n && next < 0; ++w) {
            if (placed[static_cast<std::size_t>(w)])
                continue;
            for (int x : h_.neighbours(w))
                if (placed[static_cast<std::size_t>(x)]) {
                    next = w;
                    break;
                }
        }
        if (next < 0)
            next = static_cast<int>(std::find(placed.begin(), placed.end(), 0) - placed.begin());
        push(next);
    }
    return order;
}

Side CopyFinder::side_of(int w, const std::vector<int>& orient) const {
    const bool first_class = chi_.colour[static_cast<std::size_t>(w)] == 1;
    const bool flipped = orient[static_cast<std::size_t>(component_[static_cast<std::size_t>(w)])] == 1;
    return first_class != flipped ? Side::Left : Side::Right;
}

bool CopyFinder::search(const ColourLayer& layer, const Order& order, std::size_t k, std::vector<int>& orient,
                        std::vector<HostVertex>& map, std::vector<std::uint64_t>& used_left,
                        std::vector<std::uint64_t>& used_right, std::uint64_t& nodes) const {
    if (k == order.sequence.size())
        return true;
    const int w = order.sequence[k];
    auto& comp_orient = orient[static_cast<std::size_t>(component_[static_cast<std::size_t>(w)])];
    if (order.opens_component[k] && comp_orient < 0) {
        for (int o = 0; o < 2; ++o) {
            comp_orient = o;
            if (search(layer, order, k, orient, map, used_left, used_right, nodes))
                return true;
        }
        comp_orient = -1;
        return false;
    }

    const Side side = side_of(w, orient);
    const int count = side == Side::Left ? layer.left_size() : layer.right_size();
    const int words = layer.words(side);
    std::uint64_t small[4];
    std::vector<std::uint64_t> large;
    std::uint64_t* cand = small;
    if (words > 4) {
        large.resize(static_cast<std::size_t>(words));
        cand = large.data();
    }
    const auto& earlier = order.earlier[k];
    if (earlier.empty()) {
        for (int i = 0; i < words; ++i) {
            const int lo = i * 64;
            const int bits = std::clamp(count - lo, 0, 64);
            cand[i] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
        }
    } else {
        const HostVertex& first = map[static_cast<std::size_t>(earlier.front())];
        std::copy_n(layer.row(first.side, first.index), words, cand);
        for (std::size_t e = 1; e < earlier.size(); ++e) {
            const HostVertex& x = map[static_cast<std::size_t>(earlier[e])];
            const std::uint64_t* r = layer.row(x.side, x.index);
            for (int i = 0; i < words; ++i)
                cand[i] &= r[i];
        }
    }
    auto& used = side == Side::Left ? used_left : used_right;
    for (int i = 0; i < words; ++i)
        cand[i] &= ~used[static_cast<std::size_t>(i)];

    const int need = h_.degree(w);
    for (int i = 0; i < words; ++i) {
        std::uint64_t bits = cand[i];
        while (bits != 0) {
            const int x = i * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            if (layer.degree(side, x) < need)
                continue;
            ++nodes;
            map[static_cast<std::size_t>(w)] = {side, x};
            set_bit(used.data(), x);
            if (search(layer, order, k + 1, orient, map, used_left, used_right, nodes))
                return true;
            clear_bit(used.data(), x);
        }
    }
    return false;
}

std::optional<std::vector<HostVertex>> CopyFinder::find(const ColourLayer& layer, std::uint64_t* nodes) const {
    std::vector<int> orient(static_cast<std::size_t>(component_count_), -1);
    std::vector<HostVertex> map(static_cast<std::size_t>(h_.vertex_count()));
    std::vector<std::uint64_t> used_left(static_cast<std::size_t>(layer.words(Side::Left)), 0);
    std::vector<std::uint64_t> used_right(static_cast<std::size_t>(layer.words(Side::Right)), 0);
    std::uint64_t local = 0;
    const bool found = search(layer, free_order_, 0, orient, map, used_left, used_right, local);
    if (nodes != nullptr)
        *nodes += local;
    if (!found)
        return std::nullopt;
    return map;
}

std::optional<std::vector<HostVertex>> CopyFinder::find_through(const ColourLayer& layer, int u, int v,
                                                                std::uint64_t* nodes) const {
    std::uint64_t local = 0;
    std::optional<std::vector<HostVertex>> result;
    if (layer.has(u, v)) {
        std::vector<HostVertex> map(static_cast<std::size_t>(h_.vertex_count()));
        std::vector<std::uint64_t> used_left(static_cast<std::size_t>(layer.words(Side::Left)), 0);
        std::vector<std::uint64_t> used_right(static_cast<std::size_t>(layer.words(Side::Right)), 0);
        const int du = layer.degree(Side::Left, u);
        const int dv = layer.degree(Side::Right, v);
        for (std::size_t e = 0; e < h_.edges().size() && !result; ++e) {
            const auto [a, b] = h_.edges()[e];
            for (int flip = 0; flip < 2 && !result; ++flip) {
                // flip == 0: a -> left u, b -> right v; flip == 1: the reverse.
                const int on_left = flip == 0 ? a : b;
                const int on_right = flip == 0 ? b : a;
                if (h_.degree(on_left) > du || h_.degree(on_right) > dv)
                    continue;
                std::vector<int> orient(static_cast<std::size_t>(component_count_), -1);
                orient[static_cast<std::size_t>(component_[static_cast<std::size_t>(a)])] =
                    chi_.colour[static_cast<std::size_t>(on_left)] == 1 ? 0 : 1;
                map[static_cast<std::size_t>(on_left)] = {Side::Left, u};
                map[static_cast<std::size_t>(on_right)] = {Side::Right, v};
                set_bit(used_left.data(), u);
                set_bit(used_right.data(), v);
                ++local;
                if (search(layer, edge_orders_[e], 2, orient, map, used_left, used_right, local))
                    result = map;
                clear_bit(used_left.data(), u);
                clear_bit(used_right.data(), v);
            }
        }
    }
    if (nodes != nullptr)
        *nodes += local;
    return result;
}

}  // namespace bipramsey
