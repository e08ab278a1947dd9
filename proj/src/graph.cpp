#include "bipramsey/graph.hpp"

#include "bipramsey/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace bipramsey {

TargetGraph::TargetGraph(int n, std::vector<Edge> edges) : n_(n) {
    require(n >= 0, ErrorCode::InvalidSize, "negative vertex count");
    for (auto& [u, v] : edges) {
        require(u != v, ErrorCode::Structural, "self-loop at vertex " + std::to_string(u + 1));
        require(u >= 0 && v >= 0 && u < n && v < n, ErrorCode::Structural,
                "edge endpoint outside [1, " + std::to_string(n) + "]");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
}

int TargetGraph::max_degree() const {
    int best = 0;
    for (const auto& list : adjacency_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool TargetGraph::adjacent(int u, int v) const {
    const auto& list = neighbours(u);
    return std::binary_search(list.begin(), list.end(), v);
}

TargetGraph TargetGraph::relabelled(const std::vector<int>& perm) const {
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const auto& [u, v] : edges_)
        mapped.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return TargetGraph(n_, std::move(mapped));
}

int VertexTwoColouring::count(int c) const {
    return static_cast<int>(std::count(colour.begin(), colour.end(), c));
}

bool VertexTwoColouring::is_proper_on(const TargetGraph& h) const {
    if (size() != h.vertex_count())
        return false;
    for (int c : colour)
        if (c != 1 && c != 2)
            return false;
    for (const auto& [u, v] : h.edges())
        if (colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)])
            return false;
    return true;
}

TargetGraph make_path(int n) {
    require(n >= 2, ErrorCode::InvalidSize, "path needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return TargetGraph(n, std::move(edges));
}

TargetGraph make_even_cycle(int n) {
    require(n >= 4 && n % 2 == 0, ErrorCode::InvalidSize, "even cycle needs an even n >= 4");
    // Two strands 0,2,4,... and 1,3,5,... joined at both ends.
    std::vector<Edge> edges;
    for (int i = 0; i + 2 < n; ++i)
        edges.emplace_back(i, i + 2);
    edges.emplace_back(0, 1);
    edges.emplace_back(n - 2, n - 1);
    return TargetGraph(n, std::move(edges));
}

TargetGraph make_grid(int a, int b) {
    require(a >= 1 && b >= 1, ErrorCode::InvalidSize, "grid sides must be positive");
    const int row = std::min(a, b);
    const int rows = std::max(a, b);
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < row; ++c) {
            const int v = r * row + c;
            if (c + 1 < row)
                edges.emplace_back(v, v + 1);
            if (r + 1 < rows)
                edges.emplace_back(v, v + row);
        }
    return TargetGraph(a * b, std::move(edges));
}

TargetGraph make_star(int leaves) {
    require(leaves >= 1, ErrorCode::InvalidSize, "star needs a leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return TargetGraph(leaves + 1, std::move(edges));
}

TargetGraph make_edgeless(int n) { return TargetGraph(n, {}); }

namespace {
int parse_positive(std::string_view s, const std::string& whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    require(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(), ErrorCode::Parse,
            "bad graph name '" + whole + "'");
    return value;
}
}  // namespace

TargetGraph make_named_graph(const std::string& name) {
    require(name.size() >= 2, ErrorCode::Parse, "bad graph name '" + name + "'");
    std::string_view rest(name);
    rest.remove_prefix(1);
    switch (name.front()) {
    case 'P': return make_path(parse_positive(rest, name));
    case 'C': return make_even_cycle(parse_positive(rest, name));
    case 'S': return make_star(parse_positive(rest, name));
    case 'E': return make_edgeless(parse_positive(rest, name));
    case 'G': {
        auto x = rest.find('x');
        require(x != std::string_view::npos, ErrorCode::Parse, "grid name must look like G2x3");
        return make_grid(parse_positive(rest.substr(0, x), name), parse_positive(rest.substr(x + 1), name));
    }
    default: fail(ErrorCode::Parse, "unknown graph family in '" + name + "'");
    }
}

int bandwidth_of_labelling(const TargetGraph& h) {
    int b = 0;
    for (const auto& [u, v] : h.edges())
        b = std::max(b, v - u);
    return b;
}

namespace {

class BandwidthSearch {
public:
    BandwidthSearch(const TargetGraph& h, int limit)
        : h_(h), limit_(limit), position_(static_cast<std::size_t>(h.vertex_count()), -1),
          order_(static_cast<std::size_t>(h.vertex_count()), -1) {}

    bool feasible() { return place(0); }

private:
    bool place(int pos) {
        const int n = h_.vertex_count();
        if (pos == n)
            return true;
        // A vertex placed more than limit_ slots ago must have no unplaced neighbours left.
        if (pos - limit_ - 1 >= 0) {
            const int old = order_[static_cast<std::size_t>(pos - limit_ - 1)];
            for (int w : h_.neighbours(old))
                if (position_[static_cast<std::size_t>(w)] < 0)
                    return false;
        }
        for (int v = 0; v < n; ++v) {
            if (position_[static_cast<std::size_t>(v)] >= 0)
                continue;
            bool ok = true;
            for (int w : h_.neighbours(v)) {
                const int pw = position_[static_cast<std::size_t>(w)];
                if (pw >= 0 && pos - pw > limit_) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            position_[static_cast<std::size_t>(v)] = pos;
            order_[static_cast<std::size_t>(pos)] = v;
            if (place(pos + 1))
                return true;
            position_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const TargetGraph& h_;
    int limit_;
    std::vector<int> position_;
    std::vector<int> order_;
};

}  // namespace

int exact_bandwidth(const TargetGraph& h) {
    require(h.vertex_count() <= kExactBandwidthCap, ErrorCode::SizeLimit,
            "exact bandwidth is limited to " + std::to_string(kExactBandwidthCap) + " vertices");
    if (h.edge_count() == 0)
        return 0;
    const int upper = bandwidth_of_labelling(h);
    const int lower = std::max(1, (h.max_degree() + 1) / 2);
    for (int b = lower; b < upper; ++b)
        if (BandwidthSearch(h, b).feasible())
            return b;
    return upper;
}

std::optional<VertexTwoColouring> proper_two_colouring(const TargetGraph& h) {
    VertexTwoColouring chi{std::vector<int>(static_cast<std::size_t>(h.vertex_count()), 0)};
    for (int root = 0; root < h.vertex_count(); ++root) {
        if (chi.colour[static_cast<std::size_t>(root)] != 0)
            continue;
        chi.colour[static_cast<std::size_t>(root)] = 1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop();
            for (int w : h.neighbours(v)) {
                auto& cw = chi.colour[static_cast<std::size_t>(w)];
                const int want = 3 - chi.colour[static_cast<std::size_t>(v)];
                if (cw == 0) {
                    cw = want;
                    queue.push(w);
                } else if (cw != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return chi;
}

VertexTwoColouring require_two_colouring(const TargetGraph& h) {
    auto chi = proper_two_colouring(h);
    require(chi.has_value(), ErrorCode::Structural, "target graph is not bipartite");
    return *chi;
}

std::vector<std::vector<int>> connected_components(const TargetGraph& h) {
    std::vector<int> seen(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<std::vector<int>> components;
    for (int root = 0; root < h.vertex_count(); ++root) {
        if (seen[static_cast<std::size_t>(root)])
            continue;
        std::vector<int> comp{root};
        seen[static_cast<std::size_t>(root)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : h.neighbours(comp[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

BalanceReport is_balanced_beta_graph(const TargetGraph& h, const VertexTwoColouring& chi,
                                     const Rational& beta, int delta) {
    require(chi.size() == h.vertex_count(), ErrorCode::Structural, "colouring is not total on V(H)");
    require(beta > 0, ErrorCode::Precondition, "beta must be positive");
    BalanceReport report;
    report.bandwidth = bandwidth_of_labelling(h);
    report.max_degree = h.max_degree();
    report.class_one = chi.count(1);
    report.class_two = chi.count(2);
    if (!chi.is_proper_on(h))
        report.failed_clauses.emplace_back("improper-colouring");
    if (Rational(report.bandwidth) > beta * h.vertex_count())
        report.failed_clauses.emplace_back("bandwidth");
    if (report.max_degree > delta)
        report.failed_clauses.emplace_back("max-degree");
    // With an empty second class this only holds when the first is empty too.
    if (Rational(std::abs(report.class_one - report.class_two)) > beta * report.class_two)
        report.failed_clauses.emplace_back("class-balance");
    report.balanced = report.failed_clauses.empty();
    return report;
}

void write_graph(std::ostream& out, const TargetGraph& h) {
    out << "graph " << h.vertex_count() << '\n';
    for (const auto& [u, v] : h.edges())
        out << u + 1 << ' ' << v + 1 << '\n';
}

TargetGraph read_graph(std::istream& in) {
    std::string line;
    bool found = false;
    while (!found && std::getline(in, line))
        found = !line.empty() && line.front() != '#';
    require(found, ErrorCode::Parse, "missing graph header");
    std::istringstream header(line);
    std::string tag;
    int n = -1;
    header >> tag >> n;
    require(tag == "graph" && n >= 0 && header.eof(), ErrorCode::Parse, "expected 'graph n' header");
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        int u = 0, v = 0;
        require(static_cast<bool>(row >> u >> v) && (row >> std::ws).eof(), ErrorCode::Parse,
                "bad edge line '" + line + "'");
        edges.emplace_back(u - 1, v - 1);
    }
    return TargetGraph(n, std::move(edges));
}

}  // namespace bipramsey
