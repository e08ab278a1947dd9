#include "bipramsey/colouring.hpp"

#include "bipramsey/error.hpp"
#include "bipramsey/random.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace bipramsey {

HostColouring::HostColouring(int left, int right, int colours, std::vector<std::uint8_t> colour)
    : left_(left), right_(right), colours_(colours), colour_(std::move(colour)) {
    require(left >= 0 && right >= 0, ErrorCode::InvalidSize, "negative host side");
    require(colours >= 1 && colours <= 255, ErrorCode::InvalidColour, "colour count must be in [1, 255]");
    require(colour_.size() == static_cast<std::size_t>(left) * static_cast<std::size_t>(right),
            ErrorCode::Structural, "colouring is not total on L x R");
    for (auto c : colour_)
        require(c >= 1 && c <= colours, ErrorCode::InvalidColour, "colour " + std::to_string(c) + " out of range");
}

HostColouring HostColouring::uniform(int left, int right, int colours, int fill) {
    return HostColouring(left, right, colours,
                         std::vector<std::uint8_t>(static_cast<std::size_t>(left) * static_cast<std::size_t>(right),
                                                   static_cast<std::uint8_t>(fill)));
}

HostColouring extremal_three_split(int n) {
    require(n >= 4 && n % 2 == 0, ErrorCode::InvalidSize, "extremal split needs an even n >= 4");
    const int part = n / 2 - 1;
    const int size = 3 * part;
    std::vector<std::uint8_t> colour(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            colour[static_cast<std::size_t>(u * size + v)] = static_cast<std::uint8_t>(v / part + 1);
    return HostColouring(size, size, 3, std::move(colour));
}

HostColouring random_colouring(int n, int colours, std::uint64_t seed) {
    require(n >= 1, ErrorCode::InvalidSize, "host side must be positive");
    require(colours >= 1 && colours <= 255, ErrorCode::InvalidColour, "colour count must be in [1, 255]");
    Rng rng = make_rng(seed);
    std::vector<std::uint8_t> colour(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (auto& c : colour)
        c = static_cast<std::uint8_t>(1 + uniform_below(rng, static_cast<std::uint64_t>(colours)));
    return HostColouring(n, n, colours, std::move(colour));
}

BipartiteEdges colour_subgraph(const HostColouring& c, int s) {
    require(s >= 1 && s <= c.colour_count(), ErrorCode::InvalidColour,
            "colour " + std::to_string(s) + " outside [1, " + std::to_string(c.colour_count()) + "]");
    BipartiteEdges edges;
    for (int u = 0; u < c.left_size(); ++u)
        for (int v = 0; v < c.right_size(); ++v)
            if (c.colour(u, v) == s)
                edges.emplace_back(u, v);
    return edges;
}

void write_colouring(std::ostream& out, const HostColouring& c) {
    out << "bipcol " << c.left_size() << ' ' << c.right_size() << ' ' << c.colour_count() << '\n';
    for (int u = 0; u < c.left_size(); ++u)
        for (int v = 0; v < c.right_size(); ++v)
            out << u + 1 << ' ' << v + 1 << ' ' << c.colour(u, v) << '\n';
}

HostColouring read_colouring(std::istream& in) {
    std::string line;
    // Optional leading lines (e.g. a certificate header) are skipped up to the bipcol header.
    while (true) {
        require(static_cast<bool>(std::getline(in, line)), ErrorCode::Parse, "missing bipcol header");
        if (line.rfind("bipcol", 0) == 0)
            break;
        require(line.rfind("certificate", 0) == 0 || line.empty() || line.front() == '#', ErrorCode::Parse,
                "expected 'bipcol L R r' header");
    }
    std::istringstream header(line);
    std::string tag;
    int left = -1, right = -1, colours = -1;
    header >> tag >> left >> right >> colours;
    require(!header.fail() && left >= 0 && right >= 0 && colours >= 1 && colours <= 255, ErrorCode::Parse,
            "malformed bipcol header");
    const std::size_t total = static_cast<std::size_t>(left) * static_cast<std::size_t>(right);
    std::vector<std::uint8_t> colour(total, 0);
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        int u = 0, v = 0, c = 0;
        require(static_cast<bool>(row >> u >> v >> c) && (row >> std::ws).eof(), ErrorCode::Parse,
                "bad colouring line '" + line + "'");
        require(u >= 1 && u <= left && v >= 1 && v <= right, ErrorCode::Parse, "pair out of range: '" + line + "'");
        require(c >= 1 && c <= colours, ErrorCode::InvalidColour, "colour out of range: '" + line + "'");
        auto& slot = colour[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(right) +
                            static_cast<std::size_t>(v - 1)];
        require(slot == 0, ErrorCode::Parse, "duplicate pair: '" + line + "'");
        slot = static_cast<std::uint8_t>(c);
        ++seen;
    }
    require(seen == total, ErrorCode::Parse,
            "colouring lists " + std::to_string(seen) + " of " + std::to_string(total) + " pairs");
    return HostColouring(left, right, colours, std::move(colour));
}

}  // namespace bipramsey
