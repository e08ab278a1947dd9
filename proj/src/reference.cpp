#include "bipramsey/reference.hpp"

#include "bipramsey/error.hpp"
#include "bipramsey/ramsey.hpp"

#include <bit>
#include <cmath>

namespace bipramsey::reference {

RegularityCertificate eps_regular_brute(const VertexPair& p, const Rational& eps) {
    require(p.a_size() <= kBruteRegularityCap && p.b_size() <= kBruteRegularityCap, ErrorCode::SizeLimit,
            "brute-force regularity is capped at " + std::to_string(kBruteRegularityCap) + " per side");
    RegularityCertificate cert;
    cert.epsilon = eps;
    const SmallFraction e = small_fraction(eps);
    const std::int64_t area = static_cast<std::int64_t>(p.a_size()) * p.b_size();
    for (std::uint32_t xm = 1; xm < (1U << p.a_size()); ++xm) {
        const std::int64_t x = std::popcount(xm);
        if (x * e.den < e.num * p.a_size())
            continue;
        for (std::uint32_t ym = 1; ym < (1U << p.b_size()); ++ym) {
            const std::int64_t y = std::popcount(ym);
            if (y * e.den < e.num * p.b_size())
                continue;
            std::int64_t sum = 0;
            for (int i = 0; i < p.a_size(); ++i)
                if ((xm >> i) & 1U)
                    for (int j = 0; j < p.b_size(); ++j)
                        sum += ((ym >> j) & 1U) && p.has(i, j);
            __int128 diff = static_cast<__int128>(sum) * area - static_cast<__int128>(p.edge_count()) * x * y;
            if (diff < 0)
                diff = -diff;
            if (diff * e.den >= static_cast<__int128>(e.num) * x * y * area) {
                cert.regular = false;
                for (int i = 0; i < p.a_size(); ++i)
                    if ((xm >> i) & 1U)
                        cert.x.push_back(i);
                for (int j = 0; j < p.b_size(); ++j)
                    if ((ym >> j) & 1U)
                        cert.y.push_back(j);
                return cert;
            }
        }
    }
    return cert;
}

bool avoiding_colouring_exists(const std::vector<TargetGraph>& targets, int n) {
    const int r = static_cast<int>(targets.size());
    require(r >= 1 && n >= 1, ErrorCode::InvalidSize, "need targets and a positive host size");
    const double total = std::pow(static_cast<double>(r), n * n);
    require(total <= static_cast<double>(1 << 24), ErrorCode::SizeLimit, "too many colourings to enumerate");
    std::vector<std::uint8_t> colours(static_cast<std::size_t>(n * n), 1);
    for (;;) {
        const HostColouring c(n, n, r, colours);
        bool avoids = true;
        for (int s = 1; s <= r && avoids; ++s)
            avoids = !find_monochromatic_copy(c, targets[static_cast<std::size_t>(s - 1)], s).has_value();
        if (avoids)
            return true;
        std::size_t k = 0;
        while (k < colours.size() && colours[k] == r)
            colours[k++] = 1;
        if (k == colours.size())
            return false;
        ++colours[k];
    }
}

}  // namespace bipramsey::reference
