#pragma once

#include "bipramsey/colouring.hpp"
#include "bipramsey/graph.hpp"
#include "bipramsey/regularity.hpp"

#include <vector>

namespace bipramsey::reference {

constexpr int kBruteRegularityCap = 12;

/// Serial check of every (X, Y) subset pair. The witness is the violator with
/// the smallest X mask, then the smallest Y mask. SizeLimit beyond the cap.
RegularityCertificate eps_regular_brute(const VertexPair& p, const Rational& eps);

/// Walks all r^(n*n) colourings of K_{n,n} without pruning and reports
/// whether one avoids every target in its colour. SizeLimit when r^(n*n) > 2^24.
bool avoiding_colouring_exists(const std::vector<TargetGraph>& targets, int n);

}  // namespace bipramsey::reference
