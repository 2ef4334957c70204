#pragma once

#include "scg/linalg.hpp"

#include <cstdint>
#include <vector>

namespace scg {

// Deterministic Schreier-Sims on the natural action on packed row vectors.
// Requires k*d <= 24 so every point fits one 32-bit word. Returns the exact
// group order without enumerating elements.
std::uint64_t order_via_stabilizer_chain(const Field& f, const std::vector<Mat>& gens);

}  // namespace scg
