#pragma once

#include "qcrys/rational.hpp"

namespace qcrys {

/// n = root^2 * kernel with kernel squarefree.
struct SquareSplit {
  Integer root;
  Integer kernel;
};

/// Square-part extraction for n > 0. Results are memoized process-wide
/// (thread-safe). Throws std::runtime_error if a cofactor resists
/// factoring within the iteration budget; exactness is never traded away.
SquareSplit square_split(const Integer& n);

}  // namespace qcrys
