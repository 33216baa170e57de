#pragma once

#include <vector>

#include "lpocert/signature.hpp"
#include "lpocert/term.hpp"

namespace lpo {

// All ground terms of size <= max_size, in a fixed deterministic order:
// size-major, within a size by symbol name, and for each symbol by the
// argument-size composition in lexicographic order with argument choices
// varying rightmost-fastest.
std::vector<Term> enum_ground_by_size(const Signature& sig, unsigned max_size);

// All ground terms of depth <= max_depth, sorted by witness_less
// (depth-major, then structural).
std::vector<Term> enum_ground_by_depth(const Signature& sig,
                                       unsigned max_depth);

}  // namespace lpo
