#pragma once

#include <string>
#include <string_view>

#include "pbz/algebra.hpp"

namespace pbz {

// Line-oriented algebra files; `#` starts a comment.
//
//   algebra F8
//   signature BZ
//   elements 0 c a b b' a' c' 1
//   covers 0: c
//   covers c: a b
//   invol 0:1 c:c' a:a' b:b'
//   brouwer 0:1 *:0
//
// `covers x: y z` lists upper covers; the order is their reflexive
// transitive closure. `invol` pairs are recorded in both directions and
// must mention every element. `brouwer` and `diamond` take `x:y` entries
// and an optional `*:y` default. A pair is split at the colon that leaves
// a known label on both sides, so labels may contain colons.

// Throws FormatError with the offending line, MalformedAlgebra when the
// described structure violates an algebra invariant.
FiniteAlgebra parse_algebra(std::string_view text);
std::string format_algebra(const FiniteAlgebra& algebra);

FiniteAlgebra load_algebra(const std::string& path);
void save_algebra(const FiniteAlgebra& algebra, const std::string& path);

}  // namespace pbz
