#pragma once

#include <span>

#include "crossmod/crossed.hpp"
#include "crossmod/simplicial.hpp"

namespace crossmod {

// Level k of the bar construction Bar(N,N) carries (k+1)-tuples of N,
// packed with coordinate 0 most significant, under the twisted product
//   (a0,..,ak) * (b0,..,bk) = (a0 b0, a1^b0 b1, .., ak^(b0..b(k-1)) bk)
// where exponents conjugate inside N. Throws ClosureTooLarge when the
// level order would not fit an element index.
Group bar_nn_level(const Group& n, std::size_t k);
std::vector<Elem> bar_nn_coords(const Group& n, std::size_t k, Elem x);
Elem bar_nn_pack(const Group& n, std::span<const Elem> coords);

// The full truncation: face i multiplies coordinates i and i+1 together
// (the last face drops the final coordinate), degeneracy i inserts the
// identity after coordinate i.
SimplicialGroup bar_nn(const Group& n, std::size_t depth);

// Level k of Bar(G,N) for a normal map n: N -> G carries pairs
// (g, (a1,..,ak)), packed g first, under
//   (g, a1,..,ak) o (h, b1,..,bk)
//     = (gh, a1^h b1, a2^(h.(b1)n) b2, .., ak^(h.(b1..b(k-1))n) bk)
// with exponents acting through the normal map's action. The level-0
// carrier is G itself.
Group bar_gn_level(const NormalMap& nm, std::size_t k);
Elem bar_gn_base(const NormalMap& nm, std::size_t k, Elem x);
std::vector<Elem> bar_gn_coords(const NormalMap& nm, std::size_t k, Elem x);
Elem bar_gn_pack(const NormalMap& nm, Elem g, std::span<const Elem> coords);

// Face 0 folds the first coordinate into the base through the map,
// face i in the middle multiplies coordinates i and i+1, the last face
// drops the final coordinate; degeneracy i inserts the identity after
// position i (position 0 being the base).
SimplicialGroup bar_gn(const NormalMap& nm, std::size_t depth);

}  // namespace crossmod
