#pragma once

#include <vector>

#include "crossmod/group.hpp"

namespace crossmod::detail {

// Breadth-first expression of every element as a word in the generators:
// order[0] is the identity and each later element x satisfies
// x = parent[x] * gens[via[x]] with parent[x] appearing earlier in order.
struct GeneratorWords {
  std::vector<Elem> gens;
  std::vector<Elem> order;
  std::vector<Elem> parent;
  std::vector<Elem> via;
};

GeneratorWords generator_words(const Group& g, const std::vector<Elem>& gens);
GeneratorWords generator_words(const Group& g);

// Extends gens[i] |-> images[i] along the word tree. The result is a
// well-defined homomorphism only if a subsequent check says so; evaluation
// alone just picks one expression per element.
std::vector<Elem> evaluate_on_words(const GeneratorWords& w, const Group& domain,
                                    const Group& codomain,
                                    const std::vector<Elem>& images);

}  // namespace crossmod::detail
