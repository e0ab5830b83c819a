#pragma once

#include <string>
#include <vector>

#include "crossmod/group.hpp"

namespace crossmod {

// A group map n: source -> target together with a right action of the target
// on the source, written a^g. The two laws under test:
//   equivariance: n(a^g) = g^-1 n(a) g  for all a, g
//   self-action:  a^(n(b)) = b^-1 a b   for all a, b
struct NormalMap {
  Group source;
  Group target;
  Hom map;
  Action action;
  std::string label;
};

// Equivariance on all pairs. Tag "nm1", witness {a, g}.
AxiomReport check_nm1(const NormalMap& nm);
// Self-action law on all pairs. Tag "nm2", witness {a, b}.
AxiomReport check_nm2(const NormalMap& nm);
// Union of both checks, every violation listed (up to the report cap).
AxiomReport validate(const NormalMap& nm);

// Derived consequences, used as independent cross-checks:
// ker n is central in source (tag "kernel-central", witness {k, a});
// im n is normal in target (tag "image-normal", witness {v, g}).
AxiomReport check_kernel_central(const NormalMap& nm);
AxiomReport check_image_normal(const NormalMap& nm);

// N normal in G, inclusion map, conjugation action. Throws NotNormal.
NormalMap inclusion_crossed_module(const Group& g, const Subgroup& n);

// N abelian mapping to the one-element group. Throws NotAbelian.
NormalMap trivial_target_crossed_module(const Group& n);

// Gamma/K -> G/M induced by inclusion, with the conjugation-induced action
// (K gamma)^(M g) = K (gamma^g). Hypotheses checked exhaustively, in order:
// K, M, Gamma normal in G; K <= M; K <= Gamma; [Gamma, M] <= K. Throws
// HypothesisFailed naming the failed hypothesis with a witness.
NormalMap quotient_normal_map(const Group& g, const Subgroup& k, const Subgroup& m,
                              const Subgroup& gamma);

// Same construction, also exposing the coset projections used to build it.
struct QuotientNormalMapData {
  NormalMap nm;
  Hom gamma_inclusion;     // as_group(gamma) -> g
  Hom source_projection;   // as_group(gamma) -> nm.source
  Hom target_projection;   // g -> nm.target
};
QuotientNormalMapData quotient_normal_map_data(const Group& g, const Subgroup& k,
                                               const Subgroup& m,
                                               const Subgroup& gamma);

// Compatible pair of isomorphisms between normal maps.
struct NormalMapIso {
  Hom on_source;
  Hom on_target;
};

// Verifies both legs are bijective homomorphisms, the square commutes
// (tag "iso-square", witness {a}) and actions correspond
// (tag "iso-equivariance", witness {a, g}).
AxiomReport check_normal_map_iso(const NormalMap& from, const NormalMap& to,
                                 const NormalMapIso& iso);

// All actions making the given map n a valid normal map, as action tables
// sorted lexicographically. Enumerates automorphism assignments on target
// generators, pruned by equivariance and the self-action law before full
// validation. Throws SearchSpaceTooLarge past candidate_cap.
std::vector<Action> search_crossed_structures(const Hom& n,
                                              std::size_t candidate_cap = 1000000);

}  // namespace crossmod
