#pragma once

#include <vector>

#include "crossmod/crossed.hpp"
#include "crossmod/group.hpp"

namespace crossmod {

// Group-valued simplicial object truncated at `depth`: levels 0..depth,
// faces d(k, i): level k -> level k-1 for 0 <= i <= k >= 1, degeneracies
// s(k, i): level k -> level k+1 for 0 <= i <= k < depth. Maps compose left
// to right, so "f then g" sends x to g(f(x)), and the simplicial identities
// read, whenever both sides stay within the truncation:
//   d_i then d_j-1 = d_j then d_i        (i < j)
//   s_j then s_i   = s_i then s_j+1      (i <= j)
//   s_j then d_i   = d_i then s_j-1      (i < j)
//   s_j then d_i   = identity            (i = j or i = j + 1)
//   s_j then d_i   = d_i-1 then s_j      (i > j + 1)
struct SimplicialGroup {
  int depth = 0;
  std::vector<Group> level;
  std::vector<std::vector<Hom>> face;
  std::vector<std::vector<Hom>> degen;

  const Hom& d(int k, int i) const { return face[k][i]; }
  const Hom& s(int k, int i) const { return degen[k][i]; }
};

// Levelwise map between simplicial groups of the same depth.
struct SimplicialHom {
  SimplicialGroup source;
  SimplicialGroup target;
  std::vector<Hom> map;
};

// The same group at every level, every face and degeneracy the identity.
SimplicialGroup constant_simplicial(const Group& g, int depth);

// Exhaustive check that every face and degeneracy is a homomorphism and
// every simplicial identity instance holds. Tags: "generators" {k},
// "face-hom" {k,i,x,s}, "degen-hom" {k,i,x,s}, "dd" {k,i,j,x},
// "ss" {k,i,j,x}, "ds" {k,i,j,x}.
AxiomReport check_simplicial_identities(const SimplicialGroup& sg);

// Levelwise homomorphism property plus commutation with faces and
// degeneracies. Tags: "level-hom" {k,x,s}, "level-identity" {k},
// "generators" {k}, "face-square" {k,i,x}, "degen-square" {k,i,x}.
AxiomReport check_simplicial_hom(const SimplicialHom& f);

// Levelwise kernel with the restricted faces and degeneracies, and its
// levelwise inclusion. Throws RestrictionEscapesKernel when a face or
// degeneracy fails to restrict, which can only happen for input that is not
// a simplicial homomorphism.
struct KernelResult {
  SimplicialGroup kernel;
  SimplicialHom inclusion;
};
KernelResult levelwise_kernel(const SimplicialHom& f);

// Subgroup of level 0 generated by d0(y)^-1 d1(y) over y in level 1.
// Throws ComponentNotNormal with witness {v, g} if it is not normal.
Subgroup identity_component(const SimplicialGroup& sg);

// Level 0 modulo the identity component.
struct ComponentGroup {
  Group group;
  Hom projection;
  Subgroup component_of_identity;
};
ComponentGroup pi0(const SimplicialGroup& sg);

// True when the two faces out of level 1 agree everywhere.
bool is_discrete_at_level1(const SimplicialGroup& sg);

// Homotopy group at index n >= 0 from the normalized chains
// C_k = intersection of ker d(k, i) over i >= 1, with boundary d(k, 0).
// Uses levels up to n+1; throws TruncationTooShallow when depth < n+1.
Group moore_pi_n(const SimplicialGroup& sg, int n);

// Cross-check of the two routes to pi0: the generated identity component
// must equal the image of the boundary out of the level-1 chain group, and
// the explicit map between the two quotients must be an isomorphism.
// Tags: "component-vs-boundary" {x}, "pi0-moore-iso" {x}.
AxiomReport check_pi0_against_moore(const SimplicialGroup& sg);

// The map pi0 of a levelwise-injective inclusion with levelwise-normal
// image: source pi0 of the included object, target pi0 of the ambient one,
// action induced by conjugation. All hypotheses are re-verified here or in
// quotient_normal_map; throws HypothesisFailed (or ComponentNotNormal from
// the component computations) when one fails.
NormalMap induced_pi0_map(const SimplicialHom& inclusion);

// Same construction, also exposing the two component projections.
struct InducedPi0Map {
  NormalMap nm;
  Hom source_projection;  // included level 0 -> nm.source
  Hom target_projection;  // ambient level 0 -> nm.target
};
InducedPi0Map induced_pi0_map_data(const SimplicialHom& inclusion);

}  // namespace crossmod
