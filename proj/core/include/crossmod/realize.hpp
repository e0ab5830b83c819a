#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crossmod/bar.hpp"

namespace crossmod {

// Componentwise action of the target group on a twisted tuple level
// through the normal map's action: (a0,..,ak)^g = (a0^g,..,ak^g).
// Verified as an action by automorphisms; throws NotAutomorphism.
Action level_action(const NormalMap& nm, const Group& tuple_level, std::size_t k);

// The ambient simplicial group: level k is the semidirect product of the
// target group with twisted tuple level k under level_action; faces and
// degeneracies fix the base coordinate and act on the tuple.
SimplicialGroup ambient_simplicial(const NormalMap& nm, std::size_t depth);

// The levelwise map (g, (a0,..,ak)) -> (g.(a0)n, a1,..,ak) from the ambient
// object onto the mapped tuple construction. Verified as a simplicial
// homomorphism; throws HomCheckFailed.
SimplicialHom bar_projection(const NormalMap& nm, const SimplicialGroup& ambient,
                             const SimplicialGroup& mapped);

// Levelwise kernel of the projection, together with its inclusion into the
// ambient object. Verifies the closed form: level k holds exactly the
// elements ((a)n, (a^-1, 1,..,1)) for a in the source, so every level has
// source order. Throws ClosedFormMismatch.
KernelResult projection_kernel(const NormalMap& nm, const SimplicialHom& projection);

// One verification step of the pipeline. A check that could not run at the
// requested depth is reported with ran = false and the reason.
struct NamedCheck {
  std::string name;
  bool ran = true;
  std::string skip_reason;
  AxiomReport report;

  bool passed() const { return !ran || report.ok(); }
};

// Everything realize builds, plus the table of named checks:
//   inner-normal-levelwise      kernel levels are normal in the ambient ones
//   inner-discrete-at-level1    both faces agree on the kernel's level 1
//   ambient-identity-component  the component subgroup is the unit-base slice
//   pi0-ambient-iso-target      components of the ambient object match the
//                               target group through the base coordinate
//   pi0-inner-iso-source        components of the kernel match the source
//                               group through the inverted tuple coordinate
//   pi0-square-commutes         the two routes from kernel components to the
//                               target agree elementwise
//   moore-pi1-trivial           first homotopy of ambient and kernel objects
//                               vanishes (skipped when depth < 2)
struct Realization {
  NormalMap input;
  SimplicialGroup ambient;
  SimplicialGroup mapped;
  SimplicialHom projection;
  SimplicialGroup inner;
  SimplicialHom inclusion;
  ComponentGroup pi0_ambient;
  ComponentGroup pi0_inner;
  Hom pi0_ambient_to_target;
  Hom pi0_inner_to_source;
  std::vector<NamedCheck> checks;

  bool ok() const;
  const NamedCheck* find(std::string_view name) const;
};

// Runs the whole construction at the given truncation depth and records the
// named checks above. Requires depth >= 1 (throws TruncationTooShallow) and
// a valid normal map (throws HypothesisFailed with the first axiom witness).
Realization realize(const NormalMap& nm, std::size_t depth = 3);

// Feeds the kernel inclusion through induced_pi0_map and verifies the
// resulting normal map is isomorphic to the input, action included. The
// comparison isomorphisms are rebuilt here from the projections, not taken
// from the realization. Throws RoundTripFailed when called on a realization
// with failing checks; hypothesis errors from the induced map propagate.
// Tags: "roundtrip-source-identification" {x}, "roundtrip-target-
// identification" {x}, plus the tags of check_normal_map_iso.
AxiomReport verify_roundtrip(const NormalMap& nm, const Realization& r);

}  // namespace crossmod
