#pragma once

#include <string>
#include <vector>

#include "crossmod/error.hpp"

namespace crossmod {

// One concrete counterexample to a named law. The axiom tag is a stable
// identifier ("nm1", "dd", "face-square", ...); the witness holds the element
// indices that violate the law, in the order documented by the check that
// produced it.
struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
  std::string note;

  bool operator==(const Violation&) const = default;
};

// Result of an exhaustive check. Empty means the law holds everywhere.
// Collection is capped so that a thoroughly broken input produces a bounded
// report; `truncated` records that the cap was hit.
struct AxiomReport {
  static constexpr std::size_t kMaxViolations = 64;

  std::vector<Violation> violations;
  bool truncated = false;

  bool ok() const { return violations.empty(); }
  // Returns false once the cap is reached so scan loops can bail out early.
  bool add(std::string axiom, std::vector<Elem> witness, std::string note = "");
  void merge(const AxiomReport& other);

  bool operator==(const AxiomReport&) const = default;
};

}  // namespace crossmod
