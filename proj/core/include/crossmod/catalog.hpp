#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossmod/crossed.hpp"

namespace crossmod {

// Built-in normal-map examples. Negative entries (expected_valid = false)
// deliberately break one of the two defining laws and are used to guard the
// checkers against vacuous passes.
struct CatalogEntry {
  std::string name;
  std::string summary;
  bool expected_valid;
  NormalMap nm;
};

std::vector<std::string> catalog_names();
// Throws UnknownEntry.
CatalogEntry catalog_entry(const std::string& name);
std::vector<CatalogEntry> catalog_all();

// Deterministic corpus of valid normal maps over groups of order <= 12,
// mixing identity modules, normal inclusions, maps to the trivial group and
// central maps with trivial action. Same seed, same corpus.
std::vector<NormalMap> random_corpus(std::uint64_t seed, std::size_t count);

}  // namespace crossmod
