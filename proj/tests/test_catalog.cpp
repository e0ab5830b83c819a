#include "crossmod/catalog.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

using namespace crossmod;

TEST_CASE("the shipped entry set is complete and ordered") {
  const std::vector<std::string> expected{
      "identity-Zn",       "identity-S3",    "incl-A3-S3",
      "mod2",              "trivial-target-Z4", "trivial-source",
      "bad-S3-trivial",    "bad-scrambled-action"};
  CHECK(catalog_names() == expected);

  std::vector<CatalogEntry> all = catalog_all();
  REQUIRE(all.size() == expected.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].name == expected[i]);
    CHECK_FALSE(all[i].summary.empty());
    CHECK(catalog_entry(all[i].name).name == all[i].name);
  }
}

TEST_CASE("positive entries satisfy both laws, negative entries break one") {
  for (const CatalogEntry& entry : catalog_all()) {
    CAPTURE(entry.name);
    CHECK(validate(entry.nm).ok() == entry.expected_valid);
  }

  AxiomReport collapsed = validate(catalog_entry("bad-S3-trivial").nm);
  CHECK(std::any_of(collapsed.violations.begin(), collapsed.violations.end(),
                    [](const Violation& v) { return v.axiom == "nm2"; }));

  AxiomReport scrambled = validate(catalog_entry("bad-scrambled-action").nm);
  REQUIRE_FALSE(scrambled.violations.empty());
  CHECK(scrambled.violations.front().axiom == "nm2");
  CHECK(scrambled.violations.front().witness == std::vector<Elem>{1, 1});
}

TEST_CASE("unknown names are rejected") {
  try {
    catalog_entry("no-such-entry");
    FAIL("expected UnknownEntry");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownEntry);
  }
}

TEST_CASE("the randomized corpus is valid, bounded and deterministic") {
  const std::uint64_t seed = 20240817;
  std::vector<NormalMap> corpus = random_corpus(seed, 24);
  REQUIRE(corpus.size() == 24);

  for (const NormalMap& nm : corpus) {
    CAPTURE(nm.label);
    CHECK(nm.source.order() <= 12);
    CHECK(nm.target.order() <= 12);
    CHECK(validate(nm).ok());
  }

  for (const char* prefix :
       {"corpus-identity-", "corpus-incl-", "corpus-collapse-", "corpus-central-"})
    CHECK(std::any_of(corpus.begin(), corpus.end(), [&](const NormalMap& nm) {
      return nm.label.rfind(prefix, 0) == 0;
    }));

  std::vector<NormalMap> again = random_corpus(seed, 24);
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(again[i].label == corpus[i].label);
    CHECK(again[i].source.order() == corpus[i].source.order());
    CHECK(again[i].target.order() == corpus[i].target.order());
    CHECK(again[i].map.image == corpus[i].map.image);
  }
}
