#include "crossmod/catalog.hpp"

#include <random>
#include <utility>

namespace crossmod {

namespace {

Group symmetric3() {
  return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, kDefaultOrderCap, "S3");
}

Group dihedral(std::size_t n, std::string label) {
  std::vector<Elem> rot(n), refl(n);
  for (Elem i = 0; i < n; ++i) {
    rot[i] = static_cast<Elem>((i + 1) % n);
    refl[i] = static_cast<Elem>((n - i) % n);
  }
  return group_from_permutations(n, {rot, refl}, kDefaultOrderCap, std::move(label));
}

Group quaternion8() {
  // Basis order: +1, +i, +j, +k, -1, -i, -j, -k. unit_mul multiplies the
  // units 1..3 by the cyclic rule ij = k.
  auto unit_mul = [](Elem a, Elem b) -> std::pair<Elem, bool> {
    if (a == b) return {0, true};
    if ((a % 3) + 1 == b) return {static_cast<Elem>(6 - a - b), false};
    return {static_cast<Elem>(6 - a - b), true};
  };
  std::vector<Elem> table(64);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      Elem ux = x % 4, uy = y % 4;
      bool neg = (x >= 4) != (y >= 4);
      Elem unit;
      if (ux == 0) unit = uy;
      else if (uy == 0) unit = ux;
      else {
        auto [u, flip] = unit_mul(ux, uy);
        unit = u;
        neg = neg != flip;
      }
      table[x * 8 + y] = static_cast<Elem>(unit + (neg ? 4 : 0));
    }
  return group_from_table(table, 8, "Q8");
}

Group alternating4() {
  return group_from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, kDefaultOrderCap,
                                 "A4");
}

NormalMap identity_module(const Group& g, std::string label) {
  NormalMap nm = inclusion_crossed_module(g, full_subgroup(g));
  nm.label = std::move(label);
  return nm;
}

NormalMap mod2_module() {
  Group z4 = cyclic_group(4);
  Group z2 = cyclic_group(2);
  return NormalMap{z4, z2, make_hom(z4, z2, {0, 1, 0, 1}),
                   trivial_action(z2, z4), "mod2"};
}

NormalMap trivial_source_module() {
  Group one = trivial_group();
  Group s3 = symmetric3();
  return NormalMap{one, s3, make_hom(one, s3, {s3.identity()}),
                   trivial_action(s3, one), "trivial-source"};
}

NormalMap collapse_s3_module() {
  Group s3 = symmetric3();
  Group one = trivial_group();
  std::vector<Elem> zeros(s3.order(), 0);
  return NormalMap{s3, one, make_hom(s3, one, zeros), trivial_action(one, s3),
                   "bad-S3-trivial"};
}

NormalMap scrambled_action_module() {
  Group z4 = cyclic_group(4);
  Group z2 = cyclic_group(2);
  std::vector<std::vector<Elem>> tables = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  return NormalMap{z4, z2, make_hom(z4, z2, {0, 1, 0, 1}),
                   action_from_tables(z2, z4, tables), "bad-scrambled-action"};
}

std::vector<Elem> center_of(const Group& g) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x)
      central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<Group> corpus_pool() {
  std::vector<Group> pool;
  for (std::size_t n = 2; n <= 12; ++n) pool.push_back(cyclic_group(n));
  pool.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  pool.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  pool.push_back(direct_product(cyclic_group(2), cyclic_group(6)));
  pool.push_back(symmetric3());
  pool.push_back(dihedral(4, "D4"));
  pool.push_back(dihedral(5, "D5"));
  pool.push_back(dihedral(6, "D6"));
  pool.push_back(quaternion8());
  pool.push_back(alternating4());
  return pool;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"identity-Zn",       "identity-S3",    "incl-A3-S3",
          "mod2",              "trivial-target-Z4", "trivial-source",
          "bad-S3-trivial",    "bad-scrambled-action"};
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "identity-Zn")
    return {name, "identity module on Z/6", true, identity_module(cyclic_group(6), name)};
  if (name == "identity-S3")
    return {name, "identity module on S3", true, identity_module(symmetric3(), name)};
  if (name == "incl-A3-S3") {
    Group s3 = symmetric3();
    NormalMap nm = inclusion_crossed_module(s3, subgroup_generated(s3, {2}));
    nm.label = name;
    return {name, "inclusion of the rotation subgroup of S3", true, std::move(nm)};
  }
  if (name == "mod2")
    return {name, "reduction Z/4 -> Z/2 with trivial action", true, mod2_module()};
  if (name == "trivial-target-Z4") {
    NormalMap nm = trivial_target_crossed_module(cyclic_group(4));
    nm.label = name;
    return {name, "Z/4 to the one-element group", true, std::move(nm)};
  }
  if (name == "trivial-source")
    return {name, "one-element group into S3", true, trivial_source_module()};
  if (name == "bad-S3-trivial")
    return {name, "collapse of S3 with trivial action; breaks the self-action law",
            false, collapse_s3_module()};
  if (name == "bad-scrambled-action")
    return {name, "mod2 map with an inverting action; breaks the self-action law",
            false, scrambled_action_module()};
  throw Error(Errc::UnknownEntry, "no catalog entry named " + name);
}

std::vector<CatalogEntry> catalog_all() {
  std::vector<CatalogEntry> out;
  for (const std::string& name : catalog_names()) out.push_back(catalog_entry(name));
  return out;
}

std::vector<NormalMap> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Group> pool = corpus_pool();
  auto pick = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };

  std::vector<NormalMap> out;
  while (out.size() < count) {
    switch (out.size() % 4) {
      case 0: {
        const Group& g = pool[pick(pool.size())];
        NormalMap nm = identity_module(g, "corpus-identity-" + g.label());
        out.push_back(std::move(nm));
        break;
      }
      case 1: {
        const Group& g = pool[pick(pool.size())];
        std::vector<Elem> seeds = {static_cast<Elem>(pick(g.order()))};
        if (rng() % 2) seeds.push_back(static_cast<Elem>(pick(g.order())));
        Subgroup h = subgroup_generated(g, seeds);
        if (!is_normal(g, h)) break;
        NormalMap nm = inclusion_crossed_module(g, h);
        nm.label = "corpus-incl-" + g.label() + "-" + std::to_string(h.size());
        out.push_back(std::move(nm));
        break;
      }
      case 2: {
        const Group& n = pool[pick(pool.size())];
        if (!is_abelian(n)) break;
        NormalMap nm = trivial_target_crossed_module(n);
        nm.label = "corpus-collapse-" + n.label();
        out.push_back(std::move(nm));
        break;
      }
      default: {
        const Group& g = pool[pick(pool.size())];
        std::vector<Elem> z = center_of(g);
        Elem c = z[pick(z.size())];
        std::size_t m = 2 + pick(11);
        if (m % element_order(g, c) != 0) break;
        Group n = cyclic_group(m);
        std::vector<Elem> image(m);
        Elem p = g.identity();
        for (Elem a = 0; a < m; ++a) {
          image[a] = p;
          p = g.mul(p, c);
        }
        NormalMap nm{n, g, make_hom(n, g, std::move(image)), trivial_action(g, n),
                     "corpus-central-Z" + std::to_string(m) + "-" + g.label()};
        out.push_back(std::move(nm));
        break;
      }
    }
  }
  return out;
}

}  // namespace crossmod
