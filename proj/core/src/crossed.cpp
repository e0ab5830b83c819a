#include "crossmod/crossed.hpp"

#include <algorithm>
#include <cassert>

#include "words.hpp"

namespace crossmod {

AxiomReport check_nm1(const NormalMap& nm) {
  AxiomReport r;
  const std::size_t na = nm.source.order();
  const std::size_t ng = nm.target.order();
  for (Elem a = 0; a < na; ++a)
    for (Elem g = 0; g < ng; ++g)
      if (nm.map(nm.action.act(a, g)) != nm.target.conj(nm.map(a), g)) {
        if (!r.add("nm1", {a, g}, "n(a^g) != g^-1 n(a) g")) return r;
      }
  return r;
}

AxiomReport check_nm2(const NormalMap& nm) {
  AxiomReport r;
  const std::size_t na = nm.source.order();
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < na; ++b)
      if (nm.action.act(a, nm.map(b)) != nm.source.conj(a, b)) {
        if (!r.add("nm2", {a, b}, "a^n(b) != b^-1 a b")) return r;
      }
  return r;
}

AxiomReport validate(const NormalMap& nm) {
  AxiomReport r;
  if (nm.map.image.size() != nm.source.order() ||
      nm.action.space().order() != nm.source.order() ||
      nm.action.actor().order() != nm.target.order()) {
    r.add("structure", {}, "map or action does not fit the groups");
    return r;
  }
  r.merge(check_nm1(nm));
  r.merge(check_nm2(nm));
  return r;
}

AxiomReport check_kernel_central(const NormalMap& nm) {
  AxiomReport r;
  const std::size_t na = nm.source.order();
  const Elem e = nm.target.identity();
  for (Elem k = 0; k < na; ++k) {
    if (nm.map(k) != e) continue;
    for (Elem a = 0; a < na; ++a)
      if (nm.source.mul(k, a) != nm.source.mul(a, k)) {
        if (!r.add("kernel-central", {k, a}, "kernel element fails to commute"))
          return r;
      }
  }
  return r;
}

AxiomReport check_image_normal(const NormalMap& nm) {
  AxiomReport r;
  std::vector<Elem> image = nm.map.image;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (Elem v : image)
    for (Elem g = 0; g < nm.target.order(); ++g)
      if (!std::binary_search(image.begin(), image.end(), nm.target.conj(v, g))) {
        if (!r.add("image-normal", {v, g}, "conjugate leaves the image")) return r;
      }
  return r;
}

NormalMap inclusion_crossed_module(const Group& g, const Subgroup& n) {
  {
    Elem h, x;
    if (normality_witness(g, n, h, x))
      throw Error(Errc::NotNormal, "subgroup is not normal", {h, x});
  }
  SubgroupView view = as_group(n);
  Action act = conjugation_action(g, n, view);
  std::string label = view.group.label() + " into " + g.label();
  return NormalMap{view.group, g, view.inclusion, act, std::move(label)};
}

NormalMap trivial_target_crossed_module(const Group& n) {
  for (Elem a = 0; a < n.order(); ++a)
    for (Elem b = 0; b < a; ++b)
      if (n.mul(a, b) != n.mul(b, a))
        throw Error(Errc::NotAbelian, "source must be abelian", {a, b});
  Group one = trivial_group();
  Hom zero{n, one, std::vector<Elem>(n.order(), 0)};
  return NormalMap{n, one, zero, trivial_action(one, n), n.label() + " into 1"};
}

QuotientNormalMapData quotient_normal_map_data(const Group& g, const Subgroup& k,
                                               const Subgroup& m,
                                               const Subgroup& gamma) {
  if (!k.parent.same_as(g) || !m.parent.same_as(g) || !gamma.parent.same_as(g))
    throw std::invalid_argument("quotient_normal_map: subgroups of a different group");

  Elem h, x;
  if (normality_witness(g, k, h, x))
    throw Error(Errc::HypothesisFailed, "K is not normal", {h, x});
  if (normality_witness(g, m, h, x))
    throw Error(Errc::HypothesisFailed, "M is not normal", {h, x});
  if (normality_witness(g, gamma, h, x))
    throw Error(Errc::HypothesisFailed, "Gamma is not normal", {h, x});
  for (Elem v : k.members)
    if (!m.contains(v))
      throw Error(Errc::HypothesisFailed, "K is not contained in M", {v});
  for (Elem v : k.members)
    if (!gamma.contains(v))
      throw Error(Errc::HypothesisFailed, "K is not contained in Gamma", {v});
  for (Elem c : gamma.members)
    for (Elem mm : m.members)
      if (!k.contains(g.commutator(c, mm)))
        throw Error(Errc::HypothesisFailed, "[Gamma, M] is not contained in K",
                    {c, mm});

  SubgroupView gview = as_group(gamma);
  auto locate_in_gamma = [&](Elem parent_elem) {
    auto it =
        std::lower_bound(gamma.members.begin(), gamma.members.end(), parent_elem);
    assert(it != gamma.members.end() && *it == parent_elem);
    return static_cast<Elem>(it - gamma.members.begin());
  };

  std::vector<Elem> k_in_gamma;
  for (Elem v : k.members) k_in_gamma.push_back(locate_in_gamma(v));
  auto [src, src_proj] = quotient(gview.group, Subgroup{gview.group, k_in_gamma});
  auto [tgt, tgt_proj] = quotient(g, m);

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> image(src.order(), kUnset);
  for (Elem a = 0; a < gview.group.order(); ++a) {
    Elem coset = src_proj(a);
    Elem value = tgt_proj(gview.inclusion(a));
    if (image[coset] == kUnset)
      image[coset] = value;
    else if (image[coset] != value)
      throw Error(Errc::HypothesisFailed, "induced map is not well defined", {a});
  }

  std::vector<Elem> flat(tgt.order() * src.order(), kUnset);
  for (Elem a = 0; a < gview.group.order(); ++a)
    for (Elem hh = 0; hh < g.order(); ++hh) {
      Elem conjugate = g.conj(gview.inclusion(a), hh);
      Elem value = src_proj(locate_in_gamma(conjugate));
      Elem& cell = flat[static_cast<std::size_t>(tgt_proj(hh)) * src.order() +
                        src_proj(a)];
      if (cell == kUnset)
        cell = value;
      else if (cell != value)
        throw Error(Errc::HypothesisFailed, "induced action is not well defined",
                    {a, hh});
    }

  std::vector<std::vector<Elem>> tables(tgt.order(),
                                        std::vector<Elem>(src.order()));
  for (Elem gg = 0; gg < tgt.order(); ++gg)
    for (Elem a = 0; a < src.order(); ++a)
      tables[gg][a] = flat[static_cast<std::size_t>(gg) * src.order() + a];
  Action act = action_from_tables_unchecked(tgt, src, std::move(tables));

  std::string label = gview.group.label() + "/" + std::to_string(k.size()) +
                      " into " + tgt.label();
  NormalMap nm{src, tgt, Hom{src, tgt, std::move(image)}, act, std::move(label)};
  return QuotientNormalMapData{std::move(nm), gview.inclusion, src_proj, tgt_proj};
}

NormalMap quotient_normal_map(const Group& g, const Subgroup& k, const Subgroup& m,
                              const Subgroup& gamma) {
  return quotient_normal_map_data(g, k, m, gamma).nm;
}

AxiomReport check_normal_map_iso(const NormalMap& from, const NormalMap& to,
                                 const NormalMapIso& iso) {
  AxiomReport r;
  if (iso.on_source.image.size() != from.source.order() ||
      iso.on_target.image.size() != from.target.order() ||
      from.source.order() != to.source.order() ||
      from.target.order() != to.target.order()) {
    r.add("iso-structure", {}, "maps do not fit the two normal maps");
    return r;
  }

  if (!is_bijective(iso.on_source)) r.add("iso-source-bijective", {}, "");
  if (!is_bijective(iso.on_target)) r.add("iso-target-bijective", {}, "");
  for (const auto& v : check_hom_pairs(iso.on_source).violations)
    if (!r.add("iso-source-" + v.axiom, v.witness, v.note)) return r;
  for (const auto& v : check_hom_pairs(iso.on_target).violations)
    if (!r.add("iso-target-" + v.axiom, v.witness, v.note)) return r;

  const std::size_t na = from.source.order();
  const std::size_t ng = from.target.order();
  for (Elem a = 0; a < na; ++a)
    if (to.map(iso.on_source(a)) != iso.on_target(from.map(a))) {
      if (!r.add("iso-square", {a}, "maps do not commute with the isomorphisms"))
        return r;
    }
  for (Elem a = 0; a < na; ++a)
    for (Elem g = 0; g < ng; ++g)
      if (iso.on_source(from.action.act(a, g)) !=
          to.action.act(iso.on_source(a), iso.on_target(g))) {
        if (!r.add("iso-equivariance", {a, g}, "actions do not correspond")) return r;
      }
  return r;
}

std::vector<Action> search_crossed_structures(const Hom& n,
                                              std::size_t candidate_cap) {
  const Group& src = n.domain;
  const Group& tgt = n.codomain;
  const std::size_t nn = src.order();

  std::vector<std::vector<Elem>> auts = automorphisms(src);

  detail::GeneratorWords gw = detail::generator_words(tgt);
  const std::size_t r = gw.gens.size();

  // for generators in the image, the self-action law pins the automorphism
  // to conjugation by a preimage
  auto conj_table = [&](Elem b) {
    std::vector<Elem> t(nn);
    for (Elem a = 0; a < nn; ++a) t[a] = src.conj(a, b);
    return t;
  };

  std::vector<std::vector<std::size_t>> choices(r);
  for (std::size_t i = 0; i < r; ++i) {
    Elem g = gw.gens[i];
    std::vector<Elem> forced;
    for (Elem b = 0; b < nn; ++b)
      if (n(b) == g) {
        forced = conj_table(b);
        break;
      }
    for (std::size_t ai = 0; ai < auts.size(); ++ai) {
      const auto& alpha = auts[ai];
      bool ok = true;
      for (Elem a = 0; a < nn && ok; ++a)
        ok = n(alpha[a]) == tgt.conj(n(a), g);
      if (ok && !forced.empty()) ok = alpha == forced;
      if (ok) choices[i].push_back(ai);
    }
  }

  std::size_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return {};
    total *= c.size();
    if (total > candidate_cap)
      throw Error(Errc::SearchSpaceTooLarge,
                  "candidate count exceeds cap " + std::to_string(candidate_cap));
  }

  std::vector<Elem> id_table(nn);
  for (Elem a = 0; a < nn; ++a) id_table[a] = a;

  std::vector<std::vector<Elem>> found;
  std::vector<std::size_t> pick(r, 0);
  for (;;) {
    std::vector<const std::vector<Elem>*> assigned(r);
    for (std::size_t i = 0; i < r; ++i) assigned[i] = &auts[choices[i][pick[i]]];

    // extend along words, then verify the extension is a homomorphism into
    // the permutations of the source
    std::vector<std::vector<Elem>> ell(tgt.order());
    ell[tgt.identity()] = id_table;
    for (std::size_t idx = 1; idx < gw.order.size(); ++idx) {
      Elem x = gw.order[idx];
      const auto& p = ell[gw.parent[x]];
      const auto& a = *assigned[gw.via[x]];
      std::vector<Elem> t(nn);
      for (Elem e = 0; e < nn; ++e) t[e] = a[p[e]];
      ell[x] = std::move(t);
    }
    bool consistent = true;
    for (Elem x = 0; x < tgt.order() && consistent; ++x)
      for (std::size_t i = 0; i < r && consistent; ++i) {
        Elem y = tgt.mul(x, gw.gens[i]);
        const auto& p = ell[x];
        const auto& a = *assigned[i];
        for (Elem e = 0; e < nn; ++e)
          if (ell[y][e] != a[p[e]]) {
            consistent = false;
            break;
          }
      }

    if (consistent) {
      std::vector<Elem> flat(tgt.order() * nn);
      for (Elem x = 0; x < tgt.order(); ++x)
        for (Elem a = 0; a < nn; ++a)
          flat[static_cast<std::size_t>(x) * nn + a] = ell[x][a];
      std::vector<std::vector<Elem>> tables(tgt.order());
      for (Elem x = 0; x < tgt.order(); ++x)
        tables[x].assign(flat.begin() + static_cast<std::size_t>(x) * nn,
                         flat.begin() + static_cast<std::size_t>(x + 1) * nn);
      Action act = action_from_tables_unchecked(tgt, src, std::move(tables));
      NormalMap nm{src, tgt, n, act, "search candidate"};
      if (validate(nm).ok() && check_action_generators(act).ok())
        found.push_back(std::move(flat));
    }

    if (r == 0) break;
    std::size_t i = 0;
    while (i < r && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == r) break;
  }

  std::sort(found.begin(), found.end());
  std::vector<Action> out;
  for (const auto& flat : found) {
    std::vector<std::vector<Elem>> tables(tgt.order());
    for (Elem x = 0; x < tgt.order(); ++x)
      tables[x].assign(flat.begin() + static_cast<std::size_t>(x) * nn,
                       flat.begin() + static_cast<std::size_t>(x + 1) * nn);
    out.push_back(action_from_tables_unchecked(tgt, src, std::move(tables)));
  }
  return out;
}

}  // namespace crossmod
