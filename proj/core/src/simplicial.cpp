#include "crossmod/simplicial.hpp"

#include <algorithm>
#include <cassert>

namespace crossmod {

namespace {

void assert_shape(const SimplicialGroup& sg) {
  assert(sg.depth >= 0);
  assert(sg.level.size() == static_cast<std::size_t>(sg.depth) + 1);
  assert(sg.face.size() == sg.level.size());
  assert(sg.degen.size() == sg.level.size());
  for (int k = 1; k <= sg.depth; ++k)
    assert(sg.face[k].size() == static_cast<std::size_t>(k) + 1);
  for (int k = 0; k < sg.depth; ++k)
    assert(sg.degen[k].size() == static_cast<std::size_t>(k) + 1);
}

std::vector<Elem> kernel_members(const Hom& f) {
  std::vector<Elem> out;
  const Elem e = f.codomain.identity();
  for (Elem x = 0; x < f.domain.order(); ++x)
    if (f(x) == e) out.push_back(x);
  return out;
}

// members of the normalized chain group at level k
std::vector<Elem> chain_members(const SimplicialGroup& sg, int k) {
  if (k == 0) return full_subgroup(sg.level[0]).members;
  std::vector<Elem> out;
  const std::size_t n = sg.level[k].order();
  for (Elem x = 0; x < n; ++x) {
    bool in = true;
    for (int i = 1; i <= k && in; ++i)
      in = sg.d(k, i)(x) == sg.level[k - 1].identity();
    if (in) out.push_back(x);
  }
  return out;
}

std::vector<Elem> boundary_image(const SimplicialGroup& sg, int k,
                                 const std::vector<Elem>& chain) {
  std::vector<Elem> out;
  for (Elem x : chain) out.push_back(sg.d(k, 0)(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SimplicialGroup constant_simplicial(const Group& g, int depth) {
  assert(depth >= 0);
  SimplicialGroup sg;
  sg.depth = depth;
  sg.level.assign(depth + 1, g);
  sg.face.resize(depth + 1);
  sg.degen.resize(depth + 1);
  for (int k = 1; k <= depth; ++k) sg.face[k].assign(k + 1, identity_hom(g));
  for (int k = 0; k < depth; ++k) sg.degen[k].assign(k + 1, identity_hom(g));
  return sg;
}

AxiomReport check_simplicial_identities(const SimplicialGroup& sg) {
  assert_shape(sg);
  AxiomReport r;
  const int K = sg.depth;

  for (int k = 0; k <= K; ++k)
    if (!generates(sg.level[k], sg.level[k].generators())) {
      r.add("generators", {static_cast<Elem>(k)},
            "stored generators do not generate the level");
      return r;
    }

  auto hom_on_generators = [&](const Hom& f, const char* tag, int k, int i) {
    const Group& dom = f.domain;
    const Group& cod = f.codomain;
    if (f(dom.identity()) != cod.identity())
      if (!r.add(tag, {static_cast<Elem>(k), static_cast<Elem>(i), dom.identity(),
                       dom.identity()},
                 "identity is not preserved"))
        return;
    for (Elem x = 0; x < dom.order(); ++x)
      for (Elem s : dom.generators())
        if (f(dom.mul(x, s)) != cod.mul(f(x), f(s))) {
          if (!r.add(tag, {static_cast<Elem>(k), static_cast<Elem>(i), x, s},
                     "f(xs) != f(x)f(s)"))
            return;
        }
  };

  for (int k = 1; k <= K; ++k)
    for (int i = 0; i <= k; ++i) hom_on_generators(sg.d(k, i), "face-hom", k, i);
  for (int k = 0; k < K; ++k)
    for (int i = 0; i <= k; ++i) hom_on_generators(sg.s(k, i), "degen-hom", k, i);
  if (!r.ok()) return r;

  // d_i then d_j-1 = d_j then d_i for i < j
  for (int k = 2; k <= K; ++k)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j <= k; ++j)
        for (Elem x = 0; x < sg.level[k].order(); ++x)
          if (sg.d(k - 1, j - 1)(sg.d(k, i)(x)) != sg.d(k - 1, i)(sg.d(k, j)(x))) {
            if (!r.add("dd",
                       {static_cast<Elem>(k), static_cast<Elem>(i),
                        static_cast<Elem>(j), x},
                       "double face identity fails"))
              return r;
          }

  // s_j then s_i = s_i then s_j+1 for i <= j
  for (int k = 0; k + 2 <= K; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        for (Elem x = 0; x < sg.level[k].order(); ++x)
          if (sg.s(k + 1, i)(sg.s(k, j)(x)) != sg.s(k + 1, j + 1)(sg.s(k, i)(x))) {
            if (!r.add("ss",
                       {static_cast<Elem>(k), static_cast<Elem>(i),
                        static_cast<Elem>(j), x},
                       "double degeneracy identity fails"))
              return r;
          }

  // s_j then d_i, all three ranges
  for (int k = 0; k < K; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= k + 1; ++i)
        for (Elem x = 0; x < sg.level[k].order(); ++x) {
          Elem lhs = sg.d(k + 1, i)(sg.s(k, j)(x));
          Elem rhs;
          if (i == j || i == j + 1)
            rhs = x;
          else if (i < j)
            rhs = sg.s(k - 1, j - 1)(sg.d(k, i)(x));
          else
            rhs = sg.s(k - 1, j)(sg.d(k, i - 1)(x));
          if (lhs != rhs) {
            if (!r.add("ds",
                       {static_cast<Elem>(k), static_cast<Elem>(i),
                        static_cast<Elem>(j), x},
                       "face of a degeneracy fails"))
              return r;
          }
        }
  return r;
}

AxiomReport check_simplicial_hom(const SimplicialHom& f) {
  assert(f.source.depth == f.target.depth);
  assert(f.map.size() == f.source.level.size());
  AxiomReport r;
  const int K = f.source.depth;

  for (int k = 0; k <= K; ++k) {
    const Group& dom = f.source.level[k];
    const Group& cod = f.target.level[k];
    if (!generates(dom, dom.generators())) {
      r.add("generators", {static_cast<Elem>(k)},
            "stored generators do not generate the level");
      return r;
    }
    const Hom& m = f.map[k];
    if (m(dom.identity()) != cod.identity())
      if (!r.add("level-identity", {static_cast<Elem>(k)},
                 "identity is not preserved"))
        return r;
    for (Elem x = 0; x < dom.order(); ++x)
      for (Elem s : dom.generators())
        if (m(dom.mul(x, s)) != cod.mul(m(x), m(s))) {
          if (!r.add("level-hom", {static_cast<Elem>(k), x, s}, "f(xs) != f(x)f(s)"))
            return r;
        }
  }

  for (int k = 1; k <= K; ++k)
    for (int i = 0; i <= k; ++i)
      for (Elem x = 0; x < f.source.level[k].order(); ++x)
        if (f.map[k - 1](f.source.d(k, i)(x)) != f.target.d(k, i)(f.map[k](x))) {
          if (!r.add("face-square", {static_cast<Elem>(k), static_cast<Elem>(i), x},
                     "face square does not commute"))
            return r;
        }
  for (int k = 0; k < K; ++k)
    for (int i = 0; i <= k; ++i)
      for (Elem x = 0; x < f.source.level[k].order(); ++x)
        if (f.map[k + 1](f.source.s(k, i)(x)) != f.target.s(k, i)(f.map[k](x))) {
          if (!r.add("degen-square", {static_cast<Elem>(k), static_cast<Elem>(i), x},
                     "degeneracy square does not commute"))
            return r;
        }
  return r;
}

KernelResult levelwise_kernel(const SimplicialHom& f) {
  assert_shape(f.source);
  const int K = f.source.depth;

  std::vector<SubgroupView> views;
  std::vector<std::vector<Elem>> members;
  for (int k = 0; k <= K; ++k) {
    members.push_back(kernel_members(f.map[k]));
    if (members.back().empty())
      throw Error(Errc::RestrictionEscapesKernel,
                  "level map misses the identity at level " + std::to_string(k));
    views.push_back(as_group(Subgroup{f.source.level[k], members.back()}));
  }

  auto restrict_map = [&](const Hom& big, int from, int to) {
    std::vector<Elem> image;
    image.reserve(members[from].size());
    for (Elem m : members[from]) {
      Elem y = big(m);
      auto it = std::lower_bound(members[to].begin(), members[to].end(), y);
      if (it == members[to].end() || *it != y)
        throw Error(Errc::RestrictionEscapesKernel,
                    "map does not restrict to the kernel",
                    {static_cast<Elem>(from), m});
      image.push_back(static_cast<Elem>(it - members[to].begin()));
    }
    return Hom{views[from].group, views[to].group, std::move(image)};
  };

  SimplicialGroup kernel;
  kernel.depth = K;
  for (const auto& v : views) kernel.level.push_back(v.group);
  kernel.face.resize(K + 1);
  kernel.degen.resize(K + 1);
  for (int k = 1; k <= K; ++k)
    for (int i = 0; i <= k; ++i)
      kernel.face[k].push_back(restrict_map(f.source.d(k, i), k, k - 1));
  for (int k = 0; k < K; ++k)
    for (int i = 0; i <= k; ++i)
      kernel.degen[k].push_back(restrict_map(f.source.s(k, i), k, k + 1));

  SimplicialHom inclusion;
  inclusion.source = kernel;
  inclusion.target = f.source;
  for (int k = 0; k <= K; ++k) inclusion.map.push_back(views[k].inclusion);
  return KernelResult{std::move(kernel), std::move(inclusion)};
}

Subgroup identity_component(const SimplicialGroup& sg) {
  assert(sg.depth >= 1);
  const Group& g0 = sg.level[0];
  const Group& g1 = sg.level[1];
  std::vector<char> mark(g0.order(), 0);
  std::vector<Elem> gens;
  for (Elem y = 0; y < g1.order(); ++y) {
    Elem v = g0.mul(g0.inv(sg.d(1, 0)(y)), sg.d(1, 1)(y));
    if (!mark[v]) {
      mark[v] = 1;
      gens.push_back(v);
    }
  }
  Subgroup component = subgroup_generated(g0, gens);
  Elem h, x;
  if (normality_witness(g0, component, h, x))
    throw Error(Errc::ComponentNotNormal,
                "identity component is not normal in level 0", {h, x});
  return component;
}

ComponentGroup pi0(const SimplicialGroup& sg) {
  Subgroup component = identity_component(sg);
  auto [group, projection] = quotient(sg.level[0], component);
  return ComponentGroup{group, projection, component};
}

bool is_discrete_at_level1(const SimplicialGroup& sg) {
  assert(sg.depth >= 1);
  return sg.d(1, 0).image == sg.d(1, 1).image;
}

Group moore_pi_n(const SimplicialGroup& sg, int n) {
  assert(n >= 0);
  if (sg.depth < n + 1)
    throw Error(Errc::TruncationTooShallow,
                "homotopy at index " + std::to_string(n) + " needs depth " +
                    std::to_string(n + 1));

  std::vector<Elem> chain_n = chain_members(sg, n);
  std::vector<Elem> chain_n1 = chain_members(sg, n + 1);
  std::vector<Elem> image = boundary_image(sg, n + 1, chain_n1);

  if (n == 0) {
    for (Elem v : image)
      if (!std::binary_search(chain_n.begin(), chain_n.end(), v))
        throw Error(Errc::RestrictionEscapesKernel,
                    "boundary image leaves the chain group", {v});
    return quotient(sg.level[0], Subgroup{sg.level[0], image}).group;
  }

  std::vector<Elem> cycles;
  const Elem e = sg.level[n - 1].identity();
  for (Elem x : chain_n)
    if (sg.d(n, 0)(x) == e) cycles.push_back(x);

  SubgroupView view = as_group(Subgroup{sg.level[n], cycles});
  std::vector<Elem> image_in_view;
  for (Elem v : image) {
    auto it = std::lower_bound(cycles.begin(), cycles.end(), v);
    if (it == cycles.end() || *it != v)
      throw Error(Errc::RestrictionEscapesKernel,
                  "boundary image is not made of cycles", {v});
    image_in_view.push_back(static_cast<Elem>(it - cycles.begin()));
  }
  return quotient(view.group, Subgroup{view.group, image_in_view}).group;
}

AxiomReport check_pi0_against_moore(const SimplicialGroup& sg) {
  AxiomReport r;

  Subgroup component{sg.level[0], {}};
  try {
    component = identity_component(sg);
  } catch (const Error& e) {
    r.add("component-vs-boundary", e.witness(), e.what());
    return r;
  }

  std::vector<Elem> chain1 = chain_members(sg, 1);
  std::vector<Elem> image = boundary_image(sg, 1, chain1);

  if (component.members != image) {
    for (Elem v : component.members)
      if (!std::binary_search(image.begin(), image.end(), v)) {
        r.add("component-vs-boundary", {v},
              "generated component element missing from the boundary image");
        return r;
      }
    for (Elem v : image)
      if (!component.contains(v)) {
        r.add("component-vs-boundary", {v},
              "boundary image element missing from the generated component");
        return r;
      }
  }

  auto [pq, pproj] = quotient(sg.level[0], component);
  auto [mq, mproj] = quotient(sg.level[0], Subgroup{sg.level[0], image});

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> iso(pq.order(), kUnset);
  for (Elem x = 0; x < sg.level[0].order(); ++x) {
    Elem c = pproj(x);
    if (iso[c] == kUnset) iso[c] = mproj(x);
  }
  Hom phi{pq, mq, iso};
  for (Elem x = 0; x < sg.level[0].order(); ++x)
    if (phi(pproj(x)) != mproj(x)) {
      if (!r.add("pi0-moore-iso", {x}, "projections disagree through the map"))
        return r;
    }
  if (!is_bijective(phi)) r.add("pi0-moore-iso", {}, "the map is not a bijection");
  for (const auto& v : check_hom_pairs(phi).violations)
    if (!r.add("pi0-moore-iso", v.witness, v.note)) return r;
  return r;
}

NormalMap induced_pi0_map(const SimplicialHom& inclusion) {
  return induced_pi0_map_data(inclusion).nm;
}

InducedPi0Map induced_pi0_map_data(const SimplicialHom& inclusion) {
  const SimplicialGroup& inner = inclusion.source;
  const SimplicialGroup& ambient = inclusion.target;
  assert(inner.depth == ambient.depth && inner.depth >= 1);

  {
    AxiomReport shape = check_simplicial_hom(inclusion);
    if (!shape.ok())
      throw Error(Errc::HypothesisFailed,
                  "inclusion is not a simplicial homomorphism: " +
                      shape.violations.front().axiom,
                  shape.violations.front().witness);
  }
  for (int k = 0; k <= inner.depth; ++k) {
    std::vector<char> seen(ambient.level[k].order(), 0);
    for (Elem x = 0; x < inner.level[k].order(); ++x) {
      Elem y = inclusion.map[k](x);
      if (seen[y])
        throw Error(Errc::HypothesisFailed,
                    "inclusion is not levelwise injective", {static_cast<Elem>(k), x});
      seen[y] = 1;
    }
    std::vector<Elem> img = inclusion.map[k].image;
    std::sort(img.begin(), img.end());
    if (!is_normal_under_generators(ambient.level[k], Subgroup{ambient.level[k], img}))
      throw Error(Errc::HypothesisFailed,
                  "image is not normal at level " + std::to_string(k));
  }

  Subgroup v_ambient = identity_component(ambient);
  Subgroup v_inner = identity_component(inner);

  std::vector<Elem> v_pushed;
  for (Elem v : v_inner.members) v_pushed.push_back(inclusion.map[0](v));
  std::sort(v_pushed.begin(), v_pushed.end());

  std::vector<Elem> gamma = inclusion.map[0].image;
  std::sort(gamma.begin(), gamma.end());

  const Group& x0 = ambient.level[0];
  QuotientNormalMapData data =
      quotient_normal_map_data(x0, Subgroup{x0, v_pushed}, v_ambient,
                               Subgroup{x0, gamma});

  // refine the source from (pushed level 0)/V to pi0 of the inner object
  ComponentGroup p0 = pi0(inner);
  auto locate_gamma = [&](Elem parent_elem) {
    auto it = std::lower_bound(gamma.begin(), gamma.end(), parent_elem);
    assert(it != gamma.end() && *it == parent_elem);
    return static_cast<Elem>(it - gamma.begin());
  };

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> psi_image(p0.group.order(), kUnset);
  for (Elem m = 0; m < inner.level[0].order(); ++m) {
    Elem c = p0.projection(m);
    Elem value = data.source_projection(locate_gamma(inclusion.map[0](m)));
    if (psi_image[c] == kUnset)
      psi_image[c] = value;
    else if (psi_image[c] != value)
      throw Error(Errc::HypothesisFailed, "source refinement is not well defined",
                  {m});
  }
  Hom psi{p0.group, data.nm.source, psi_image};
  if (!is_bijective(psi) || !check_hom_pairs(psi).ok())
    throw Error(Errc::HypothesisFailed,
                "source refinement is not an isomorphism");

  std::vector<Elem> psi_inv(data.nm.source.order());
  for (Elem c = 0; c < p0.group.order(); ++c) psi_inv[psi(c)] = c;

  Hom map = compose(psi, data.nm.map);
  std::vector<std::vector<Elem>> tables(data.nm.target.order(),
                                        std::vector<Elem>(p0.group.order()));
  for (Elem gbar = 0; gbar < data.nm.target.order(); ++gbar)
    for (Elem a = 0; a < p0.group.order(); ++a)
      tables[gbar][a] = psi_inv[data.nm.action.act(psi(a), gbar)];
  Action act = action_from_tables_unchecked(data.nm.target, p0.group,
                                            std::move(tables));

  NormalMap nm{p0.group, data.nm.target, std::move(map), std::move(act),
               "pi0 of " + inner.level[0].label() + " into pi0 of " +
                   ambient.level[0].label()};
  return InducedPi0Map{std::move(nm), std::move(p0.projection),
                       std::move(data.target_projection)};
}

}  // namespace crossmod
