#include "crossmod/realize.hpp"

#include <algorithm>
#include <iterator>
#include <memory>
#include <utility>

namespace crossmod {

namespace {

constexpr Elem kUnset = ~Elem{0};

class ComponentwiseActionImpl final : public ActionImpl {
 public:
  ComponentwiseActionImpl(Group actor, Group space, Group n, Action base,
                          std::size_t width)
      : ActionImpl(std::move(actor), std::move(space)),
        n_(std::move(n)),
        base_(std::move(base)),
        width_(width) {}

  Elem act(Elem a, Elem g) const override {
    std::vector<Elem> t = bar_nn_coords(n_, width_ - 1, a);
    for (Elem& c : t) c = base_.act(c, g);
    return bar_nn_pack(n_, t);
  }

 private:
  Group n_;
  Action base_;
  std::size_t width_;
};

Elem first_difference(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  return diff.empty() ? Elem{0} : diff.front();
}

void merge_tagged(AxiomReport& into, const AxiomReport& from) {
  for (const Violation& v : from.violations)
    if (!into.add(v.axiom, v.witness, v.note)) return;
  if (from.truncated) into.truncated = true;
}

}  // namespace

Action level_action(const NormalMap& nm, const Group& tuple_level, std::size_t k) {
  Action a(std::make_shared<ComponentwiseActionImpl>(nm.target, tuple_level,
                                                     nm.source, nm.action, k + 1));
  AxiomReport r = check_action_generators(a);
  if (!r.ok())
    throw Error(Errc::NotAutomorphism,
                "componentwise action fails: " + r.violations.front().axiom,
                r.violations.front().witness);
  return a;
}

SimplicialGroup ambient_simplicial(const NormalMap& nm, std::size_t depth) {
  SimplicialGroup tuples = bar_nn(nm.source, depth);

  SimplicialGroup sg;
  sg.depth = static_cast<int>(depth);
  sg.level.reserve(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k)
    sg.level.push_back(semidirect_product(
        nm.target, tuples.level[k], level_action(nm, tuples.level[k], k)));
  sg.face.resize(depth + 1);
  sg.degen.resize(depth + 1);

  auto lift = [&](const Hom& tuple_map, const Group& from, const Group& to) {
    const std::size_t span_from = tuple_map.domain.order();
    const std::size_t span_to = tuple_map.codomain.order();
    std::vector<Elem> img(from.order());
    for (Elem x = 0; x < img.size(); ++x)
      img[x] = static_cast<Elem>((x / span_from) * span_to +
                                 tuple_map(static_cast<Elem>(x % span_from)));
    return hom_unchecked(from, to, std::move(img));
  };

  for (std::size_t k = 1; k <= depth; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      sg.face[k].push_back(
          lift(tuples.face[k][i], sg.level[k], sg.level[k - 1]));
  for (std::size_t k = 0; k < depth; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      sg.degen[k].push_back(
          lift(tuples.degen[k][i], sg.level[k], sg.level[k + 1]));

  return sg;
}

SimplicialHom bar_projection(const NormalMap& nm, const SimplicialGroup& ambient,
                             const SimplicialGroup& mapped) {
  const Group& n = nm.source;
  const Group& g = nm.target;

  SimplicialHom h{ambient, mapped, {}};
  for (std::size_t k = 0; k <= static_cast<std::size_t>(ambient.depth); ++k) {
    const std::size_t tuple_span = ambient.level[k].order() / g.order();
    std::vector<Elem> img(ambient.level[k].order());
    for (Elem x = 0; x < img.size(); ++x) {
      std::vector<Elem> t =
          bar_nn_coords(n, k, static_cast<Elem>(x % tuple_span));
      Elem base = g.mul(static_cast<Elem>(x / tuple_span), nm.map(t[0]));
      img[x] = bar_gn_pack(nm, base, std::span<const Elem>(t).subspan(1));
    }
    h.map.push_back(hom_unchecked(ambient.level[k], mapped.level[k], std::move(img)));
  }

  AxiomReport r = check_simplicial_hom(h);
  if (!r.ok())
    throw Error(Errc::HomCheckFailed,
                "projection is not a simplicial homomorphism: " +
                    r.violations.front().axiom,
                r.violations.front().witness);
  return h;
}

KernelResult projection_kernel(const NormalMap& nm, const SimplicialHom& projection) {
  KernelResult kr = levelwise_kernel(projection);
  const Group& n = nm.source;

  for (std::size_t k = 0; k <= static_cast<std::size_t>(projection.source.depth);
       ++k) {
    const std::size_t tuple_span =
        projection.source.level[k].order() / nm.target.order();
    std::vector<Elem> expected;
    expected.reserve(n.order());
    std::vector<Elem> t(k + 1);
    for (Elem a = 0; a < n.order(); ++a) {
      t.assign(k + 1, static_cast<Elem>(n.identity()));
      t[0] = n.inv(a);
      expected.push_back(
          static_cast<Elem>(nm.map(a) * tuple_span + bar_nn_pack(n, t)));
    }
    std::sort(expected.begin(), expected.end());
    const std::vector<Elem>& actual = kr.inclusion.map[k].image;
    if (actual != expected)
      throw Error(Errc::ClosedFormMismatch,
                  "kernel level " + std::to_string(k) +
                      " differs from the closed form",
                  {static_cast<Elem>(k), first_difference(actual, expected)});
  }
  return kr;
}

bool Realization::ok() const {
  for (const NamedCheck& c : checks)
    if (!c.passed()) return false;
  return true;
}

const NamedCheck* Realization::find(std::string_view name) const {
  for (const NamedCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Realization realize(const NormalMap& nm, std::size_t depth) {
  if (depth < 1)
    throw Error(Errc::TruncationTooShallow,
                "the component computations need level one");
  {
    AxiomReport v = validate(nm);
    if (!v.ok())
      throw Error(Errc::HypothesisFailed,
                  "input fails the normal map axioms: " + v.violations.front().axiom,
                  v.violations.front().witness);
  }

  Realization r;
  r.input = nm;
  r.ambient = ambient_simplicial(nm, depth);
  r.mapped = bar_gn(nm, depth);
  r.projection = bar_projection(nm, r.ambient, r.mapped);
  KernelResult kr = projection_kernel(nm, r.projection);
  r.inner = std::move(kr.kernel);
  r.inclusion = std::move(kr.inclusion);

  const Group& n = nm.source;
  const Group& g = nm.target;
  const std::size_t nn = n.order();
  const Group& ambient0 = r.ambient.level[0];
  const Group& inner0 = r.inner.level[0];

  {
    NamedCheck c{"inner-normal-levelwise"};
    for (std::size_t k = 0; k <= depth; ++k) {
      Subgroup img{r.ambient.level[k], r.inclusion.map[k].image};
      if (!is_normal_under_generators(r.ambient.level[k], img)) {
        Elem h = 0, x = 0;
        normality_witness(r.ambient.level[k], img, h, x);
        if (!c.report.add("inner-normal", {static_cast<Elem>(k), h, x},
                          "kernel level is not normal in the ambient level"))
          break;
      }
    }
    r.checks.push_back(std::move(c));
  }

  {
    NamedCheck c{"inner-discrete-at-level1"};
    if (!is_discrete_at_level1(r.inner))
      c.report.add("inner-discrete", {},
                   "the two faces out of level one disagree on the kernel");
    r.checks.push_back(std::move(c));
  }

  {
    NamedCheck c{"ambient-identity-component"};
    Subgroup comp = identity_component(r.ambient);
    std::vector<Elem> expected;
    expected.reserve(nn);
    for (Elem t = 0; t < nn; ++t)
      expected.push_back(static_cast<Elem>(g.identity() * nn + t));
    if (comp.members != expected)
      c.report.add("ambient-identity-component",
                   {first_difference(comp.members, expected)},
                   "component differs from the unit-base slice");
    r.checks.push_back(std::move(c));
  }

  r.pi0_ambient = pi0(r.ambient);
  r.pi0_inner = pi0(r.inner);

  {
    NamedCheck c{"pi0-ambient-iso-target"};
    std::vector<Elem> image(r.pi0_ambient.group.order(), kUnset);
    for (Elem x = 0; x < ambient0.order(); ++x) {
      Elem cls = r.pi0_ambient.projection(x);
      Elem base = static_cast<Elem>(x / nn);
      if (image[cls] == kUnset) {
        image[cls] = base;
      } else if (image[cls] != base) {
        if (!c.report.add("pi0-ambient-welldef", {x},
                          "component class mixes base coordinates"))
          break;
      }
    }
    for (Elem& v : image)
      if (v == kUnset) v = static_cast<Elem>(g.identity());
    r.pi0_ambient_to_target = Hom{r.pi0_ambient.group, g, std::move(image)};
    if (!is_bijective(r.pi0_ambient_to_target))
      c.report.add("pi0-ambient-bijective", {}, "the identification is not a bijection");
    merge_tagged(c.report, check_hom_pairs(r.pi0_ambient_to_target));
    r.checks.push_back(std::move(c));
  }

  {
    NamedCheck c{"pi0-inner-iso-source"};
    if (r.pi0_inner.component_of_identity.size() != 1)
      c.report.add("pi0-inner-discrete", {},
                   "kernel components are not single elements");
    std::vector<Elem> image(r.pi0_inner.group.order(), kUnset);
    for (Elem i = 0; i < inner0.order(); ++i) {
      Elem cls = r.pi0_inner.projection(i);
      Elem a = n.inv(static_cast<Elem>(r.inclusion.map[0](i) % nn));
      if (image[cls] == kUnset) {
        image[cls] = a;
      } else if (image[cls] != a) {
        if (!c.report.add("pi0-inner-welldef", {i},
                          "component class mixes source elements"))
          break;
      }
    }
    for (Elem& v : image)
      if (v == kUnset) v = static_cast<Elem>(n.identity());
    r.pi0_inner_to_source = Hom{r.pi0_inner.group, n, std::move(image)};
    if (!is_bijective(r.pi0_inner_to_source))
      c.report.add("pi0-inner-bijective", {}, "the identification is not a bijection");
    merge_tagged(c.report, check_hom_pairs(r.pi0_inner_to_source));
    r.checks.push_back(std::move(c));
  }

  {
    NamedCheck c{"pi0-square-commutes"};
    for (Elem i = 0; i < inner0.order(); ++i) {
      Elem through_source =
          nm.map(r.pi0_inner_to_source(r.pi0_inner.projection(i)));
      Elem through_ambient = r.pi0_ambient_to_target(
          r.pi0_ambient.projection(r.inclusion.map[0](i)));
      if (through_source != through_ambient)
        if (!c.report.add("pi0-square", {i}, "the two routes to the target disagree"))
          break;
    }
    r.checks.push_back(std::move(c));
  }

  {
    NamedCheck c{"moore-pi1-trivial"};
    if (depth < 2) {
      c.ran = false;
      c.skip_reason = "needs depth at least two";
    } else {
      Group ambient_pi1 = moore_pi_n(r.ambient, 1);
      if (ambient_pi1.order() != 1)
        c.report.add("ambient-pi1", {static_cast<Elem>(ambient_pi1.order())},
                     "first homotopy of the ambient object is not trivial");
      Group inner_pi1 = moore_pi_n(r.inner, 1);
      if (inner_pi1.order() != 1)
        c.report.add("inner-pi1", {static_cast<Elem>(inner_pi1.order())},
                     "first homotopy of the kernel is not trivial");
    }
    r.checks.push_back(std::move(c));
  }

  return r;
}

AxiomReport verify_roundtrip(const NormalMap& nm, const Realization& r) {
  if (!r.ok())
    throw Error(Errc::RoundTripFailed, "realization has failing checks");

  InducedPi0Map induced = induced_pi0_map_data(r.inclusion);

  AxiomReport rep;
  const Group& n = nm.source;
  const Group& g = nm.target;
  const std::size_t nn = n.order();
  const Group& inner0 = r.inner.level[0];
  const Group& ambient0 = r.ambient.level[0];

  std::vector<Elem> src(induced.nm.source.order(), kUnset);
  for (Elem i = 0; i < inner0.order(); ++i) {
    Elem cls = induced.source_projection(i);
    Elem a = n.inv(static_cast<Elem>(r.inclusion.map[0](i) % nn));
    if (src[cls] == kUnset) {
      src[cls] = a;
    } else if (src[cls] != a) {
      if (!rep.add("roundtrip-source-identification", {i},
                   "class mixes source elements"))
        return rep;
    }
  }
  for (Elem& v : src)
    if (v == kUnset) v = static_cast<Elem>(n.identity());

  std::vector<Elem> tgt(induced.nm.target.order(), kUnset);
  for (Elem x = 0; x < ambient0.order(); ++x) {
    Elem cls = induced.target_projection(x);
    Elem base = static_cast<Elem>(x / nn);
    if (tgt[cls] == kUnset) {
      tgt[cls] = base;
    } else if (tgt[cls] != base) {
      if (!rep.add("roundtrip-target-identification", {x},
                   "class mixes base coordinates"))
        return rep;
    }
  }
  for (Elem& v : tgt)
    if (v == kUnset) v = static_cast<Elem>(g.identity());

  NormalMapIso iso{Hom{induced.nm.source, n, std::move(src)},
                   Hom{induced.nm.target, g, std::move(tgt)}};
  merge_tagged(rep, check_normal_map_iso(induced.nm, nm, iso));
  return rep;
}

}  // namespace crossmod
