#include "crossmod/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "words.hpp"

namespace crossmod {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotABijection: return "NotABijection";
    case Errc::ClosureTooLarge: return "ClosureTooLarge";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::HomCheckFailed: return "HomCheckFailed";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::RestrictionEscapesKernel: return "RestrictionEscapesKernel";
    case Errc::ComponentNotNormal: return "ComponentNotNormal";
    case Errc::TruncationTooShallow: return "TruncationTooShallow";
    case Errc::ClosedFormMismatch: return "ClosedFormMismatch";
    case Errc::RoundTripFailed: return "RoundTripFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownEntry: return "UnknownEntry";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string detail, std::vector<Elem> witness)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      witness_(std::move(witness)) {}

bool AxiomReport::add(std::string axiom, std::vector<Elem> witness, std::string note) {
  if (violations.size() >= kMaxViolations) {
    truncated = true;
    return false;
  }
  violations.push_back({std::move(axiom), std::move(witness), std::move(note)});
  return violations.size() < kMaxViolations;
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& v : other.violations) {
    if (violations.size() >= kMaxViolations) {
      truncated = true;
      return;
    }
    violations.push_back(v);
  }
  truncated = truncated || other.truncated;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

constexpr Elem kUnset = ~Elem{0};

template <typename MulFn>
std::vector<Elem> greedy_generators(std::size_t order, Elem identity, MulFn&& mul) {
  std::vector<char> in(order, 0);
  in[identity] = 1;
  std::size_t have = 1;
  std::vector<Elem> gens;
  std::vector<Elem> queue;
  for (Elem x = 0; x < order && have < order; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    queue.clear();
    for (Elem y = 0; y < order; ++y)
      if (in[y]) queue.push_back(y);
    while (!queue.empty()) {
      Elem y = queue.back();
      queue.pop_back();
      for (Elem s : gens) {
        Elem z = mul(y, s);
        if (!in[z]) {
          in[z] = 1;
          ++have;
          queue.push_back(z);
        }
      }
    }
  }
  return gens;
}

class TableGroupImpl final : public GroupImpl {
 public:
  TableGroupImpl(std::vector<Elem> table, std::size_t n, Elem id,
                 std::vector<Elem> inverse, std::vector<Elem> gens, std::string label)
      : n_(n), id_(id), table_(std::move(table)), inv_(std::move(inverse)) {
    gens_ = std::move(gens);
    label_ = std::move(label);
  }

  std::size_t order() const override { return n_; }
  Elem identity() const override { return id_; }
  Elem mul(Elem x, Elem y) const override { return table_[x * n_ + y]; }
  Elem inv(Elem x) const override { return inv_[x]; }

 private:
  std::size_t n_;
  Elem id_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
};

// Builds a table group from a table already known to satisfy the axioms.
Group make_table_group_trusted(std::vector<Elem> table, std::size_t n, Elem id,
                               std::vector<Elem> hint_gens, std::string label) {
  std::vector<Elem> inverse(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (table[x * n + y] == id) {
        inverse[x] = y;
        break;
      }
    }
  }
  auto mul = [&](Elem x, Elem y) { return table[x * n + y]; };
  std::vector<Elem> gens = std::move(hint_gens);
  {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::erase(gens, id);
    std::vector<char> in(n, 0);
    in[id] = 1;
    std::size_t have = 1;
    std::vector<Elem> queue(gens.begin(), gens.end());
    for (Elem s : gens)
      if (!in[s]) {
        in[s] = 1;
        ++have;
      }
    while (!queue.empty()) {
      Elem y = queue.back();
      queue.pop_back();
      for (Elem s : gens) {
        Elem z = mul(y, s);
        if (!in[z]) {
          in[z] = 1;
          ++have;
          queue.push_back(z);
        }
      }
    }
    if (have != n) gens = greedy_generators(n, id, mul);
  }
  return Group(std::make_shared<TableGroupImpl>(std::move(table), n, id,
                                                std::move(inverse), std::move(gens),
                                                std::move(label)));
}

using Perm = std::vector<Elem>;

Perm compose_perm(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm invert_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Elem>(i);
  return r;
}

class PermGroupImpl final : public GroupImpl {
 public:
  PermGroupImpl(std::vector<Perm> elems, std::map<Perm, Elem> index,
                std::vector<Elem> gens, std::string label)
      : elems_(std::move(elems)), index_(std::move(index)) {
    gens_ = std::move(gens);
    label_ = std::move(label);
  }

  std::size_t order() const override { return elems_.size(); }
  Elem identity() const override { return 0; }
  Elem mul(Elem x, Elem y) const override {
    return index_.at(compose_perm(elems_[x], elems_[y]));
  }
  Elem inv(Elem x) const override { return index_.at(invert_perm(elems_[x])); }

 private:
  std::vector<Perm> elems_;
  std::map<Perm, Elem> index_;
};

class SubgroupGroupImpl final : public GroupImpl {
 public:
  SubgroupGroupImpl(Group parent, std::vector<Elem> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    id_ = locate(parent_.identity());
    auto mul_fn = [this](Elem x, Elem y) { return mul(x, y); };
    gens_ = greedy_generators(members_.size(), id_, mul_fn);
    label_ = parent_.label() + "[" + std::to_string(members_.size()) + "]";
  }

  std::size_t order() const override { return members_.size(); }
  Elem identity() const override { return id_; }
  Elem mul(Elem x, Elem y) const override {
    return locate(parent_.mul(members_[x], members_[y]));
  }
  Elem inv(Elem x) const override { return locate(parent_.inv(members_[x])); }

  Elem locate(Elem parent_elem) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), parent_elem);
    if (it == members_.end() || *it != parent_elem)
      throw Error(Errc::RestrictionEscapesKernel,
                  "operation left the member set", {parent_elem});
    return static_cast<Elem>(it - members_.begin());
  }
  const std::vector<Elem>& members() const { return members_; }

 private:
  Group parent_;
  std::vector<Elem> members_;
  Elem id_;
};

class SemidirectImpl final : public GroupImpl {
 public:
  SemidirectImpl(Group g, Group n, Action action, std::string label = "")
      : g_(std::move(g)), n_(std::move(n)), action_(std::move(action)) {
    assert(action_.actor().same_as(g_) && action_.space().same_as(n_));
    for (Elem s : g_.generators()) gens_.push_back(index(s, n_.identity()));
    for (Elem t : n_.generators()) gens_.push_back(index(g_.identity(), t));
    label_ = label.empty() ? g_.label() + " ltimes " + n_.label() : std::move(label);
  }

  std::size_t order() const override { return g_.order() * n_.order(); }
  Elem identity() const override { return index(g_.identity(), n_.identity()); }
  Elem mul(Elem x, Elem y) const override {
    const std::size_t nn = n_.order();
    Elem gx = x / nn, ax = x % nn;
    Elem gy = y / nn, ay = y % nn;
    return index(g_.mul(gx, gy), n_.mul(action_.act(ax, gy), ay));
  }
  Elem inv(Elem x) const override {
    const std::size_t nn = n_.order();
    Elem g = x / nn, a = x % nn;
    Elem gi = g_.inv(g);
    return index(gi, n_.inv(action_.act(a, gi)));
  }

 private:
  Elem index(Elem g, Elem a) const {
    return static_cast<Elem>(g * n_.order() + a);
  }

  Group g_;
  Group n_;
  Action action_;
};

class TableActionImpl final : public ActionImpl {
 public:
  TableActionImpl(Group actor, Group space, std::vector<Elem> flat)
      : ActionImpl(std::move(actor), std::move(space)), flat_(std::move(flat)) {}

  Elem act(Elem a, Elem g) const override {
    return flat_[static_cast<std::size_t>(g) * space_.order() + a];
  }

 private:
  std::vector<Elem> flat_;
};

class TrivialActionImpl final : public ActionImpl {
 public:
  TrivialActionImpl(Group actor, Group space)
      : ActionImpl(std::move(actor), std::move(space)) {}

  Elem act(Elem a, Elem) const override { return a; }
};

}  // namespace

Group group_from_table(const std::vector<Elem>& row_major, std::size_t order,
                       std::string label) {
  if (order == 0) throw Error(Errc::ParseError, "empty multiplication table");
  if (row_major.size() != order * order)
    throw Error(Errc::ParseError, "table size is not order squared");
  for (Elem v : row_major)
    if (v >= order) throw Error(Errc::ParseError, "table entry out of range", {v});

  auto at = [&](Elem x, Elem y) { return row_major[x * order + y]; };

  Elem id = kUnset;
  for (Elem e = 0; e < order; ++e) {
    bool good = true;
    for (Elem x = 0; x < order && good; ++x)
      good = at(e, x) == x && at(x, e) == x;
    if (good) {
      id = e;
      break;
    }
  }
  if (id == kUnset)
    throw Error(Errc::NoIdentity, "no two-sided identity in table");

  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y)
      for (Elem z = 0; z < order; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw Error(Errc::NotAssociative, "associativity fails", {x, y, z});

  for (Elem x = 0; x < order; ++x) {
    bool found = false;
    for (Elem y = 0; y < order && !found; ++y)
      found = at(x, y) == id && at(y, x) == id;
    if (!found) throw Error(Errc::NoInverse, "no two-sided inverse", {x});
  }

  if (label.empty()) label = "table" + std::to_string(order);
  return make_table_group_trusted(row_major, order, id, {}, std::move(label));
}

Group group_from_table(const std::vector<std::vector<Elem>>& table, std::string label) {
  std::vector<Elem> flat;
  flat.reserve(table.size() * table.size());
  for (const auto& row : table) {
    if (row.size() != table.size())
      throw Error(Errc::ParseError, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return group_from_table(flat, table.size(), std::move(label));
}

Group group_from_permutations(std::size_t degree,
                              const std::vector<std::vector<Elem>>& generators,
                              std::size_t order_cap, std::string label) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& p = generators[i];
    if (p.size() != degree)
      throw Error(Errc::NotABijection, "generator has wrong degree",
                  {static_cast<Elem>(i)});
    std::vector<char> seen(degree, 0);
    for (Elem v : p) {
      if (v >= degree || seen[v])
        throw Error(Errc::NotABijection, "generator is not a permutation",
                    {static_cast<Elem>(i)});
      seen[v] = 1;
    }
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Perm> layer{id};
  while (!layer.empty()) {
    std::set<Perm> frontier;
    for (const Perm& p : layer)
      for (const Perm& s : generators) {
        Perm q = compose_perm(p, s);
        if (!index.count(q)) frontier.insert(std::move(q));
      }
    layer.clear();
    for (const Perm& q : frontier) {
      if (elems.size() >= order_cap)
        throw Error(Errc::ClosureTooLarge,
                    "closure exceeds cap " + std::to_string(order_cap));
      index.emplace(q, static_cast<Elem>(elems.size()));
      elems.push_back(q);
      layer.push_back(q);
    }
  }

  std::vector<Elem> gens;
  for (const Perm& s : generators) {
    Elem idx = index.at(s);
    if (idx != 0 && std::find(gens.begin(), gens.end(), idx) == gens.end())
      gens.push_back(idx);
  }
  if (label.empty())
    label = "perm" + std::to_string(degree) + "#" + std::to_string(elems.size());

  const std::size_t n = elems.size();
  if (n <= 1024) {
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        table[x * n + y] = index.at(compose_perm(elems[x], elems[y]));
    return make_table_group_trusted(std::move(table), n, 0, std::move(gens),
                                    std::move(label));
  }
  return Group(std::make_shared<PermGroupImpl>(std::move(elems), std::move(index),
                                               std::move(gens), std::move(label)));
}

Group trivial_group(std::string label) {
  return make_table_group_trusted({0}, 1, 0, {}, std::move(label));
}

Group cyclic_group(std::size_t n) {
  assert(n >= 1);
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = static_cast<Elem>((x + y) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return make_table_group_trusted(std::move(table), n, 0, std::move(gens),
                                  "Z/" + std::to_string(n));
}

Group direct_product(const Group& a, const Group& b) {
  return Group(std::make_shared<SemidirectImpl>(a, b, trivial_action(a, b),
                                                a.label() + " x " + b.label()));
}

Group semidirect_product(const Group& g, const Group& n, const Action& action) {
  if (!action.actor().same_as(g) || !action.space().same_as(n))
    throw std::invalid_argument("semidirect_product: action does not match factors");
  return Group(std::make_shared<SemidirectImpl>(g, n, action));
}

Hom hom_unchecked(Group domain, Group codomain, std::vector<Elem> image) {
  return Hom{std::move(domain), std::move(codomain), std::move(image)};
}

Hom make_hom(Group domain, Group codomain, std::vector<Elem> image) {
  if (image.size() != domain.order())
    throw Error(Errc::ParseError, "image table size does not match domain order");
  for (Elem v : image)
    if (v >= codomain.order())
      throw Error(Errc::ParseError, "image entry out of range", {v});
  Hom f{std::move(domain), std::move(codomain), std::move(image)};
  AxiomReport r = check_hom_pairs(f);
  if (!r.ok())
    throw Error(Errc::NotAHomomorphism, r.violations.front().note,
                r.violations.front().witness);
  return f;
}

Hom identity_hom(const Group& g) {
  std::vector<Elem> image(g.order());
  std::iota(image.begin(), image.end(), 0);
  return Hom{g, g, std::move(image)};
}

Hom compose(const Hom& f, const Hom& g) {
  assert(f.codomain.same_as(g.domain));
  std::vector<Elem> image(f.image.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g.image[f.image[x]];
  return Hom{f.domain, g.codomain, std::move(image)};
}

bool is_bijective(const Hom& f) {
  if (f.domain.order() != f.codomain.order()) return false;
  std::vector<char> seen(f.codomain.order(), 0);
  for (Elem v : f.image) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

AxiomReport check_hom_pairs(const Hom& f) {
  AxiomReport r;
  if (f(f.domain.identity()) != f.codomain.identity())
    r.add("hom-identity", {}, "identity is not preserved");
  const std::size_t n = f.domain.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (f(f.domain.mul(x, y)) != f.codomain.mul(f(x), f(y))) {
        if (!r.add("hom", {x, y}, "f(xy) != f(x)f(y)")) return r;
      }
  return r;
}

AxiomReport check_hom_generators(const Hom& f) {
  AxiomReport r;
  if (!generates(f.domain, f.domain.generators())) {
    r.add("generators", {}, "stored generators do not generate the domain");
    return r;
  }
  if (f(f.domain.identity()) != f.codomain.identity())
    r.add("hom-identity", {}, "identity is not preserved");
  const std::size_t n = f.domain.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem s : f.domain.generators())
      if (f(f.domain.mul(x, s)) != f.codomain.mul(f(x), f(s))) {
        if (!r.add("hom", {x, s}, "f(xs) != f(x)f(s)")) return r;
      }
  return r;
}

Subgroup subgroup_generated(const Group& g, const std::vector<Elem>& seed) {
  const std::size_t n = g.order();
  for (Elem s : seed)
    if (s >= n) throw std::invalid_argument("subgroup_generated: seed out of range");
  std::vector<char> in(n, 0);
  std::vector<Elem> queue;
  in[g.identity()] = 1;
  queue.push_back(g.identity());
  for (Elem s : seed)
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    Elem x = queue.back();
    queue.pop_back();
    for (Elem s : seed) {
      Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < n; ++x)
    if (in[x]) members.push_back(x);
  return Subgroup{g, std::move(members)};
}

Subgroup full_subgroup(const Group& g) {
  std::vector<Elem> members(g.order());
  std::iota(members.begin(), members.end(), 0);
  return Subgroup{g, std::move(members)};
}

bool normality_witness(const Group& g, const Subgroup& h, Elem& h_out, Elem& g_out) {
  std::vector<char> in(g.order(), 0);
  for (Elem m : h.members) in[m] = 1;
  for (Elem m : h.members)
    for (Elem x = 0; x < g.order(); ++x)
      if (!in[g.conj(m, x)]) {
        h_out = m;
        g_out = x;
        return true;
      }
  return false;
}

bool is_normal(const Group& g, const Subgroup& h) {
  Elem a, b;
  return !normality_witness(g, h, a, b);
}

bool is_normal_under_generators(const Group& g, const Subgroup& h) {
  std::vector<char> in(g.order(), 0);
  for (Elem m : h.members) in[m] = 1;
  for (Elem m : h.members)
    for (Elem s : g.generators())
      if (!in[g.conj(m, s)]) return false;
  return true;
}

SubgroupView as_group(const Subgroup& h) {
  assert(!h.members.empty());
  auto impl = std::make_shared<SubgroupGroupImpl>(h.parent, h.members);
  Group grp(impl);
  std::vector<Elem> image = h.members;
  return SubgroupView{grp, Hom{grp, h.parent, std::move(image)}};
}

QuotientResult quotient(const Group& g, const Subgroup& m) {
  if (!m.parent.same_as(g))
    throw std::invalid_argument("quotient: subgroup of a different group");
  {
    Elem h, x;
    if (normality_witness(g, m, h, x))
      throw Error(Errc::NotNormal, "subgroup is not normal", {h, x});
  }
  const std::size_t n = g.order();
  std::vector<Elem> cls(n, kUnset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (cls[x] != kUnset) continue;
    Elem c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem mm : m.members) cls[g.mul(mm, x)] = c;
    assert(cls[x] == c);
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) table[a * q + b] = cls[g.mul(reps[a], reps[b])];
  std::vector<Elem> gens;
  for (Elem s : g.generators()) gens.push_back(cls[s]);
  Group qg = make_table_group_trusted(std::move(table), q, cls[g.identity()],
                                      std::move(gens),
                                      g.label() + "/" + std::to_string(m.size()));
  return QuotientResult{qg, Hom{g, qg, std::move(cls)}};
}

Action conjugation_action(const Group& g, const Subgroup& n, const SubgroupView& view) {
  {
    Elem h, x;
    if (normality_witness(g, n, h, x))
      throw Error(Errc::NotNormal, "subgroup is not normal", {h, x});
  }
  const std::size_t nn = n.members.size();
  const std::size_t gg = g.order();
  std::vector<Elem> flat(gg * nn);
  auto locate = [&](Elem parent_elem) {
    auto it = std::lower_bound(n.members.begin(), n.members.end(), parent_elem);
    assert(it != n.members.end() && *it == parent_elem);
    return static_cast<Elem>(it - n.members.begin());
  };
  for (Elem x = 0; x < gg; ++x)
    for (Elem a = 0; a < nn; ++a)
      flat[x * nn + a] = locate(g.conj(view.inclusion(a), x));
  return Action(std::make_shared<TableActionImpl>(g, view.group, std::move(flat)));
}

Action conjugation_action(const Group& g, const Subgroup& n) {
  return conjugation_action(g, n, as_group(n));
}

Action trivial_action(Group actor, Group space) {
  return Action(std::make_shared<TrivialActionImpl>(std::move(actor), std::move(space)));
}

Action action_from_tables_unchecked(Group actor, Group space,
                                    std::vector<std::vector<Elem>> tables) {
  if (tables.size() != actor.order())
    throw Error(Errc::ParseError, "action needs one permutation per actor element");
  const std::size_t nn = space.order();
  std::vector<Elem> flat(actor.order() * nn);
  for (std::size_t g = 0; g < tables.size(); ++g) {
    if (tables[g].size() != nn)
      throw Error(Errc::ParseError, "action row has wrong length",
                  {static_cast<Elem>(g)});
    for (std::size_t a = 0; a < nn; ++a) {
      if (tables[g][a] >= nn)
        throw Error(Errc::ParseError, "action entry out of range",
                    {static_cast<Elem>(g), static_cast<Elem>(a)});
      flat[g * nn + a] = tables[g][a];
    }
  }
  return Action(std::make_shared<TableActionImpl>(std::move(actor), std::move(space),
                                                  std::move(flat)));
}

Action action_from_tables(Group actor, Group space,
                          const std::vector<std::vector<Elem>>& tables) {
  Action a = action_from_tables_unchecked(std::move(actor), std::move(space), tables);
  AxiomReport r = check_action(a);
  if (!r.ok())
    throw Error(Errc::NotAutomorphism,
                r.violations.front().axiom + ": " + r.violations.front().note,
                r.violations.front().witness);
  return a;
}

AxiomReport check_action(const Action& action) {
  AxiomReport r;
  const Group& g = action.actor();
  const Group& n = action.space();
  const std::size_t gg = g.order(), nn = n.order();

  for (Elem a = 0; a < nn; ++a)
    if (action.act(a, g.identity()) != a)
      if (!r.add("action-identity", {a}, "identity must act trivially")) return r;

  std::vector<Elem> seen(nn);
  for (Elem x = 0; x < gg; ++x) {
    std::fill(seen.begin(), seen.end(), kUnset);
    for (Elem a = 0; a < nn; ++a) {
      Elem img = action.act(a, x);
      if (seen[img] != kUnset) {
        if (!r.add("action-bijective", {x, seen[img], a}, "two elements collide"))
          return r;
      } else {
        seen[img] = a;
      }
    }
    for (Elem a = 0; a < nn; ++a)
      for (Elem b = 0; b < nn; ++b)
        if (action.act(n.mul(a, b), x) != n.mul(action.act(a, x), action.act(b, x))) {
          if (!r.add("action-hom", {x, a, b}, "(ab)^g != a^g b^g")) return r;
        }
  }

  for (Elem a = 0; a < nn; ++a)
    for (Elem x = 0; x < gg; ++x)
      for (Elem y = 0; y < gg; ++y)
        if (action.act(a, g.mul(x, y)) != action.act(action.act(a, x), y)) {
          if (!r.add("action-compat", {a, x, y}, "a^(gh) != (a^g)^h")) return r;
        }
  return r;
}

AxiomReport check_action_generators(const Action& action) {
  AxiomReport r;
  const Group& g = action.actor();
  const Group& n = action.space();
  const std::size_t gg = g.order(), nn = n.order();

  if (!generates(g, g.generators())) {
    r.add("generators", {}, "actor generators do not generate");
    return r;
  }
  if (!generates(n, n.generators())) {
    r.add("generators", {}, "space generators do not generate");
    return r;
  }

  for (Elem a = 0; a < nn; ++a)
    if (action.act(a, g.identity()) != a)
      if (!r.add("action-identity", {a}, "identity must act trivially")) return r;

  std::vector<Elem> seen(nn);
  for (Elem x = 0; x < gg; ++x) {
    std::fill(seen.begin(), seen.end(), kUnset);
    for (Elem a = 0; a < nn; ++a) {
      Elem img = action.act(a, x);
      if (seen[img] != kUnset) {
        if (!r.add("action-bijective", {x, seen[img], a}, "two elements collide"))
          return r;
      } else {
        seen[img] = a;
      }
    }
    for (Elem a = 0; a < nn; ++a)
      for (Elem s : n.generators())
        if (action.act(n.mul(a, s), x) != n.mul(action.act(a, x), action.act(s, x))) {
          if (!r.add("action-hom", {x, a, s}, "(as)^g != a^g s^g")) return r;
        }
  }

  for (Elem a = 0; a < nn; ++a)
    for (Elem s : g.generators())
      for (Elem y = 0; y < gg; ++y)
        if (action.act(a, g.mul(s, y)) != action.act(action.act(a, s), y)) {
          if (!r.add("action-compat", {a, s, y}, "a^(sh) != (a^s)^h")) return r;
        }
  return r;
}

AxiomReport check_group_axioms(const Group& g) {
  AxiomReport r;
  const std::size_t n = g.order();
  const Elem e = g.identity();
  for (Elem x = 0; x < n; ++x)
    if (g.mul(e, x) != x || g.mul(x, e) != x)
      if (!r.add("identity", {x}, "identity law fails")) return r;
  for (Elem x = 0; x < n; ++x) {
    Elem y = g.inv(x);
    if (g.mul(x, y) != e || g.mul(y, x) != e)
      if (!r.add("inverse", {x}, "inverse law fails")) return r;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
          if (!r.add("assoc", {x, y, z}, "associativity fails")) return r;
        }
  return r;
}

bool is_abelian(const Group& g) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < x; ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool generates(const Group& g, const std::vector<Elem>& gens) {
  return subgroup_generated(g, gens).size() == g.order();
}

std::size_t element_order(const Group& g, Elem x) {
  std::size_t k = 1;
  Elem p = x;
  while (p != g.identity()) {
    p = g.mul(p, x);
    ++k;
  }
  return k;
}

std::vector<Elem> materialize_row_major(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = g.mul(x, y);
  return table;
}

std::vector<std::vector<Elem>> automorphisms(const Group& g) {
  detail::GeneratorWords w = detail::generator_words(g);
  const std::size_t n = g.order();
  const std::size_t r = w.gens.size();

  std::vector<std::size_t> orders(n);
  for (Elem x = 0; x < n; ++x) orders[x] = element_order(g, x);

  std::vector<std::vector<Elem>> choices(r);
  for (std::size_t i = 0; i < r; ++i)
    for (Elem x = 0; x < n; ++x)
      if (orders[x] == orders[w.gens[i]]) choices[i].push_back(x);

  std::vector<std::vector<Elem>> result;
  if (r == 0) {
    result.push_back({g.identity()});
    return result;
  }

  std::vector<std::size_t> pick(r, 0);
  std::vector<Elem> images(r);
  for (;;) {
    for (std::size_t i = 0; i < r; ++i) images[i] = choices[i][pick[i]];
    std::vector<Elem> phi = detail::evaluate_on_words(w, g, g, images);
    bool good = true;
    {
      std::vector<char> seen(n, 0);
      for (Elem v : phi) {
        if (seen[v]) {
          good = false;
          break;
        }
        seen[v] = 1;
      }
    }
    if (good)
      for (Elem x = 0; x < n && good; ++x)
        for (Elem s : w.gens) {
          if (phi[g.mul(x, s)] != g.mul(phi[x], phi[s])) {
            good = false;
            break;
          }
        }
    if (good) result.push_back(phi);

    std::size_t i = 0;
    while (i < r && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == r) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

Elem mixed_index(std::span<const Elem> digits, std::span<const std::size_t> radices) {
  assert(digits.size() == radices.size());
  std::size_t acc = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    assert(digits[i] < radices[i]);
    acc = acc * radices[i] + digits[i];
  }
  return static_cast<Elem>(acc);
}

std::vector<Elem> mixed_digits(Elem index, std::span<const std::size_t> radices) {
  std::vector<Elem> out(radices.size());
  std::size_t x = index;
  for (std::size_t i = radices.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(x % radices[i]);
    x /= radices[i];
  }
  assert(x == 0);
  return out;
}

namespace detail {

GeneratorWords generator_words(const Group& g, const std::vector<Elem>& gens) {
  const std::size_t n = g.order();
  GeneratorWords w;
  w.gens = gens;
  w.parent.assign(n, kUnset);
  w.via.assign(n, kUnset);
  std::vector<char> in(n, 0);
  in[g.identity()] = 1;
  w.order.push_back(g.identity());
  std::size_t head = 0;
  while (head < w.order.size()) {
    Elem x = w.order[head++];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g.mul(x, gens[i]);
      if (!in[y]) {
        in[y] = 1;
        w.parent[y] = x;
        w.via[y] = static_cast<Elem>(i);
        w.order.push_back(y);
      }
    }
  }
  if (w.order.size() != n)
    throw std::logic_error("generator_words: generators do not generate");
  return w;
}

GeneratorWords generator_words(const Group& g) {
  return generator_words(g, g.generators());
}

std::vector<Elem> evaluate_on_words(const GeneratorWords& w, const Group& domain,
                                    const Group& codomain,
                                    const std::vector<Elem>& images) {
  assert(images.size() == w.gens.size());
  std::vector<Elem> phi(domain.order());
  phi[domain.identity()] = codomain.identity();
  for (std::size_t i = 1; i < w.order.size(); ++i) {
    Elem x = w.order[i];
    phi[x] = codomain.mul(phi[w.parent[x]], images[w.via[x]]);
  }
  return phi;
}

}  // namespace detail

}  // namespace crossmod
