#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "crossmod/axioms.hpp"
#include "crossmod/error.hpp"

namespace crossmod {

// Default ceiling on group orders accepted from external input.
inline constexpr std::size_t kDefaultOrderCap = 10080;

// Finite group on dense element indices. Implementations may store a full
// multiplication table or compute products on demand; either way the
// structure is immutable after construction.
class GroupImpl {
 public:
  virtual ~GroupImpl() = default;

  virtual std::size_t order() const = 0;
  virtual Elem identity() const = 0;
  virtual Elem mul(Elem x, Elem y) const = 0;
  virtual Elem inv(Elem x) const = 0;

  const std::vector<Elem>& generators() const { return gens_; }
  const std::string& label() const { return label_; }

 protected:
  std::vector<Elem> gens_;
  std::string label_;
};

// Value handle, cheap to copy and share.
class Group {
 public:
  Group() = default;
  explicit Group(std::shared_ptr<const GroupImpl> impl) : impl_(std::move(impl)) {}

  std::size_t order() const { return impl_->order(); }
  Elem identity() const { return impl_->identity(); }
  Elem mul(Elem x, Elem y) const { return impl_->mul(x, y); }
  Elem inv(Elem x) const { return impl_->inv(x); }
  // Conjugation x^g = g^-1 x g.
  Elem conj(Elem x, Elem g) const { return mul(impl_->inv(g), mul(x, g)); }
  Elem commutator(Elem x, Elem y) const {
    return mul(impl_->inv(x), mul(impl_->inv(y), mul(x, y)));
  }

  const std::vector<Elem>& generators() const { return impl_->generators(); }
  const std::string& label() const { return impl_->label(); }

  bool valid() const { return impl_ != nullptr; }
  bool same_as(const Group& other) const { return impl_ == other.impl_; }

 private:
  std::shared_ptr<const GroupImpl> impl_;
};

// Total map between groups; image[x] is the image of x.
struct Hom {
  Group domain;
  Group codomain;
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }
};

// Subset of a parent group, closed under the group operations.
// Members are sorted ascending.
struct Subgroup {
  Group parent;
  std::vector<Elem> members;

  std::size_t size() const { return members.size(); }
  bool contains(Elem x) const;
};

// Right action of `actor` on `space`: act(a, g) = a^g, so
// act(a, gh) = act(act(a, g), h) and each act(., g) is an automorphism.
class ActionImpl {
 public:
  virtual ~ActionImpl() = default;
  virtual Elem act(Elem a, Elem g) const = 0;

  const Group& actor() const { return actor_; }
  const Group& space() const { return space_; }

 protected:
  ActionImpl(Group actor, Group space)
      : actor_(std::move(actor)), space_(std::move(space)) {}

  Group actor_;
  Group space_;
};

class Action {
 public:
  Action() = default;
  explicit Action(std::shared_ptr<const ActionImpl> impl) : impl_(std::move(impl)) {}

  Elem act(Elem a, Elem g) const { return impl_->act(a, g); }
  const Group& actor() const { return impl_->actor(); }
  const Group& space() const { return impl_->space(); }
  bool valid() const { return impl_ != nullptr; }

 private:
  std::shared_ptr<const ActionImpl> impl_;
};

// ---- constructors ----

// Validates the table (two-sided identity, associativity, inverses) and
// throws Error with a witness on the first failure. The identity is inferred
// from the table.
Group group_from_table(const std::vector<Elem>& row_major, std::size_t order,
                       std::string label = "");
Group group_from_table(const std::vector<std::vector<Elem>>& table,
                       std::string label = "");

// Closes the generating permutations (entries are images, applied left to
// right: (p*q)[i] = q[p[i]]). Element 0 is the identity; later elements are
// ordered by word length, ties broken lexicographically on the permutation.
// Throws ClosureTooLarge when the closure exceeds order_cap and
// NotABijection when a generator is not a permutation of 0..degree-1.
Group group_from_permutations(std::size_t degree,
                              const std::vector<std::vector<Elem>>& generators,
                              std::size_t order_cap = kDefaultOrderCap,
                              std::string label = "");

Group trivial_group(std::string label = "1");
Group cyclic_group(std::size_t n);
Group direct_product(const Group& a, const Group& b);

// G ltimes N for a right action of G on N:
// (g, a) * (h, b) = (gh, a^h * b). Index layout: g * |N| + a.
Group semidirect_product(const Group& g, const Group& n, const Action& action);

// ---- homomorphisms ----

// Validates totality, identity preservation and multiplicativity on all
// pairs; throws NotAHomomorphism with witness {x, y}.
Hom make_hom(Group domain, Group codomain, std::vector<Elem> image);
Hom hom_unchecked(Group domain, Group codomain, std::vector<Elem> image);
Hom identity_hom(const Group& g);
// x |-> g(f(x)).
Hom compose(const Hom& f, const Hom& g);
bool is_bijective(const Hom& f);

// Multiplicativity on all pairs. Tags: "hom" {x, y}, "hom-identity" {}.
AxiomReport check_hom_pairs(const Hom& f);
// Multiplicativity of f(x*s) for generators s; exact when the stored
// generators generate. Tags: "hom" {x, s}, "hom-identity" {},
// "generators" {}.
AxiomReport check_hom_generators(const Hom& f);

// ---- subgroups, quotients, actions ----

// Closure of seed inside g (worklist, right multiplication by seeds).
Subgroup subgroup_generated(const Group& g, const std::vector<Elem>& seed);
Subgroup full_subgroup(const Group& g);

// True iff h^g lies in the subgroup for every member h and every g,
// checked exhaustively.
bool is_normal(const Group& g, const Subgroup& h);
// Same conclusion via conjugation by stored generators only; exact because
// conjugation by a generator permutes a finite closed subset.
bool is_normal_under_generators(const Group& g, const Subgroup& h);
// First pair (h, g) with h^g outside the subgroup, if any.
bool normality_witness(const Group& g, const Subgroup& h, Elem& h_out, Elem& g_out);

// The subgroup as a group in its own right plus the inclusion into the
// parent. Element i of the group is members[i].
struct SubgroupView {
  Group group;
  Hom inclusion;
};
SubgroupView as_group(const Subgroup& h);

// Right cosets Mx. Throws NotNormal with witness {h, g}.
struct QuotientResult {
  Group group;
  Hom projection;
};
QuotientResult quotient(const Group& g, const Subgroup& m);

// Conjugation of g on a normal subgroup, as an action on as_group(n).
// Throws NotNormal. The SubgroupView overload acts on the view's group, so
// callers can share one view between the action and other maps.
Action conjugation_action(const Group& g, const Subgroup& n);
Action conjugation_action(const Group& g, const Subgroup& n, const SubgroupView& view);
Action trivial_action(Group actor, Group space);
// tables[g][a] = a^g. Validated via check_action; throws NotAutomorphism
// with the first violation.
Action action_from_tables(Group actor, Group space,
                          const std::vector<std::vector<Elem>>& tables);
Action action_from_tables_unchecked(Group actor, Group space,
                                    std::vector<std::vector<Elem>> tables);

// Exhaustive: identity acts trivially, each act(., g) is an automorphism,
// act(a, gh) = act(act(a, g), h) on all triples. Tags: "action-identity" {a},
// "action-bijective" {g, a, b}, "action-hom" {g, a, b},
// "action-compat" {a, g, h}.
AxiomReport check_action(const Action& action);
// Same laws checked with one foot on generators: automorphism property on
// space-generator pairs for every actor element, compatibility for actor
// generators against all actor elements. Exact when stored generators
// generate.
AxiomReport check_action_generators(const Action& action);

// ---- diagnostics ----

// Full associativity / identity / inverse scan, O(order^3).
// Tags: "assoc" {x, y, z}, "identity" {x}, "inverse" {x}.
AxiomReport check_group_axioms(const Group& g);
bool is_abelian(const Group& g);
bool generates(const Group& g, const std::vector<Elem>& gens);
std::size_t element_order(const Group& g, Elem x);
std::vector<Elem> materialize_row_major(const Group& g);

// All automorphisms of a small group, each as an image table, sorted
// lexicographically.
std::vector<std::vector<Elem>> automorphisms(const Group& g);

// ---- mixed-radix tuple codec ----
// Digit 0 is most significant: index = (..(d0 * r1 + d1) * r2 + d2)..

Elem mixed_index(std::span<const Elem> digits, std::span<const std::size_t> radices);
std::vector<Elem> mixed_digits(Elem index, std::span<const std::size_t> radices);

}  // namespace crossmod
