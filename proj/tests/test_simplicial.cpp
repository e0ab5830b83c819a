#include "crossmod/simplicial.hpp"

#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"

using namespace crossmod;

namespace {

// Depth-1 object with a nontrivial component group: level 1 is Z4 x Z2
// encoded as a*2 + t, the faces are d0(a,t) = a and d1(a,t) = a + 2t, the
// degeneracy is a |-> (a,0). The component subgroup is {0,2}, so pi0 has
// order two.
struct ShiftExample {
  Group z4 = cyclic_group(4);
  Group z4xz2 = direct_product(cyclic_group(4), cyclic_group(2));
  SimplicialGroup sg;

  ShiftExample() {
    std::vector<Elem> d0(8), d1(8), s0(4);
    for (Elem idx = 0; idx < 8; ++idx) {
      Elem a = idx / 2, t = idx % 2;
      d0[idx] = a;
      d1[idx] = (a + 2 * t) % 4;
    }
    for (Elem a = 0; a < 4; ++a) s0[a] = a * 2;
    sg.depth = 1;
    sg.level = {z4, z4xz2};
    sg.face = {{}, {hom_unchecked(z4xz2, z4, d0), hom_unchecked(z4xz2, z4, d1)}};
    sg.degen = {{hom_unchecked(z4, z4xz2, s0)}, {}};
  }
};

// The nerve of an abelian group A, truncated at depth 2: levels 1, A, A x A.
// Faces out of level 2 are the two projections and the multiplication; its
// homotopy groups are known: pi0 trivial, pi1 isomorphic to A.
SimplicialGroup nerve(const Group& a) {
  Group one = trivial_group();
  Group a2 = direct_product(a, a);
  const std::size_t n = a.order();

  std::vector<Elem> zero1(a.order(), 0);
  std::vector<Elem> d20(a2.order()), d21(a2.order()), d22(a2.order());
  for (Elem idx = 0; idx < a2.order(); ++idx) {
    Elem x = idx / n, y = idx % n;
    d20[idx] = y;
    d21[idx] = a.mul(x, y);
    d22[idx] = x;
  }
  std::vector<Elem> s00 = {a.identity()};
  std::vector<Elem> s10(n), s11(n);
  for (Elem x = 0; x < n; ++x) {
    s10[x] = static_cast<Elem>(a.identity() * n + x);
    s11[x] = static_cast<Elem>(x * n + a.identity());
  }

  SimplicialGroup sg;
  sg.depth = 2;
  sg.level = {one, a, a2};
  sg.face = {{},
             {hom_unchecked(a, one, zero1), hom_unchecked(a, one, zero1)},
             {hom_unchecked(a2, a, d20), hom_unchecked(a2, a, d21),
              hom_unchecked(a2, a, d22)}};
  sg.degen = {{hom_unchecked(one, a, s00)},
              {hom_unchecked(a, a2, s10), hom_unchecked(a, a2, s11)},
              {}};
  return sg;
}

}  // namespace

TEST_CASE("constant simplicial groups satisfy every identity") {
  Group g = testutil::s3();
  SimplicialGroup sg = constant_simplicial(g, 3);
  CHECK(check_simplicial_identities(sg).ok());
  CHECK(is_discrete_at_level1(sg));

  ComponentGroup p = pi0(sg);
  CHECK(p.component_of_identity.size() == 1);
  CHECK(p.group.order() == 6);
  CHECK(moore_pi_n(sg, 0).order() == 6);
  CHECK(moore_pi_n(sg, 1).order() == 1);
  CHECK(moore_pi_n(sg, 2).order() == 1);
  CHECK_THROWS_AS(moore_pi_n(sg, 3), Error);
  CHECK(check_pi0_against_moore(sg).ok());
}

TEST_CASE("the shift example has component subgroup of order two") {
  ShiftExample ex;
  CHECK(check_simplicial_identities(ex.sg).ok());
  CHECK_FALSE(is_discrete_at_level1(ex.sg));

  Subgroup component = identity_component(ex.sg);
  CHECK(component.members == std::vector<Elem>{0, 2});

  ComponentGroup p = pi0(ex.sg);
  CHECK(p.group.order() == 2);
  CHECK(p.projection(0) == p.projection(2));
  CHECK(p.projection(1) == p.projection(3));
  CHECK(p.projection(0) != p.projection(1));

  CHECK(moore_pi_n(ex.sg, 0).order() == 2);
  CHECK_THROWS_AS(moore_pi_n(ex.sg, 1), Error);
  CHECK(check_pi0_against_moore(ex.sg).ok());
}

TEST_CASE("the nerve of an abelian group has the textbook homotopy groups") {
  for (std::size_t n : {2, 3, 5}) {
    Group a = cyclic_group(n);
    SimplicialGroup sg = nerve(a);
    CHECK(check_simplicial_identities(sg).ok());

    CHECK(moore_pi_n(sg, 0).order() == 1);
    Group p1 = moore_pi_n(sg, 1);
    CHECK(p1.order() == n);
    CHECK(is_abelian(p1));
    CHECK(testutil::order_multiset(p1) == testutil::order_multiset(a));
    CHECK(check_pi0_against_moore(sg).ok());
  }
}

TEST_CASE("violations are localized to the law that breaks") {
  SUBCASE("corrupting a face entry breaks its homomorphism property") {
    ShiftExample ex;
    auto d1 = ex.sg.face[1][1].image;
    d1[3] = 0;  // was 3
    ex.sg.face[1][1] = hom_unchecked(ex.z4xz2, ex.z4, d1);
    AxiomReport r = check_simplicial_identities(ex.sg);
    REQUIRE_FALSE(r.ok());
    bool saw = false;
    for (const auto& v : r.violations) saw |= v.axiom == "face-hom";
    CHECK(saw);
  }
  SUBCASE("redirecting the degeneracy breaks only the retraction identity") {
    ShiftExample ex;
    // a |-> (a, a mod 2) is still a homomorphism but no longer a section
    // of the second face
    std::vector<Elem> s0(4);
    for (Elem a = 0; a < 4; ++a) s0[a] = a * 2 + a % 2;
    ex.sg.degen[0][0] = hom_unchecked(ex.z4, ex.z4xz2, s0);
    AxiomReport r = check_simplicial_identities(ex.sg);
    REQUIRE_FALSE(r.ok());
    for (const auto& v : r.violations) CHECK(v.axiom == "ds");
  }
}

TEST_CASE("simplicial homomorphisms are checked levelwise and on squares") {
  ShiftExample ex;
  SimplicialGroup target = constant_simplicial(cyclic_group(2), 1);

  std::vector<Elem> q0 = {0, 1, 0, 1};
  std::vector<Elem> q1(8);
  for (Elem idx = 0; idx < 8; ++idx) q1[idx] = (idx / 2) % 2;

  SimplicialHom f{ex.sg, target,
                  {hom_unchecked(ex.z4, target.level[0], q0),
                   hom_unchecked(ex.z4xz2, target.level[1], q1)}};
  CHECK(check_simplicial_hom(f).ok());

  SUBCASE("a corrupted level map fails") {
    auto bad = q1;
    bad[5] = 1 - bad[5];
    SimplicialHom g{ex.sg, target,
                    {hom_unchecked(ex.z4, target.level[0], q0),
                     hom_unchecked(ex.z4xz2, target.level[1], bad)}};
    AxiomReport r = check_simplicial_hom(g);
    CHECK_FALSE(r.ok());
  }

  SUBCASE("its kernel is a simplicial group of the expected size") {
    KernelResult kr = levelwise_kernel(f);
    CHECK(kr.kernel.level[0].order() == 2);
    CHECK(kr.kernel.level[1].order() == 4);
    CHECK(check_simplicial_identities(kr.kernel).ok());
    CHECK(check_simplicial_hom(kr.inclusion).ok());

    // the kernel keeps the even vertices, so its pi0 is trivial
    CHECK(pi0(kr.kernel).group.order() == 1);
  }

  SUBCASE("a face that fails to restrict is reported as an escape") {
    auto d0 = ex.sg.face[1][0].image;
    d0[4] = 1;  // send the kernel member (2,0) to an odd vertex
    ex.sg.face[1][0] = hom_unchecked(ex.z4xz2, ex.z4, d0);
    SimplicialHom g{ex.sg, target,
                    {hom_unchecked(ex.z4, target.level[0], q0),
                     hom_unchecked(ex.z4xz2, target.level[1], q1)}};
    try {
      levelwise_kernel(g);
      FAIL("expected RestrictionEscapesKernel");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::RestrictionEscapesKernel);
    }
  }
}

TEST_CASE("induced map on components of the identity inclusion") {
  ShiftExample ex;
  SimplicialHom id_inc{ex.sg, ex.sg,
                       {identity_hom(ex.z4), identity_hom(ex.z4xz2)}};
  NormalMap nm = induced_pi0_map(id_inc);
  CHECK(nm.source.order() == 2);
  CHECK(nm.target.order() == 2);
  CHECK(is_bijective(nm.map));
  CHECK(validate(nm).ok());
}

TEST_CASE("induced map on components of a kernel inclusion") {
  ShiftExample ex;
  SimplicialGroup target = constant_simplicial(cyclic_group(2), 1);
  std::vector<Elem> q0 = {0, 1, 0, 1};
  std::vector<Elem> q1(8);
  for (Elem idx = 0; idx < 8; ++idx) q1[idx] = (idx / 2) % 2;
  SimplicialHom f{ex.sg, target,
                  {hom_unchecked(ex.z4, target.level[0], q0),
                   hom_unchecked(ex.z4xz2, target.level[1], q1)}};
  KernelResult kr = levelwise_kernel(f);

  NormalMap nm = induced_pi0_map(kr.inclusion);
  CHECK(nm.source.order() == 1);
  CHECK(nm.target.order() == 2);
  CHECK(validate(nm).ok());
}

TEST_CASE("induced map hypotheses are enforced") {
  SUBCASE("the image must be normal levelwise") {
    Group g = testutil::s3();
    SubgroupView refl = as_group(subgroup_generated(g, {1}));
    SimplicialHom inc{constant_simplicial(refl.group, 1), constant_simplicial(g, 1),
                      {refl.inclusion, refl.inclusion}};
    try {
      induced_pi0_map(inc);
      FAIL("expected HypothesisFailed");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::HypothesisFailed);
    }
  }
  SUBCASE("the map must be levelwise injective") {
    Group z4 = cyclic_group(4);
    Group z2 = cyclic_group(2);
    Hom mod2 = make_hom(z4, z2, {0, 1, 0, 1});
    SimplicialHom inc{constant_simplicial(z4, 1), constant_simplicial(z2, 1),
                      {mod2, mod2}};
    try {
      induced_pi0_map(inc);
      FAIL("expected HypothesisFailed");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::HypothesisFailed);
    }
  }
}

TEST_CASE("pi0 of constants recovers the group across the pool") {
  Group pool[] = {cyclic_group(7), testutil::d4(), testutil::q8(), testutil::a4()};
  for (const Group& g : pool) {
    SimplicialGroup sg = constant_simplicial(g, 2);
    ComponentGroup p = pi0(sg);
    CHECK(p.group.order() == g.order());
    CHECK(testutil::order_multiset(p.group) == testutil::order_multiset(g));
    CHECK(moore_pi_n(sg, 1).order() == 1);
    CHECK(check_pi0_against_moore(sg).ok());
  }
}
