#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "ramsum/conjugacy.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/lattice.hpp"

using namespace ramsum;

TEST_SUITE("conjugacy") {

TEST_CASE("S3 classes") {
  const GroupTable g = corpus::s3();
  const std::vector<ConjClass> cls = conjugacy_classes(g);
  REQUIRE(cls.size() == 3);
  CHECK(cls[0].members == std::vector<int>{0});
  CHECK(cls[1].members == std::vector<int>{2, 5});  // the 3-cycles
  CHECK(cls[2].members == std::vector<int>{1, 3, 4});  // the transpositions
  CHECK(cls[0].representative == 0);
  CHECK(cls[1].representative == 2);
  CHECK(cls[2].representative == 1);
}

TEST_CASE("class partition properties") {
  for (const corpus::Entry& e : corpus::all_groups()) {
    const GroupTable& g = e.group;
    INFO(e.name);
    const std::vector<ConjClass> cls = conjugacy_classes(g);
    std::vector<int> owner(g.order(), -1);
    size_t total = 0;
    for (size_t i = 0; i < cls.size(); ++i) {
      total += cls[i].members.size();
      CHECK(g.order() % cls[i].members.size() == 0);
      CHECK(cls[i].representative == cls[i].members.front());
      for (int x : cls[i].members) {
        CHECK(owner[x] == -1);
        owner[x] = static_cast<int>(i);
      }
    }
    CHECK(total == static_cast<size_t>(g.order()));
    // Conjugation stays inside the class; orders are constant on a class.
    for (const ConjClass& c : cls)
      for (int x : c.members) {
        CHECK(g.element_order(x) == g.element_order(c.representative));
        for (int t = 0; t < g.order(); ++t)
          CHECK(owner[g.mul(g.mul(t, x), g.inv(t))] == owner[x]);
      }
    if (g.abelian()) CHECK(cls.size() == static_cast<size_t>(g.order()));
  }
}

TEST_CASE("subgroup generation and closure") {
  const GroupTable g = corpus::s3();
  const Subgroup a3 = subgroup_generated_by(g, {2});
  CHECK(a3.members == std::vector<int>{0, 2, 5});
  const Subgroup whole = subgroup_generated_by(g, {1, 2});
  CHECK(whole.order() == 6);
  const Subgroup trivial = subgroup_generated_by(g, {});
  CHECK(trivial.members == std::vector<int>{0});

  CHECK(normal_closure(g, 2).members == std::vector<int>{0, 2, 5});
  CHECK(normal_closure(g, 1).order() == 6);  // transpositions generate S3
  CHECK(normal_closure(g, 0).order() == 1);
}

TEST_CASE("subgroup intersection") {
  const GroupTable g = corpus::d4();
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const Subgroup sa = subgroup_generated_by(g, {a});
      const Subgroup sb = subgroup_generated_by(g, {b});
      const Subgroup i = intersect(sa, sb);
      for (int x : i.members) {
        CHECK(sa.contains(x));
        CHECK(sb.contains(x));
      }
      for (int x : sa.members)
        if (sb.contains(x)) CHECK(i.contains(x));
    }
}

TEST_CASE("equivalence sets") {
  const GroupTable g = corpus::s3();
  CHECK(class_equivalence_set_by_closures(g, 0) == std::vector<int>{0});
  CHECK(class_equivalence_set_by_closures(g, 2) == std::vector<int>{2, 5});
  CHECK(class_equivalence_set_by_closures(g, 5) == std::vector<int>{2, 5});
  CHECK(class_equivalence_set_by_closures(g, 1) == std::vector<int>{1, 3, 4});

  // In Z_n, [x] collects the elements of the same order.
  const GroupTable z12 = corpus::cyclic(12);
  for (int x = 0; x < 12; ++x) {
    std::vector<int> same;
    for (int y = 0; y < 12; ++y)
      if (z12.element_order(y) == z12.element_order(x)) same.push_back(y);
    CHECK(class_equivalence_set_by_closures(z12, x) == same);
  }
}

TEST_CASE("lattice and closure routes agree on [x^G]") {
  for (const corpus::Entry& e : corpus::all_groups()) {
    const GroupTable& g = e.group;
    INFO(e.name);
    const NormalLattice lat = enumerate_normal_subgroups(g);
    for (int x = 0; x < g.order(); ++x)
      CHECK(class_equivalence_set(g, lat, x) == class_equivalence_set_by_closures(g, x));
  }
}

}  // TEST_SUITE
