#include <algorithm>

#include "doctest.h"
#include "sieveforge/corpus.hpp"
#include "sieveforge/coverage.hpp"
#include "sieveforge/functors.hpp"

using namespace sieveforge;

namespace {

FunctorSpec identity_spec(const FiniteCategory& c) {
  FunctorSpec s;
  for (auto& o : c.objects) s.objects.push_back({o, o});
  for (auto& m : c.morphisms) s.morphisms.push_back({m.name, m.name});
  return s;
}

FunctorSpec swap_spec() {
  FunctorSpec s;
  s.objects = {{"one", "one"}, {"C", "C"}};
  s.morphisms = {{"id_one", "id_one"}, {"id_C", "id_C"}, {"x", "y"}, {"y", "x"},
                 {"t", "t"},           {"a", "b"},       {"b", "a"}};
  return s;
}

CoverAssignment site(const CarrierPtr& tp, bool with_x, bool with_y) {
  CoverAssignment j = trivial_topology(tp);
  if (with_x) add_sieve(j, "C", {"x", "a"});
  if (with_y) add_sieve(j, "C", {"y", "b"});
  return j;
}

}  // namespace

TEST_SUITE_BEGIN("functors");

TEST_CASE("identity functors certify") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap f = build_functor(tp, tp, identity_spec(tp->cat()));
  for (int m = 0; m < tp->cat().morphism_count(); ++m) CHECK(f.morphism_map[m] == m);
}

TEST_CASE("monotone collapse of the chain is a functor") {
  auto c3 = Carrier::category(poset_category(chain_lattice(3)));
  FunctorSpec s;
  s.objects = {{"0", "0"}, {"1", "0"}, {"2", "2"}};
  for (auto& m : c3->cat().morphisms) {
    auto rename = [](const std::string& e) { return e == "1" ? std::string("0") : e; };
    std::string img = rename(c3->cat().objects[m.dom]) + "<=" + rename(c3->cat().objects[m.cod]);
    s.morphisms.push_back({m.name, img});
  }
  FunctorMap f = build_functor(c3, c3, s);
  CHECK(f.object_map[c3->require_object("1")] == c3->require_object("0"));
}

TEST_CASE("swapping the points also swaps the constant endomorphisms") {
  auto tp = Carrier::category(two_point_category());
  CHECK_NOTHROW(build_functor(tp, tp, swap_spec()));
  // the naive swap that fixes a and b breaks composition
  FunctorSpec naive = swap_spec();
  for (auto& [from, to] : naive.morphisms) {
    if (from == "a") to = "a";
    if (from == "b") to = "b";
  }
  try {
    build_functor(tp, tp, naive);
    FAIL("expected NotAFunctor");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAFunctor");
    CHECK(e.witness().axiom == "composition");
  }
}

TEST_CASE("image sieves of the identity are the sieves themselves") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap id = build_functor(tp, tp, identity_spec(tp->cat()));
  for (int o = 0; o < tp->object_count(); ++o)
    for (int i = 0; i < tp->universe_size(o); ++i) {
      Sieve s = tp->sieve_value(o, i);
      CHECK(image_sieve(id, s) == s);
    }
}

TEST_CASE("the swap functor carries one point sieve to the other") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap sw = build_functor(tp, tp, swap_spec());
  Sieve sx = generated_sieve(tp->cat(), "C", {"x"});
  Sieve sy = generated_sieve(tp->cat(), "C", {"y"});
  CHECK(image_sieve(sw, sx) == sy);
  CHECK(image_sieve(sw, sy) == sx);
}

TEST_CASE("the collapse functor maps chain sieves to collapsed generators") {
  auto c3 = Carrier::category(poset_category(chain_lattice(3)));
  FunctorSpec s;
  s.objects = {{"0", "0"}, {"1", "0"}, {"2", "2"}};
  for (auto& m : c3->cat().morphisms) {
    auto rename = [](const std::string& e) { return e == "1" ? std::string("0") : e; };
    s.morphisms.push_back(
        {m.name, rename(c3->cat().objects[m.dom]) + "<=" + rename(c3->cat().objects[m.cod])});
  }
  FunctorMap f = build_functor(c3, c3, s);
  Sieve down1 = generated_sieve(c3->cat(), "2", {"1<=2"});
  Sieve img = image_sieve(f, down1);
  CHECK(sieve_names(c3->cat(), img) == std::vector<std::string>{"0<=2"});
}

TEST_CASE("image sieves are sieves, contain the raw images, and grow monotonically") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap sw = build_functor(tp, tp, swap_spec());
  for (int o = 0; o < tp->object_count(); ++o)
    for (int i = 0; i < tp->universe_size(o); ++i) {
      Sieve r = tp->sieve_value(o, i);
      Sieve img = image_sieve(sw, r);
      CHECK(is_sieve(tp->cat(), tp->cat().objects[img.owner], sieve_names(tp->cat(), img)));
      for (int m : r.members) {
        int fm = sw.morphism_map[m];
        CHECK(std::binary_search(img.members.begin(), img.members.end(), fm));
      }
      // cross-route: the image equals the generated sieve of the raw images
      std::vector<std::string> gens;
      for (int m : r.members) gens.push_back(tp->cat().morphisms[sw.morphism_map[m]].name);
      CHECK(img == generated_sieve(tp->cat(), tp->cat().objects[img.owner], gens));
      for (int j = 0; j < tp->universe_size(o); ++j)
        if (tp->subset(o, i, j)) {
          Sieve bigger = image_sieve(sw, tp->sieve_value(o, j));
          CHECK(std::includes(bigger.members.begin(), bigger.members.end(), img.members.begin(),
                              img.members.end()));
        }
    }
}

TEST_CASE("filter preservation detects mismatched targets") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap id = build_functor(tp, tp, identity_spec(tp->cat()));
  FunctorMap sw = build_functor(tp, tp, swap_spec());
  auto filters = enumerate_filters(tp);
  int C = tp->require_object("C");
  const CoverAssignment& tri = filters[0].assignment.table[C].size() == 1
                                   ? filters[0].assignment
                                   : filters[1].assignment;
  const CoverAssignment& med = filters[0].assignment.table[C].size() == 1
                                   ? filters[1].assignment
                                   : filters[0].assignment;
  CHECK(is_filter_preserving(id, med, med));
  CHECK(is_filter_preserving(sw, med, med));  // the union sieve is symmetric
  Verdict v = is_filter_preserving(id, med, tri);
  REQUIRE_FALSE(v);
  CHECK(v.witness->axiom == "preservation");
  CHECK(is_filter_preserving(id, tri, med));  // coarser into finer is fine
}

TEST_CASE("image laws pass for the identity and the swap") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap id = build_functor(tp, tp, identity_spec(tp->cat()));
  FunctorMap sw = build_functor(tp, tp, swap_spec());
  CoverAssignment j = site(tp, true, true);
  CoverAssignment basis = trivial_topology(tp);
  for (auto* f : {&id, &sw}) {
    ImageLawReport rep = image_law_report(*f, j, j, basis);
    CHECK(rep.g_neighborhood_images.pass);
    CHECK(rep.cover_neighborhood_images.pass);
    CHECK(rep.basis_images.pass);
  }
  // swapped topology on the target also works for the swap functor
  ImageLawReport rep = image_law_report(sw, site(tp, true, false), site(tp, false, true), basis);
  CHECK(rep.g_neighborhood_images.pass);
}

TEST_CASE("a target topology missing the image sieve fails the first image law") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap id = build_functor(tp, tp, identity_spec(tp->cat()));
  ImageLawReport rep =
      image_law_report(id, site(tp, true, false), site(tp, false, false), trivial_topology(tp));
  REQUIRE_FALSE(rep.g_neighborhood_images.pass);
  CHECK(rep.g_neighborhood_images.witness->axiom == "image-g-neighborhood");
}

TEST_CASE("terminal preservation is required") {
  auto tp = Carrier::category(two_point_category());
  auto c3 = Carrier::category(poset_category(chain_lattice(3)));
  // send everything of the two-point category to the bottom of the chain:
  // the terminal "one" lands on "0", not on the chain's terminal "2"
  FunctorSpec s;
  s.objects = {{"one", "0"}, {"C", "0"}};
  for (auto& m : tp->cat().morphisms) s.morphisms.push_back({m.name, "0<=0"});
  FunctorMap f = build_functor(tp, c3, s);
  CHECK_THROWS_WITH_AS(
      image_law_report(f, site(tp, false, false), trivial_topology(c3), trivial_topology(tp)),
      doctest::Contains("PreconditionUnmet"), Error);
}

TEST_CASE("compact objects stay compact along certified site morphisms in the corpus") {
  auto tp = Carrier::category(two_point_category());
  FunctorMap id = build_functor(tp, tp, identity_spec(tp->cat()));
  FunctorMap sw = build_functor(tp, tp, swap_spec());
  CoverAssignment j = site(tp, true, true);
  for (auto* f : {&id, &sw}) {
    REQUIRE(is_filter_preserving(*f, j, j));
    for (auto& obj : tp->cat().objects) {
      CompactnessReport src = compactness_report(j, obj, CompactnessMethod::ultrafilter);
      if (!src.compact) continue;
      int to = f->object_map[tp->require_object(obj)];
      CompactnessReport dst =
          compactness_report(j, tp->object_name(to), CompactnessMethod::ultrafilter);
      CHECK(dst.compact);
    }
  }
}

TEST_SUITE_END();
