#include <algorithm>

#include "doctest.h"
#include "sieveforge/convergence.hpp"
#include "sieveforge/corpus.hpp"
#include "sieveforge/coverage.hpp"

using namespace sieveforge;

namespace {

std::vector<std::string> kernel_names(const FiniteLattice& L, const LocalePoint& p) {
  std::vector<std::string> out;
  for (int e : p.kernel) out.push_back(L.elements[e]);
  return out;
}

Point locale_point_at(const CarrierPtr& carrier, int obj, const std::vector<std::string>& dual) {
  for (auto& p : points_at(carrier, obj)) {
    std::vector<std::string> names;
    for (int e : p.dual_kernel) names.push_back(carrier->lat().elements[e]);
    if (names == dual) return p;
  }
  throw std::runtime_error("no such point at the object");
}

Point cat_point(const CarrierPtr& carrier, int obj, const std::string& name) {
  for (auto& p : points_at(carrier, obj))
    if (carrier->cat().morphisms[p.morphism].name == name) return p;
  throw std::runtime_error("no such point");
}

CoverAssignment twopt_site(const CarrierPtr& tp, bool with_x, bool with_y) {
  CoverAssignment j = trivial_topology(tp);
  if (with_x) add_sieve(j, "C", {"x", "a"});
  if (with_y) add_sieve(j, "C", {"y", "b"});
  return j;
}

}  // namespace

TEST_SUITE_BEGIN("convergence");

TEST_CASE("locale points of the chain are the two prime filters") {
  FiniteLattice C3 = chain_lattice(3);
  auto pts = locale_points(C3);
  REQUIRE(pts.size() == 2);
  CHECK(kernel_names(C3, pts[0]) == std::vector<std::string>{"0", "1"});  // dual kernel {2}
  CHECK(kernel_names(C3, pts[1]) == std::vector<std::string>{"0"});       // dual kernel {1,2}
}

TEST_CASE("a one-element lattice has no points") {
  CHECK(locale_points(divisor_lattice(1)).empty());
}

TEST_CASE("locale points match a full subset scan") {
  for (auto L : {chain_lattice(3), square_lattice(), divisor_lattice(12), divisor_lattice(30)}) {
    auto pts = locale_points(L);
    // oracle: scan all subsets of the carrier for prime-filter conditions
    std::vector<std::vector<int>> expected;
    for (unsigned mask = 0; mask < (1u << L.size()); ++mask) {
      std::vector<int> up;
      std::vector<bool> in(L.size(), false);
      for (int e = 0; e < L.size(); ++e)
        if (mask & (1u << e)) {
          up.push_back(e);
          in[e] = true;
        }
      if (up.empty() || !in[L.top] || in[L.bottom]) continue;
      bool ok = is_up_set(L, up);
      for (size_t i = 0; i < up.size() && ok; ++i)
        for (size_t j = i; j < up.size() && ok; ++j) ok = in[L.meet[up[i]][up[j]]];
      for (int x = 0; x < L.size() && ok; ++x)
        for (int y = 0; y < L.size() && ok; ++y)
          if (in[L.join[x][y]]) ok = in[x] || in[y];
      if (ok) expected.push_back(up);
    }
    REQUIRE(pts.size() == expected.size());
    for (auto& e : expected) {
      bool found = false;
      for (auto& p : pts) found |= p.dual_kernel == e;
      CHECK(found);
    }
  }
  CHECK(locale_points(divisor_lattice(12)).size() == 3);
  CHECK_THROWS_WITH_AS(locale_points(diamond_lattice()), doctest::Contains("NotAFrame"), Error);
}

TEST_CASE("points at an object respect the flavor") {
  auto tp = Carrier::category(two_point_category());
  CHECK(points_at(tp, "C").size() == 2);
  CHECK(points_at(tp, "one").size() == 1);
  auto c3 = Carrier::locale(chain_lattice(3));
  CHECK(points_at(c3, "0").size() == 2);  // both kernels contain the bottom
  CHECK(points_at(c3, "1").size() == 1);
  CHECK(points_at(c3, "2").empty());  // no frame map sends the top to 0
}

TEST_CASE("categorical neighborhoods require a factorization through the point") {
  auto tp = Carrier::category(two_point_category());
  CoverAssignment j = twopt_site(tp, true, false);  // {t_C, <x>}
  int C = tp->require_object("C");
  Point x = cat_point(tp, C, "x");
  Point y = cat_point(tp, C, "y");
  auto gx = g_neighborhoods(j, C, x);
  auto gy = g_neighborhoods(j, C, y);
  CHECK(gx.size() == 2);  // the maximal sieve and <x>
  CHECK(gy.size() == 1);  // only the maximal sieve
  int sx = tp->sieve_index_of_names(C, {"x", "a"});
  CHECK(std::find(gx.begin(), gx.end(), sx) != gx.end());
  CHECK(std::find(gy.begin(), gy.end(), sx) == gy.end());
  CHECK_THROWS_WITH_AS(g_neighborhoods(j, tp->require_object("one"), x),
                       doctest::Contains("PointMismatch"), Error);
}

TEST_CASE("locale neighborhoods are containment in the kernel") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment tri = standard_topology(TopologyKind::trivial, c3);
  Point p = locale_point_at(c3, c3->require_object("1"), {"2"});  // kernel {0,1}
  auto g = g_neighborhoods(tri, c3->require_object("1"), p);
  REQUIRE(g.size() == 1);
  CHECK(c3->sieve_names_of(c3->require_object("1"), g[0]) == std::vector<std::string>{"0", "1"});
  // validity needs the element inside the kernel
  CHECK_THROWS_WITH_AS(g_neighborhoods(tri, c3->require_object("2"), p),
                       doctest::Contains("PointMismatch"), Error);
}

TEST_CASE("every covering sieve is a locale neighborhood of every valid point") {
  // the kernel is a down-set containing the element, so V ⊆ ↓k ⊆ kernel
  for (auto L : {chain_lattice(3), square_lattice(), divisor_lattice(12)}) {
    auto carrier = Carrier::locale(L);
    for (auto kind : {TopologyKind::trivial, TopologyKind::dense, TopologyKind::discrete}) {
      CoverAssignment j = standard_topology(kind, carrier);
      for (int o = 0; o < carrier->object_count(); ++o)
        for (auto& p : points_at(carrier, o))
          CHECK(g_neighborhoods(j, o, p) == j.table[o]);
    }
  }
}

TEST_CASE("cover neighborhoods on the two-point sites") {
  auto tp = Carrier::category(two_point_category());
  CoverAssignment j = twopt_site(tp, true, false);
  int C = tp->require_object("C");
  NeighborhoodSystem nx = neighborhood_system(j, C, cat_point(tp, C, "x"));
  CHECK(nx.cover_nbhds.size() == 3);  // <x>, <x>∪<y>, maximal
  NeighborhoodSystem ny = neighborhood_system(j, C, cat_point(tp, C, "y"));
  REQUIRE(ny.cover_nbhds.size() == 1);
  CHECK(ny.cover_nbhds[0] == tp->maximal_sieve_index(C));
  CHECK(nx.filtered_object.pass);
  CHECK(ny.filtered_object.pass);
  CHECK_FALSE(nx.blind);
}

TEST_CASE("locale cover neighborhoods under the dense topology") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment j = standard_topology(TopologyKind::dense, c3);
  int zero = c3->require_object("0");
  Point p = locale_point_at(c3, zero, {"1", "2"});  // kernel {0}
  NeighborhoodSystem ns = neighborhood_system(j, zero, p);
  REQUIRE(ns.g_nbhds.size() == 1);
  CHECK(c3->sieve_names_of(zero, ns.g_nbhds[0]) == std::vector<std::string>{"0"});
  CHECK(ns.cover_nbhds == ns.g_nbhds);
  CHECK(ns.filtered_object.pass);
}

TEST_CASE("filtered-object axioms hold on empty-free sites and fail on the discrete locale") {
  auto tp = Carrier::category(two_point_category());
  for (auto j : {trivial_topology(tp), discrete_topology(tp), twopt_site(tp, true, true)})
    for (int o = 0; o < tp->object_count(); ++o)
      for (auto& p : points_at(tp, o)) {
        NeighborhoodSystem ns = neighborhood_system(j, o, p);
        if (!ns.blind) CHECK(ns.filtered_object.pass);
      }
  auto c3 = Carrier::locale(chain_lattice(3));
  for (auto kind : {TopologyKind::trivial, TopologyKind::atomic, TopologyKind::dense}) {
    CoverAssignment j = standard_topology(kind, c3);
    for (int o = 0; o < c3->object_count(); ++o)
      for (auto& p : points_at(c3, o)) CHECK(neighborhood_system(j, o, p).filtered_object.pass);
  }
  // the discrete locale topology makes the empty sieve a neighborhood
  CoverAssignment dis = standard_topology(TopologyKind::discrete, c3);
  Point p = locale_point_at(c3, 0, {"1", "2"});
  NeighborhoodSystem ns = neighborhood_system(dis, 0, p);
  REQUIRE_FALSE(ns.filtered_object.pass);
  CHECK(ns.filtered_object.witness->axiom == "N3");
}

TEST_CASE("blind points flag sites that never witness them") {
  auto tp = Carrier::category(two_point_category());
  CoverAssignment bare = empty_assignment(tp);  // no covering sieves at all
  int C = tp->require_object("C");
  NeighborhoodSystem ns = neighborhood_system(bare, C, cat_point(tp, C, "x"));
  CHECK(ns.blind);
  CHECK(ns.cover_nbhds.empty());
}

TEST_CASE("convergence compares cover neighborhoods with the filter table") {
  auto tp = Carrier::category(two_point_category());
  CoverAssignment j = twopt_site(tp, true, false);
  int C = tp->require_object("C");
  auto filters = enumerate_filters(tp);
  REQUIRE(filters.size() == 2);
  const CoverAssignment& tri = filters[0].assignment.table[C].size() == 1
                                   ? filters[0].assignment
                                   : filters[1].assignment;
  const CoverAssignment& med = filters[0].assignment.table[C].size() == 1
                                   ? filters[1].assignment
                                   : filters[0].assignment;
  Point x = cat_point(tp, C, "x");
  Point y = cat_point(tp, C, "y");
  // y demands only the maximal sieve, x demands <x> as well
  CHECK(converges(tri, j, C, y));
  CHECK(converges(med, j, C, y));
  CHECK_FALSE(converges(tri, j, C, x));
  CHECK_FALSE(converges(med, j, C, x));
  // under the trivial site both points only demand the maximal sieve
  CoverAssignment plain = twopt_site(tp, false, false);
  CHECK(converges(tri, plain, C, x));
  CHECK(converges(tri, plain, C, y));
}

TEST_CASE("join-criterion convergence") {
  auto c3 = Carrier::locale(chain_lattice(3));
  FiniteLattice L = c3->lat();
  CoverAssignment tri = trivial_topology(c3);
  CHECK(sup_converges(L, tri, "2"));  // the maximal sieve joins to its owner
  CoverAssignment finer = empty_assignment(c3);
  add_sieve(finer, "2", {"0", "1"});
  Saturation s = saturate_subbase(finer);
  REQUIRE(s.proper);
  CHECK_FALSE(sup_converges(L, s.filter, "2"));  // {0,1} joins to 1

  auto sq = Carrier::locale(square_lattice());
  CoverAssignment f = empty_assignment(sq);
  add_sieve(f, "top", {"bot", "a", "b"});
  Saturation ssq = saturate_subbase(f);
  REQUIRE(ssq.proper);
  CHECK(sup_converges(sq->lat(), ssq.filter, "top"));  // a ∨ b = top

  // oracle: recompute the criterion by folding the join table directly
  for (auto& cert : enumerate_filters(c3)) {
    for (int e = 0; e < L.size(); ++e) {
      bool direct = true;
      for (int idx : cert.assignment.table[e]) {
        int v = L.bottom;
        for (int m : c3->sieve_value(e, idx).members) v = L.join[v][m];
        direct = direct && v == e;
      }
      CHECK(sup_converges(L, cert.assignment, L.elements[e]) == direct);
    }
  }
}

TEST_CASE("closure collects the points meeting every neighborhood") {
  auto tp = Carrier::category(two_point_category());
  int C = tp->require_object("C");
  CoverAssignment j2 = twopt_site(tp, true, false);
  auto cl = closure(j2, "C", {"x", "a"});
  CHECK(cl.size() == 2);  // y's only neighborhood is maximal, which meets <x>
  CoverAssignment j3 = twopt_site(tp, true, true);
  auto cl3 = closure(j3, "C", {"x", "a"});
  REQUIRE(cl3.size() == 1);
  CHECK(tp->cat().morphisms[cl3[0].morphism].name == "x");  // <y> misses <x>
  // everything meets the maximal sieve
  CHECK(closure(j3, C, tp->maximal_sieve_index(C)).size() == 2);
  // nothing meets the empty sieve
  CHECK(closure(j3, C, tp->empty_sieve(C)).empty());
}

TEST_CASE("clusters and limits on the two-point sites") {
  auto tp = Carrier::category(two_point_category());
  int C = tp->require_object("C");
  CoverAssignment j3 = twopt_site(tp, true, true);
  auto filters = enumerate_filters(tp);
  const CoverAssignment& tri = filters[0].assignment.table[C].size() == 1
                                   ? filters[0].assignment
                                   : filters[1].assignment;
  const CoverAssignment& med = filters[0].assignment.table[C].size() == 1
                                   ? filters[1].assignment
                                   : filters[0].assignment;
  CHECK(cluster_points(tri, j3, C).size() == 2);
  CHECK(limit_points(tri, j3, C).empty());
  CHECK(cluster_points(med, j3, C).size() == 2);
  CHECK(limit_points(med, j3, C).empty());
  // under the trivial site limits and clusters coincide
  CoverAssignment plain = twopt_site(tp, false, false);
  CHECK(limit_points(tri, plain, C).size() == 2);
  CHECK(cluster_points(tri, plain, C).size() == 2);
}

TEST_CASE("every limit point is a cluster point") {
  auto tp = Carrier::category(two_point_category());
  auto c3 = Carrier::locale(chain_lattice(3));
  for (auto& site : {twopt_site(tp, false, false), twopt_site(tp, true, false),
                     twopt_site(tp, true, true)})
    for (auto& f : enumerate_filters(tp))
      for (int o = 0; o < tp->object_count(); ++o) {
        auto limits = limit_points(f.assignment, site, o);
        auto clusters = cluster_points(f.assignment, site, o);
        for (auto& p : limits)
          CHECK(std::find(clusters.begin(), clusters.end(), p) != clusters.end());
      }
  for (auto kind : {TopologyKind::trivial, TopologyKind::dense}) {
    CoverAssignment j = standard_topology(kind, c3);
    for (auto& f : enumerate_filters(c3))
      for (int o = 0; o < c3->object_count(); ++o) {
        auto limits = limit_points(f.assignment, j, o);
        auto clusters = cluster_points(f.assignment, j, o);
        for (auto& p : limits)
          CHECK(std::find(clusters.begin(), clusters.end(), p) != clusters.end());
      }
  }
}

TEST_CASE("one-object sites are compact") {
  CategorySpec spec;
  spec.objects = {"star"};
  spec.morphisms = {{"id", "star", "star"}};
  spec.identities = {{"star", "id"}};
  auto star = Carrier::category(build_category(spec));
  for (auto method : {CompactnessMethod::ultrafilter, CompactnessMethod::exhaustive}) {
    CompactnessReport r = compactness_report(trivial_topology(star), "star", method);
    CHECK(r.quasi_compact);
    CHECK(r.hausdorff);
    CHECK(r.compact);
  }
}

TEST_CASE("the bare two-point site is not hausdorff, the separated one is") {
  auto tp = Carrier::category(two_point_category());
  CompactnessReport plain =
      compactness_report(twopt_site(tp, false, false), "C", CompactnessMethod::ultrafilter);
  CHECK(plain.quasi_compact);
  CHECK_FALSE(plain.hausdorff);
  REQUIRE(plain.limit_pair.has_value());
  REQUIRE(plain.doubly_converging_filter.has_value());
  // the witness filter really converges to both points
  CHECK(converges(*plain.doubly_converging_filter, twopt_site(tp, false, false),
                  tp->require_object("C"), plain.limit_pair->first));
  CHECK(converges(*plain.doubly_converging_filter, twopt_site(tp, false, false),
                  tp->require_object("C"), plain.limit_pair->second));

  CompactnessReport sep =
      compactness_report(twopt_site(tp, true, true), "C", CompactnessMethod::ultrafilter);
  CHECK(sep.quasi_compact);
  CHECK(sep.hausdorff);
  CHECK(sep.compact);
}

TEST_CASE("compactness methods agree on the fixtures") {
  auto tp = Carrier::category(two_point_category());
  for (auto& site : {twopt_site(tp, false, false), twopt_site(tp, true, false),
                     twopt_site(tp, true, true), discrete_topology(tp)})
    for (auto& obj : tp->cat().objects) {
      CompactnessReport u = compactness_report(site, obj, CompactnessMethod::ultrafilter);
      CompactnessReport e = compactness_report(site, obj, CompactnessMethod::exhaustive);
      CHECK(u.quasi_compact == e.quasi_compact);
      CHECK(u.hausdorff == e.hausdorff);
    }
  auto c3 = Carrier::locale(chain_lattice(3));
  for (auto kind : {TopologyKind::trivial, TopologyKind::dense, TopologyKind::discrete})
    for (auto& obj : c3->lat().elements) {
      CoverAssignment j = standard_topology(kind, c3);
      CompactnessReport u = compactness_report(j, obj, CompactnessMethod::ultrafilter);
      CompactnessReport e = compactness_report(j, obj, CompactnessMethod::exhaustive);
      CHECK(u.quasi_compact == e.quasi_compact);
      CHECK(u.hausdorff == e.hausdorff);
    }
}

TEST_CASE("locale compactness under the trivial topology counts valid points") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment j = standard_topology(TopologyKind::trivial, c3);
  CompactnessReport r0 = compactness_report(j, "0", CompactnessMethod::ultrafilter);
  CHECK(r0.quasi_compact);
  CHECK_FALSE(r0.hausdorff);  // two valid points share every neighborhood
  CompactnessReport r1 = compactness_report(j, "1", CompactnessMethod::ultrafilter);
  CHECK(r1.compact);  // exactly one valid point
  CompactnessReport r2 = compactness_report(j, "2", CompactnessMethod::ultrafilter);
  CHECK_FALSE(r2.quasi_compact);  // no valid points at the top
  CHECK(r2.hausdorff);
}

TEST_CASE("meets of compact divisor elements land on a non-compact meet") {
  auto d12 = Carrier::locale(divisor_lattice(12));
  for (auto kind : {TopologyKind::trivial, TopologyKind::dense}) {
    CoverAssignment j = standard_topology(kind, d12);
    CHECK(compactness_report(j, "4", CompactnessMethod::ultrafilter).compact);
    CHECK(compactness_report(j, "6", CompactnessMethod::ultrafilter).compact);
    CHECK_FALSE(compactness_report(j, "2", CompactnessMethod::ultrafilter).compact);
    Verdict v = tychonoff_check(j, {"4", "6"});
    REQUIRE_FALSE(v);
    CHECK(v.witness->objects == std::vector<std::string>{"2"});
    // single compact target passes trivially
    CHECK(tychonoff_check(j, {"4"}));
  }
}

TEST_CASE("tychonoff rejects non-compact inputs") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment j = standard_topology(TopologyKind::dense, c3);
  // the top element has no valid points, so it is never quasi-compact
  CHECK_THROWS_WITH_AS(tychonoff_check(j, {"2", "1"}), doctest::Contains("NotCompactInput"),
                       Error);
  CHECK(tychonoff_check(j, {"1"}));
}

TEST_SUITE_END();
