#include "doctest.h"
#include "sieveforge/corpus.hpp"
#include "sieveforge/coverage.hpp"
#include "sieveforge/filters.hpp"

using namespace sieveforge;

namespace {

std::vector<std::vector<std::string>> table_names(const CoverAssignment& a, std::string_view obj) {
  int o = a.carrier->require_object(obj);
  std::vector<std::vector<std::string>> out;
  for (int idx : a.table[o]) out.push_back(a.carrier->sieve_names_of(o, idx));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("coverage");

TEST_CASE("standard topologies certify on the fixtures") {
  for (auto kind : {TopologyKind::trivial, TopologyKind::discrete, TopologyKind::atomic,
                    TopologyKind::dense}) {
    for (auto L : {chain_lattice(3), square_lattice(), divisor_lattice(12)}) {
      auto carrier = Carrier::locale(L);
      CHECK(check_topology(standard_topology(kind, carrier)));
    }
  }
}

TEST_CASE("trivial topology assigns exactly the maximal sieves") {
  auto d12 = Carrier::locale(divisor_lattice(12));
  CoverAssignment j = standard_topology(TopologyKind::trivial, d12);
  CHECK(table_names(j, "6") ==
        std::vector<std::vector<std::string>>{{"1", "2", "3", "6"}});
}

TEST_CASE("dense topology on the chain keeps the sieves reaching bottom") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment j = standard_topology(TopologyKind::dense, c3);
  CHECK(table_names(j, "2") ==
        std::vector<std::vector<std::string>>{{"0"}, {"0", "1"}, {"0", "1", "2"}});
  CHECK(table_names(j, "0") == std::vector<std::vector<std::string>>{{"0"}});
}

TEST_CASE("atomic topology at the bottom of the chain") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment j = standard_topology(TopologyKind::atomic, c3);
  CHECK(table_names(j, "0") == std::vector<std::vector<std::string>>{{"0"}});
}

TEST_CASE("an assignment missing its bottom row fails the axioms") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment j = empty_assignment(c3);
  add_sieve(j, "2", {"0", "1"});
  add_sieve(j, "2", {"0", "1", "2"});
  add_sieve(j, "1", {"0", "1"});
  Verdict v = check_topology(j);
  REQUIRE_FALSE(v);
  CHECK(v.witness->axiom == "maximality");
  CHECK(v.witness->objects == std::vector<std::string>{"0"});
}

TEST_CASE("stability failures carry the arrow and both sieves") {
  auto tp = Carrier::category(two_point_category());
  CoverAssignment j = trivial_topology(tp);
  add_sieve(j, "C", {"x", "a"});
  Verdict v = check_topology(j);
  REQUIRE_FALSE(v);
  CHECK(v.witness->axiom == "stability");
}

TEST_CASE("transitivity failures name the covered sieve") {
  // the filter generated by {0,1}@2, {0}@1 satisfies the filter axioms but
  // covers {0} through {0,1} without assigning it
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment f = empty_assignment(c3);
  add_sieve(f, "2", {"0", "1"});
  add_sieve(f, "1", {"0"});
  Saturation s = saturate_subbase(f);
  REQUIRE(s.proper);
  REQUIRE(check_filter(s.filter));
  Verdict v = check_topology(s.filter);
  REQUIRE_FALSE(v);
  CHECK(v.witness->axiom == "transitivity");
}

TEST_CASE("sup topology on the chain and the square") {
  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment j3 = sup_topology(c3);
  CHECK(table_names(j3, "2") == std::vector<std::vector<std::string>>{{"0", "1", "2"}});
  auto sq = Carrier::locale(square_lattice());
  CoverAssignment jsq = sup_topology(sq);
  CHECK(table_names(jsq, "top") ==
        std::vector<std::vector<std::string>>{{"bot", "a", "b"}, {"bot", "a", "b", "top"}});
  // the empty join is the bottom, so the empty sieve covers bot
  CHECK(table_names(jsq, "bot") == std::vector<std::vector<std::string>>{{}, {"bot"}});
  CHECK_THROWS_WITH_AS(sup_topology(Carrier::locale(diamond_lattice())),
                       doctest::Contains("NotAFrame"), Error);
}

TEST_CASE("assignment comparison is the pointwise inclusion order") {
  auto d12 = Carrier::locale(divisor_lattice(12));
  CoverAssignment tri = standard_topology(TopologyKind::trivial, d12);
  CoverAssignment dis = standard_topology(TopologyKind::discrete, d12);
  CHECK(compare_assignments(tri, dis) == AssignmentOrder::less);
  CHECK(compare_assignments(dis, tri) == AssignmentOrder::greater);
  CHECK(compare_assignments(tri, tri) == AssignmentOrder::equal);

  auto c3 = Carrier::locale(chain_lattice(3));
  CoverAssignment a = trivial_topology(c3);
  CoverAssignment b = trivial_topology(c3);
  add_sieve(a, "2", {"0", "1"});
  add_sieve(b, "2", {"0"});
  CHECK(compare_assignments(a, b) == AssignmentOrder::incomparable);
  CHECK_THROWS_WITH_AS(compare_assignments(a, tri), doctest::Contains("CarrierMismatch"), Error);
}

TEST_CASE("comparison is a partial order on a family of assignments") {
  auto c3 = Carrier::locale(chain_lattice(3));
  std::vector<CoverAssignment> family{
      standard_topology(TopologyKind::trivial, c3), standard_topology(TopologyKind::dense, c3),
      standard_topology(TopologyKind::discrete, c3), sup_topology(c3)};
  auto le = [](const CoverAssignment& x, const CoverAssignment& y) {
    auto c = compare_assignments(x, y);
    return c == AssignmentOrder::less || c == AssignmentOrder::equal;
  };
  for (auto& x : family) CHECK(compare_assignments(x, x) == AssignmentOrder::equal);
  for (auto& x : family)
    for (auto& y : family) {
      if (le(x, y) && le(y, x)) CHECK(compare_assignments(x, y) == AssignmentOrder::equal);
      for (auto& z : family)
        if (le(x, y) && le(y, z)) CHECK(le(x, z));
    }
}

TEST_CASE("topology-to-filter classification") {
  auto d12 = Carrier::locale(divisor_lattice(12));
  CHECK(topology_is_filter(standard_topology(TopologyKind::trivial, d12)));
  auto c3 = Carrier::locale(chain_lattice(3));
  CHECK(topology_is_filter(standard_topology(TopologyKind::atomic, c3)));
  Verdict v = topology_is_filter(standard_topology(TopologyKind::discrete, c3));
  REQUIRE_FALSE(v);
  CHECK(v.witness->axiom == "empty-cover");
  // sup topology assigns the empty sieve at the bottom, so it is not a filter
  CHECK_FALSE(topology_is_filter(sup_topology(c3)));
  // non-topologies are rejected up front
  CoverAssignment raw = trivial_topology(Carrier::category(two_point_category()));
  add_sieve(raw, "C", {"x", "a"});
  CHECK_THROWS_WITH_AS(topology_is_filter(raw), doctest::Contains("NotATopology"), Error);
}

TEST_CASE("topology-to-filter agrees with the filter axioms on certified topologies") {
  for (auto L : {chain_lattice(3), square_lattice(), divisor_lattice(12)}) {
    auto carrier = Carrier::locale(L);
    for (auto kind : {TopologyKind::trivial, TopologyKind::discrete, TopologyKind::atomic,
                      TopologyKind::dense}) {
      CoverAssignment j = standard_topology(kind, carrier);
      CHECK(topology_is_filter(j).pass == check_filter(j).pass);
    }
    CoverAssignment s = sup_topology(carrier);
    CHECK(topology_is_filter(s).pass == check_filter(s).pass);
  }
  auto tp = Carrier::category(two_point_category());
  for (auto j : {trivial_topology(tp), discrete_topology(tp)})
    CHECK(topology_is_filter(j).pass == check_filter(j).pass);
}

TEST_SUITE_END();
