#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "sieveforge/corpus.hpp"
#include "sieveforge/lattice.hpp"

using namespace sieveforge;

namespace {

// brute-force glb/lub straight from the order relation
int glb(const FiniteLattice& L, int x, int y) {
  int best = -1;
  for (int z = 0; z < L.size(); ++z) {
    if (!L.leq[z][x] || !L.leq[z][y]) continue;
    if (best < 0 || L.leq[best][z]) best = z;
  }
  for (int z = 0; z < L.size(); ++z)
    if (L.leq[z][x] && L.leq[z][y] && !L.leq[z][best]) return -1;
  return best;
}

bool squarefree(long long n) {
  for (long long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("chain from pairs has min meets and max joins") {
  FiniteLattice L = chain_lattice(3);
  CHECK(L.size() == 3);
  CHECK(L.bottom == 0);
  CHECK(L.top == 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(L.meet[i][j] == std::min(i, j));
      CHECK(L.join[i][j] == std::max(i, j));
    }
}

TEST_CASE("square lattice resolves meets and joins of incomparables") {
  FiniteLattice L = square_lattice();
  int a = L.require("a"), b = L.require("b");
  CHECK(L.meet[a][b] == L.bottom);
  CHECK(L.join[a][b] == L.top);
  CHECK_FALSE(L.leq[a][b]);
  CHECK_FALSE(L.leq[b][a]);
}

TEST_CASE("two incomparable elements without bounds are rejected") {
  CHECK_THROWS_WITH_AS(build_lattice({"a", "b"}, {}), doctest::Contains("NotALattice"), Error);
}

TEST_CASE("antisymmetry violations are rejected") {
  try {
    build_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL("expected NotAPartialOrder");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAPartialOrder");
    CHECK(e.witness().axiom == "antisymmetry");
  }
}

TEST_CASE("meet and join tables agree with bounds computed from the order") {
  for (const FiniteLattice& L : {chain_lattice(3), square_lattice(), divisor_lattice(12)})
    for (int x = 0; x < L.size(); ++x)
      for (int y = 0; y < L.size(); ++y) {
        CHECK(L.meet[x][y] == glb(L, x, y));
        CHECK(L.leq[L.meet[x][y]][x]);
        CHECK(L.leq[x][L.join[x][y]]);
      }
}

TEST_CASE("divisor lattice of 12") {
  FiniteLattice L = divisor_lattice(12);
  CHECK(L.elements == std::vector<std::string>{"1", "2", "3", "4", "6", "12"});
  CHECK(L.elements[L.bottom] == "1");
  CHECK(L.elements[L.top] == "12");
  CHECK(L.elements[L.meet[L.require("4")][L.require("6")]] == "2");
  CHECK(L.elements[L.join[L.require("4")][L.require("6")]] == "12");
}

TEST_CASE("divisor lattice edge cases") {
  CHECK(divisor_lattice(1).size() == 1);
  FiniteLattice cube = divisor_lattice(30);
  CHECK(cube.size() == 8);
  CHECK(is_boolean(cube));
  CHECK_THROWS_AS(divisor_lattice(0), Error);
}

TEST_CASE("divisor lattice matches the generic builder on the same pairs") {
  FiniteLattice direct = divisor_lattice(12);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < direct.size(); ++i)
    for (int j = 0; j < direct.size(); ++j)
      if (direct.leq[i][j]) pairs.push_back({direct.elements[i], direct.elements[j]});
  CHECK(build_lattice(direct.elements, pairs) == direct);
}

TEST_CASE("principal sets") {
  FiniteLattice D12 = divisor_lattice(12);
  CHECK(principal_down(D12, "6").names() == std::vector<std::string>{"1", "2", "3", "6"});
  CHECK(principal_up(D12, "4").names() == std::vector<std::string>{"4", "12"});
  FiniteLattice C3 = chain_lattice(3);
  CHECK(principal_down(C3, "0").names() == std::vector<std::string>{"0"});
  CHECK_THROWS_AS(principal_down(C3, "9"), Error);
}

TEST_CASE("down and up closures") {
  FiniteLattice D12 = divisor_lattice(12);
  CHECK(closure_down(D12, {"4", "6"}).names() ==
        std::vector<std::string>{"1", "2", "3", "4", "6"});
  CHECK(closure_down(D12, {}).names().empty());
  FiniteLattice C3 = chain_lattice(3);
  CHECK(closure_up(C3, {"1"}).names() == std::vector<std::string>{"1", "2"});
}

TEST_CASE("principal sets are closed and closures are least") {
  FiniteLattice D12 = divisor_lattice(12);
  for (auto& e : D12.elements) {
    CHECK(is_down_set(D12, principal_down(D12, e).members));
    CHECK(is_up_set(D12, principal_up(D12, e).members));
  }
  // closure_down({4,6}) equals the intersection of all down-sets containing {4,6}
  std::vector<int> target = closure_down(D12, {"4", "6"}).members;
  std::vector<int> all(D12.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> best;
  for (auto& d : all_down_sets(D12, all, 1 << 20)) {
    bool contains = std::binary_search(d.begin(), d.end(), D12.require("4")) &&
                    std::binary_search(d.begin(), d.end(), D12.require("6"));
    if (!contains) continue;
    if (best.empty()) best = d;
    std::vector<int> meet;
    std::set_intersection(best.begin(), best.end(), d.begin(), d.end(), std::back_inserter(meet));
    best = meet;
  }
  CHECK(best == target);
}

TEST_CASE("frames: chains and divisor lattices pass, the diamond fails") {
  CHECK(is_frame(chain_lattice(3)));
  CHECK(is_frame(divisor_lattice(12)));
  Verdict v = is_frame(diamond_lattice());
  REQUIRE_FALSE(v);
  REQUIRE(v.witness.has_value());
  // replay the witness triple
  FiniteLattice M3 = diamond_lattice();
  int x = M3.require(v.witness->objects[0]);
  int y = M3.require(v.witness->objects[1]);
  int z = M3.require(v.witness->objects[2]);
  CHECK(M3.meet[x][M3.join[y][z]] != M3.join[M3.meet[x][y]][M3.meet[x][z]]);
}

TEST_CASE("boolean recognition") {
  CHECK(is_boolean(divisor_lattice(30)));
  CHECK_FALSE(is_boolean(divisor_lattice(12)));
  CHECK_FALSE(is_boolean(chain_lattice(3)));
}

TEST_CASE("boolean divisor lattices are exactly the squarefree ones up to 60") {
  for (long long n = 1; n <= 60; ++n)
    CHECK(is_boolean(divisor_lattice(n)) == squarefree(n));
}

TEST_CASE("down-set enumeration is canonical and budget-guarded") {
  FiniteLattice C3 = chain_lattice(3);
  std::vector<int> all{0, 1, 2};
  auto sets = all_down_sets(C3, all, 1 << 20);
  CHECK(sets.size() == 4);  // empty, {0}, {0,1}, {0,1,2}
  CHECK(sets.front().empty());
  CHECK(sets.back().size() == 3);
  CHECK_THROWS_WITH_AS(all_down_sets(C3, all, 2), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("up-set enumeration mirrors down-sets") {
  FiniteLattice SQ = square_lattice();
  auto ups = all_up_sets(SQ, 1 << 20);
  CHECK(ups.size() == 6);  // antichains of the 2x2 grid
  for (auto& u : ups) CHECK(is_up_set(SQ, u));
}

TEST_SUITE_END();
