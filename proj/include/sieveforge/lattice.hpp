#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sieveforge/verdict.hpp"

namespace sieveforge {

/// Finite bounded lattice over opaque string identifiers. The order is kept
/// as a dense relation and meet/join are precomputed total tables, so every
/// downstream enumeration is a table lookup. Canonical element order is
/// declaration order. Immutable after construction.
struct FiniteLattice {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;   // leq[x][y] <=> x <= y
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;
  int bottom = -1;
  int top = -1;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(std::string_view name) const;
  int require(std::string_view name) const;  // UnknownElement on miss

  bool operator==(const FiniteLattice&) const = default;
};

/// Subset of a lattice's carrier, members ascending in canonical order.
struct ElementSet {
  const FiniteLattice* carrier = nullptr;
  std::vector<int> members;

  std::vector<std::string> names() const;
  bool operator==(const ElementSet&) const = default;
};

/// Builds a lattice from declared elements and order pairs: the relation is
/// the reflexive-transitive closure of the pairs. Throws NotAPartialOrder
/// when antisymmetry breaks and NotALattice when a pair has no meet or join.
FiniteLattice build_lattice(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& order_pairs);

/// Divisors of n under divisibility; meet = gcd, join = lcm.
FiniteLattice divisor_lattice(long long n);

ElementSet principal_down(const FiniteLattice& L, std::string_view x);
ElementSet principal_up(const FiniteLattice& L, std::string_view x);
ElementSet closure_down(const FiniteLattice& L, const std::vector<std::string>& members);
ElementSet closure_up(const FiniteLattice& L, const std::vector<std::string>& members);

/// Binary distributivity over all triples (enough for finite carriers).
Verdict is_frame(const FiniteLattice& L);

/// Distributive and complemented.
bool is_boolean(const FiniteLattice& L);

// --- element-index helpers shared across modules -------------------------

bool is_down_set(const FiniteLattice& L, std::span<const int> members);
bool is_up_set(const FiniteLattice& L, std::span<const int> members);

/// Join of a member list; the empty join is bottom.
int join_of(const FiniteLattice& L, std::span<const int> members);
/// Meet of a member list; the empty meet is top.
int meet_of(const FiniteLattice& L, std::span<const int> members);

/// All down-sets of the sub-poset induced on `universe` (ascending element
/// indices), canonically ordered (size, then lexicographic). Throws
/// BudgetExceeded when more than `budget` down-sets exist.
std::vector<std::vector<int>> all_down_sets(const FiniteLattice& L, std::span<const int> universe,
                                            std::size_t budget);

/// All up-sets of the full carrier, canonically ordered.
std::vector<std::vector<int>> all_up_sets(const FiniteLattice& L, std::size_t budget);

}  // namespace sieveforge
