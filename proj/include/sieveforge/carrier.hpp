#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sieveforge/bits.hpp"
#include "sieveforge/category.hpp"
#include "sieveforge/lattice.hpp"
#include "sieveforge/verdict.hpp"

namespace sieveforge {

enum class Flavor { category, locale };

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

/// A finite category or locale together with its precomputed sieve calculus.
///
/// Per object C the "member space" is the list of arrows into C (morphisms
/// with codomain C, or the elements of ↓k in the locale flavor); a sieve is
/// a bitset over that space, and the member positions double as the arrows
/// along which pullback/stability quantify. The complete, canonically
/// ordered sieve universe per object is enumerated at construction
/// (budget-guarded), so cover tables elsewhere are plain index sets.
class Carrier {
 public:
  static std::shared_ptr<const Carrier> category(FiniteCategory cat,
                                                 std::size_t max_sieves = kDefaultBudget);
  static std::shared_ptr<const Carrier> locale(FiniteLattice lat,
                                               std::size_t max_sieves = kDefaultBudget);

  Flavor flavor() const { return flavor_; }
  const FiniteCategory& cat() const;
  const FiniteLattice& lat() const;

  int object_count() const { return static_cast<int>(object_names_.size()); }
  const std::string& object_name(int o) const { return object_names_[o]; }
  int object_index(std::string_view name) const;
  int require_object(std::string_view name) const;

  // member space of an object (== arrows into it)
  int member_count(int o) const { return static_cast<int>(members_[o].size()); }
  /// Global id: morphism index (category) or element index (locale).
  int member_id(int o, int pos) const { return members_[o][pos]; }
  std::string member_name(int o, int pos) const;
  /// Source object of the arrow at `pos` (dom of the morphism / the element).
  int arrow_source(int o, int pos) const { return sources_[o][pos]; }

  // sieve universe
  int universe_size(int o) const { return static_cast<int>(universe_[o].size()); }
  const Bits& sieve_bits(int o, int idx) const { return universe_[o][idx]; }
  int empty_sieve(int /*obj*/) const { return 0; }
  int maximal_sieve_index(int o) const { return universe_size(o) - 1; }
  /// Index of a member bitset in the universe; -1 when it is not a sieve.
  int index_of(int o, const Bits& b) const;

  int intersect(int o, int i, int j) const;
  int unite(int o, int i, int j) const;
  bool subset(int o, int i, int j) const { return universe_[o][i].subset_of(universe_[o][j]); }
  /// Ascending universe indices of all sieves containing sieve `idx`.
  std::vector<int> supersets_of(int o, int idx) const;
  /// Pullback along the arrow at `pos`; result indexes universe(arrow_source).
  int pullback(int o, int pos, int idx) const;

  /// Locale flavor: join of the sieve's members (empty join = bottom).
  int sieve_join(int o, int idx) const;

  Sieve sieve_value(int o, int idx) const;           // members as global ids
  std::vector<std::string> sieve_names_of(int o, int idx) const;
  std::string sieve_label(int o, int idx) const;     // "[a b c]"
  /// Universe index of a sieve given by member names; validates sievehood.
  int sieve_index_of_names(int o, const std::vector<std::string>& members) const;

  bool same_carrier(const Carrier& other) const;

 private:
  Carrier() = default;
  void build_universes(std::size_t max_sieves);

  Flavor flavor_ = Flavor::locale;
  FiniteCategory cat_;
  FiniteLattice lat_;
  std::vector<std::string> object_names_;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<int>> sources_;
  // comp_[o][pos][i]: position in members_[o] of (member i of source(pos)) pushed along pos
  std::vector<std::vector<std::vector<int>>> comp_;
  // below_[o][i]: positions that factor through member i (strictly or not, minus i itself)
  std::vector<std::vector<Bits>> below_;
  std::vector<std::vector<Bits>> universe_;
  std::vector<std::unordered_map<Bits, int, Bits::Hash>> universe_index_;
  // pullback memo: pull_[o][pos][idx]
  mutable std::vector<std::vector<std::vector<int>>> pull_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

/// Cover table over a carrier: per object an ascending list of universe
/// indices. The single representation behind topologies, filters, bases and
/// subbases; which one it is depends on which checker certifies it.
struct CoverAssignment {
  CarrierPtr carrier;
  std::vector<std::vector<int>> table;

  bool contains(int obj, int idx) const;
  void insert(int obj, int idx);
  std::vector<Sieve> sieves_at(int obj) const;
  bool operator==(const CoverAssignment& o) const { return table == o.table && same_site(o); }
  bool same_site(const CoverAssignment& o) const { return carrier->same_carrier(*o.carrier); }
};

CoverAssignment empty_assignment(CarrierPtr carrier);
/// Validates that the members form a sieve on `obj` and records it.
void add_sieve(CoverAssignment& a, std::string_view obj, const std::vector<std::string>& members);

void require_same_site(const CoverAssignment& a, const CoverAssignment& b);

/// Complete sieve enumeration on one object, canonical order.
std::vector<Sieve> sieves_on(const CarrierPtr& carrier, std::string_view obj);

}  // namespace sieveforge
