#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "sieveforge/lattice.hpp"
#include "sieveforge/verdict.hpp"

namespace sieveforge {

struct Morphism {
  std::string name;
  int dom = -1;
  int cod = -1;
  bool operator==(const Morphism&) const = default;
};

/// Finite category with a fully materialized composition table. Certified
/// at construction: associativity and identity laws hold for every entry.
/// compose(g, f) is "g then f", defined exactly when cod(g) = dom(f).
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identity;               // per object
  std::vector<std::vector<int>> compose;   // compose[g][f] = f∘g; -1 undefined
  std::vector<std::vector<int>> incoming;  // per object: morphisms with that codomain

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int object_index(std::string_view name) const;
  int require_object(std::string_view name) const;
  int morphism_index(std::string_view name) const;
  int require_morphism(std::string_view name) const;
  /// f∘g for g then f; -1 when not composable.
  int then(int g, int f) const { return compose[g][f]; }

  bool operator==(const FiniteCategory&) const = default;
};

struct CategorySpec {
  std::vector<std::string> objects;
  // name, dom, cod
  std::vector<std::tuple<std::string, std::string, std::string>> morphisms;
  // object -> identity morphism name
  std::vector<std::pair<std::string, std::string>> identities;
  // g, f, f∘g ("g then f is ...")
  std::vector<std::tuple<std::string, std::string, std::string>> composites;

  bool operator==(const CategorySpec&) const = default;
};

/// Builds and certifies a category. Identity composites are derived; the
/// remaining composable pairs must be declared. Throws MissingComposite,
/// IdentityViolation or AssociativityViolation with witness morphisms.
FiniteCategory build_category(const CategorySpec& spec);

/// One object per lattice element, one morphism m->k per m <= k.
FiniteCategory poset_category(const FiniteLattice& L);

/// A set of morphisms with common codomain, closed under precomposition.
/// In the locale flavor the same type is reused with element indices as
/// members (the unique poset morphisms). Members ascend in canonical order.
struct Sieve {
  int owner = -1;
  std::vector<int> members;
  bool operator==(const Sieve&) const = default;
};

Sieve maximal_sieve(const FiniteCategory& cat, std::string_view obj);

/// Codomain and right-ideal closure check; witness carries the offending
/// morphism pair.
Verdict is_sieve(const FiniteCategory& cat, std::string_view obj,
                 const std::vector<std::string>& members);

/// Least sieve containing the generators (precomposition closure).
Sieve generated_sieve(const FiniteCategory& cat, std::string_view obj,
                      const std::vector<std::string>& generators);

/// h*(S) = {g | cod(g) = dom(h), h∘g in S} for h: D -> C with S on C.
Sieve pullback_sieve(const FiniteCategory& cat, std::string_view h, const Sieve& s);

/// Locale-flavor pullback: restriction S ∩ ↓m of a down-set sieve.
Sieve restrict_sieve(const FiniteLattice& L, const Sieve& s, std::string_view m);

std::vector<std::string> terminal_objects(const FiniteCategory& cat);

/// Morphism from the designated terminal object (first in canonical order).
struct CatPoint {
  int morphism = -1;
  bool operator==(const CatPoint&) const = default;
};

std::vector<CatPoint> category_points(const FiniteCategory& cat, std::string_view obj);

std::vector<std::string> sieve_names(const FiniteCategory& cat, const Sieve& s);
std::vector<std::string> sieve_names(const FiniteLattice& L, const Sieve& s);

}  // namespace sieveforge
