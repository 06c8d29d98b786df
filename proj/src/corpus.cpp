#include "sieveforge/corpus.hpp"

#include <algorithm>

namespace sieveforge {

FiniteLattice chain_lattice(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) {
    elems.push_back(std::to_string(i));
    if (i) pairs.push_back({std::to_string(i - 1), std::to_string(i)});
  }
  return build_lattice(elems, pairs);
}

FiniteLattice square_lattice() {
  return build_lattice({"bot", "a", "b", "top"},
                       {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

FiniteLattice diamond_lattice() {
  return build_lattice({"bot", "p", "q", "r", "top"},
                       {{"bot", "p"}, {"bot", "q"}, {"bot", "r"},
                        {"p", "top"}, {"q", "top"}, {"r", "top"}});
}

FiniteCategory two_point_category() {
  CategorySpec spec;
  spec.objects = {"one", "C"};
  spec.morphisms = {{"id_one", "one", "one"}, {"id_C", "C", "C"}, {"x", "one", "C"},
                    {"y", "one", "C"},        {"t", "C", "one"},  {"a", "C", "C"},
                    {"b", "C", "C"}};
  spec.identities = {{"one", "id_one"}, {"C", "id_C"}};
  spec.composites = {
      {"x", "t", "id_one"}, {"y", "t", "id_one"},               // t∘x, t∘y
      {"t", "x", "a"},      {"t", "y", "b"},                    // x∘t, y∘t
      {"x", "a", "x"},      {"y", "a", "x"},                    // a∘x, a∘y
      {"x", "b", "y"},      {"y", "b", "y"},                    // b∘x, b∘y
      {"a", "t", "t"},      {"b", "t", "t"},                    // t∘a, t∘b
      {"a", "a", "a"},      {"a", "b", "b"},                    // a∘a, b∘a
      {"b", "a", "a"},      {"b", "b", "b"},                    // a∘b, b∘b
  };
  return build_category(spec);
}

FiniteLattice random_lattice(Rng& rng, int max_elements) {
  for (;;) {
    int middle = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, max_elements - 2)) + 1));
    std::vector<std::string> elems{"bot"};
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::vector<std::string>> layers{{"bot"}};
    int made = 0;
    while (made < middle) {
      int width = 1 + static_cast<int>(rng.below(2));
      width = std::min(width, middle - made);
      std::vector<std::string> layer;
      for (int i = 0; i < width; ++i) {
        std::string name = "e" + std::to_string(made++);
        elems.push_back(name);
        layer.push_back(name);
        // cover at least one element of the previous layer
        const auto& prev = layers.back();
        std::uint64_t picked = rng.below((std::uint64_t{1} << prev.size()) - 1) + 1;
        for (size_t j = 0; j < prev.size(); ++j)
          if (picked & (std::uint64_t{1} << j)) pairs.push_back({prev[j], name});
      }
      layers.push_back(layer);
    }
    elems.push_back("top");
    for (auto& e : layers.back()) pairs.push_back({e, "top"});
    if (layers.size() > 1 && rng.chance(1, 3))
      pairs.push_back({layers[layers.size() / 2].front(), "top"});
    try {
      return build_lattice(elems, pairs);
    } catch (const Error&) {
      // not every stacking is a lattice; draw again
    }
  }
}

CoverAssignment random_basis(Rng& rng, const CarrierPtr& carrier) {
  // The least member of a filter's table is a one-sieve basis for it, and it
  // stays a basis under any additions from the same filter; that yields
  // valid bases across the whole filter population with no rejection loop.
  SaturationCache cache;
  FilterCertificate f = random_filter(rng, carrier, &cache);
  CoverAssignment a = empty_assignment(carrier);
  for (int o = 0; o < carrier->object_count(); ++o) {
    const auto& row = f.assignment.table[o];
    a.insert(o, row.front());
    for (int idx : row)
      if (rng.chance(1, 3)) a.insert(o, idx);
  }
  return a;
}

FilterCertificate random_filter(Rng& rng, const CarrierPtr& carrier, SaturationCache* cache) {
  const Carrier& c = *carrier;
  for (int attempt = 0; attempt < 32; ++attempt) {
    CoverAssignment a = empty_assignment(carrier);
    int seeds = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < seeds; ++i) {
      int o = static_cast<int>(rng.below(static_cast<std::uint64_t>(c.object_count())));
      if (c.universe_size(o) <= 1) continue;
      int idx = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(c.universe_size(o) - 1)));
      a.insert(o, idx);
    }
    Saturation s = saturate_subbase(a, cache);
    if (s.proper) return FilterCertificate{std::move(s.filter), CertKind::filter};
  }
  return FilterCertificate{trivial_topology(carrier), CertKind::filter};
}

CoverAssignment random_subtopology(Rng& rng, const FilterCertificate& filter, int attempts) {
  const CoverAssignment& f = filter.assignment;
  const Carrier& c = *f.carrier;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    CoverAssignment j = empty_assignment(f.carrier);
    for (int o = 0; o < c.object_count(); ++o) {
      j.insert(o, c.maximal_sieve_index(o));
      for (int idx : f.table[o])
        if (rng.chance(1, 2)) j.insert(o, idx);
    }
    if (check_topology(j)) return j;
  }
  return trivial_topology(f.carrier);
}

std::string builtin_model_text() {
  return R"(# built-in worked example

lattice chain3
  elements 0 1 2
  order 0 1
  order 1 2
end

lattice square
  elements bot a b top
  order bot a
  order bot b
  order a top
  order b top
end

lattice divisors12 divisors 12

category two_point
  objects one C
  morphism id_one one one
  morphism id_C C C
  morphism x one C
  morphism y one C
  morphism t C one
  morphism a C C
  morphism b C C
  identity one id_one
  identity C id_C
  compose x t id_one
  compose y t id_one
  compose t x a
  compose t y b
  compose x a x
  compose y a x
  compose x b y
  compose y b y
  compose a t t
  compose b t t
  compose a a a
  compose a b b
  compose b a a
  compose b b b
end

topology chain3_trivial on chain3 standard trivial
topology chain3_dense on chain3 standard dense
topology divisors12_trivial on divisors12 standard trivial
topology square_dense on square standard dense

topology two_point_separated on two_point
  sieve one id_one t
  sieve C id_C x y a b
  sieve C x a
  sieve C y b
end

filter chain3_deep on chain3
  sieve 2 0 1
  sieve 2 0 1 2
  sieve 1 0 1
  sieve 0 0
end

basis chain3_base on chain3
  sieve 2 0 1
  sieve 1 0 1
  sieve 0 0
end

subbase two_point_x on two_point
  sieve C x a
end

functor swap_points from two_point to two_point
  object one one
  object C C
  map id_one id_one
  map id_C id_C
  map x y
  map y x
  map t t
  map a b
  map b a
end

point chain3_low on chain3 dualkernel 1 2
point chain3_high on chain3 dualkernel 2
point at_x on two_point via x
point at_y on two_point via y
)";
}

}  // namespace sieveforge
