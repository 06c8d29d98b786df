#pragma once

#include "sieveforge/carrier.hpp"
#include "sieveforge/convergence.hpp"

namespace sieveforge {

/// Certified functor between the category flavors of two carriers.
struct FunctorMap {
  CarrierPtr source;
  CarrierPtr target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

struct FunctorSpec {
  std::vector<std::pair<std::string, std::string>> objects;
  std::vector<std::pair<std::string, std::string>> morphisms;

  bool operator==(const FunctorSpec&) const = default;
};

/// Verifies endpoint, identity and composition preservation exhaustively.
FunctorMap build_functor(const CarrierPtr& source, const CarrierPtr& target,
                         const FunctorSpec& spec);

/// Sieve generated on F(C) by the images of the members: all target
/// morphisms factoring through at least one image.
Sieve image_sieve(const FunctorMap& f, const Sieve& r);

/// Every assigned sieve's image sieve is assigned in the target.
Verdict is_filter_preserving(const FunctorMap& f, const CoverAssignment& src,
                             const CoverAssignment& tgt);

struct ImageLawReport {
  Verdict g_neighborhood_images;
  Verdict cover_neighborhood_images;
  Verdict basis_images;
};

/// Replays the three image laws exhaustively: images of 𝔊-neighborhoods,
/// of cover-neighborhood systems, and of filter bases. Requires the source
/// terminal object to map to the target terminal object.
ImageLawReport image_law_report(const FunctorMap& f, const CoverAssignment& source_topology,
                                const CoverAssignment& target_topology,
                                const CoverAssignment& source_basis);

}  // namespace sieveforge
