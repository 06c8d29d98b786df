#pragma once

#include "sieveforge/coverage.hpp"
#include "sieveforge/filters.hpp"
#include "sieveforge/rng.hpp"

namespace sieveforge {

// Small structures used throughout the test corpus and the `laws` harness.

FiniteLattice chain_lattice(int n);      // 0 < 1 < ... < n-1
FiniteLattice square_lattice();          // bot, a, b, top with a, b incomparable
FiniteLattice diamond_lattice();         // bot, three atoms, top (not distributive)

/// Terminal object "one" plus an object "C" with two points x, y and the
/// forced constant endomorphisms a = x∘t, b = y∘t.
FiniteCategory two_point_category();

/// Random bounded lattice with at most `max_elements` elements: antichain
/// layers stacked with random cover edges, transitively closed, rejected
/// until the result has all meets and joins.
FiniteLattice random_lattice(Rng& rng, int max_elements);

/// Random assignment passing check_basis; trivial tables as fallback.
CoverAssignment random_basis(Rng& rng, const CarrierPtr& carrier);

/// Random proper filter: saturation of a random subbase, retried under a
/// proper outcome; the trivial filter is the fallback.
FilterCertificate random_filter(Rng& rng, const CarrierPtr& carrier, SaturationCache* cache);

/// Random topology below the filter (pointwise pruning with rejection; the
/// trivial topology always qualifies).
CoverAssignment random_subtopology(Rng& rng, const FilterCertificate& filter, int attempts = 24);

/// A worked model file covering every block kind; used by the docs and the
/// round-trip tests.
std::string builtin_model_text();

}  // namespace sieveforge
