#pragma once

#include "sieveforge/carrier.hpp"

namespace sieveforge {

/// Maximality, stability under pullback, transitivity. Transitivity is the
/// full quantifier expansion over candidate sieves from the universe.
Verdict check_topology(const CoverAssignment& a);

enum class TopologyKind { trivial, discrete, atomic, dense };

/// The named locale topology, certified by check_topology before return.
CoverAssignment standard_topology(TopologyKind kind, const CarrierPtr& locale_carrier);

/// Works for both flavors; table(C) = {maximal sieve}.
CoverAssignment trivial_topology(const CarrierPtr& carrier);
/// Works for both flavors; table(C) = the whole sieve universe.
CoverAssignment discrete_topology(const CarrierPtr& carrier);

/// Covering by join: table(c) = all sieves whose join is c. Frame required.
CoverAssignment sup_topology(const CarrierPtr& locale_carrier);

enum class AssignmentOrder { less, equal, greater, incomparable };

AssignmentOrder compare_assignments(const CoverAssignment& a, const CoverAssignment& b);

/// For a certified topology: pairwise intersections nonempty and the empty
/// sieve absent. Throws NotATopology when the input fails check_topology.
Verdict topology_is_filter(const CoverAssignment& a);

}  // namespace sieveforge
