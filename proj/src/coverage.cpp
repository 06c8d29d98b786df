#include "sieveforge/coverage.hpp"

namespace sieveforge {

Verdict check_topology(const CoverAssignment& a) {
  const Carrier& c = *a.carrier;
  // (i) maximality
  for (int o = 0; o < c.object_count(); ++o)
    if (!a.contains(o, c.maximal_sieve_index(o)))
      return Verdict::fail(Witness{"maximality",
                                   {c.object_name(o)},
                                   {c.sieve_names_of(o, c.maximal_sieve_index(o))},
                                   {},
                                   "the maximal sieve is not assigned"});
  // (ii) stability
  for (int o = 0; o < c.object_count(); ++o)
    for (int s : a.table[o])
      for (int p = 0; p < c.member_count(o); ++p) {
        int d = c.arrow_source(o, p);
        int pulled = c.pullback(o, p, s);
        if (!a.contains(d, pulled))
          return Verdict::fail(Witness{"stability",
                                       {c.object_name(o), c.object_name(d)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(d, pulled)},
                                       {c.member_name(o, p)},
                                       "pullback of " + c.sieve_label(o, s) + " along " +
                                           c.member_name(o, p) + " is not assigned at " +
                                           c.object_name(d)});
      }
  // (iii) transitivity
  for (int o = 0; o < c.object_count(); ++o)
    for (int s : a.table[o]) {
      const Bits& sb = c.sieve_bits(o, s);
      for (int r = 0; r < c.universe_size(o); ++r) {
        if (a.contains(o, r)) continue;
        bool forced = true;
        for (int p = 0; p < c.member_count(o) && forced; ++p)
          if (sb.test(p)) forced = a.contains(c.arrow_source(o, p), c.pullback(o, p, r));
        if (forced)
          return Verdict::fail(Witness{"transitivity",
                                       {c.object_name(o)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(o, r)},
                                       {},
                                       c.sieve_label(o, r) + " is covered through " +
                                           c.sieve_label(o, s) + " but not assigned"});
      }
    }
  return Verdict::ok();
}

namespace {

CoverAssignment certified(CoverAssignment a, const char* what) {
  Verdict v = check_topology(a);
  if (!v)
    throw Error("InternalError", std::string(what) + " failed its own certification: " +
                                     v.witness->detail);
  return a;
}

}  // namespace

CoverAssignment trivial_topology(const CarrierPtr& carrier) {
  CoverAssignment a = empty_assignment(carrier);
  for (int o = 0; o < carrier->object_count(); ++o) a.insert(o, carrier->maximal_sieve_index(o));
  return a;
}

CoverAssignment discrete_topology(const CarrierPtr& carrier) {
  CoverAssignment a = empty_assignment(carrier);
  for (int o = 0; o < carrier->object_count(); ++o)
    for (int i = 0; i < carrier->universe_size(o); ++i) a.insert(o, i);
  return a;
}

CoverAssignment standard_topology(TopologyKind kind, const CarrierPtr& locale_carrier) {
  const Carrier& c = *locale_carrier;
  const FiniteLattice& L = c.lat();
  CoverAssignment a = empty_assignment(locale_carrier);
  switch (kind) {
    case TopologyKind::trivial:
      a = trivial_topology(locale_carrier);
      break;
    case TopologyKind::discrete:
      a = discrete_topology(locale_carrier);
      break;
    case TopologyKind::atomic:
      // bounded finite lattices are downward directed, so this always exists
      for (int o = 0; o < c.object_count(); ++o)
        for (int i = 0; i < c.universe_size(o); ++i)
          if (i != c.empty_sieve(o)) a.insert(o, i);
      break;
    case TopologyKind::dense:
      for (int o = 0; o < c.object_count(); ++o)
        for (int i = 0; i < c.universe_size(o); ++i) {
          const Bits& b = c.sieve_bits(o, i);
          bool dense = true;
          // every m <= o must bound some member of the sieve from above
          for (int p = 0; p < c.member_count(o) && dense; ++p) {
            int m = c.member_id(o, p);
            bool hit = false;
            for (int q = 0; q < c.member_count(o) && !hit; ++q)
              hit = b.test(q) && L.leq[c.member_id(o, q)][m];
            dense = hit;
          }
          if (dense) a.insert(o, i);
        }
      break;
  }
  return certified(std::move(a), "standard topology");
}

CoverAssignment sup_topology(const CarrierPtr& locale_carrier) {
  const Carrier& c = *locale_carrier;
  Verdict frame = is_frame(c.lat());
  if (!frame) throw Error("NotAFrame", "carrier fails distributivity", *frame.witness);
  CoverAssignment a = empty_assignment(locale_carrier);
  for (int o = 0; o < c.object_count(); ++o)
    for (int i = 0; i < c.universe_size(o); ++i)
      if (c.sieve_join(o, i) == o) a.insert(o, i);  // locale object index == element index
  return certified(std::move(a), "sup topology");
}

AssignmentOrder compare_assignments(const CoverAssignment& a, const CoverAssignment& b) {
  require_same_site(a, b);
  bool le = true, ge = true;
  for (int o = 0; o < a.carrier->object_count(); ++o) {
    for (int i : a.table[o])
      if (!b.contains(o, i)) le = false;
    for (int i : b.table[o])
      if (!a.contains(o, i)) ge = false;
  }
  if (le && ge) return AssignmentOrder::equal;
  if (le) return AssignmentOrder::less;
  if (ge) return AssignmentOrder::greater;
  return AssignmentOrder::incomparable;
}

Verdict topology_is_filter(const CoverAssignment& a) {
  Verdict topo = check_topology(a);
  if (!topo)
    throw Error("NotATopology", "input does not satisfy the covering axioms", *topo.witness);
  const Carrier& c = *a.carrier;
  for (int o = 0; o < c.object_count(); ++o) {
    if (a.contains(o, c.empty_sieve(o)))
      return Verdict::fail(Witness{"empty-cover",
                                   {c.object_name(o)},
                                   {{}},
                                   {},
                                   "the empty sieve covers " + c.object_name(o)});
    for (size_t i = 0; i < a.table[o].size(); ++i)
      for (size_t j = i + 1; j < a.table[o].size(); ++j) {
        int s = a.table[o][i], t = a.table[o][j];
        if (c.intersect(o, s, t) == c.empty_sieve(o))
          return Verdict::fail(Witness{"disjoint-covers",
                                       {c.object_name(o)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(o, t)},
                                       {},
                                       c.sieve_label(o, s) + " and " + c.sieve_label(o, t) +
                                           " have empty intersection"});
      }
  }
  return Verdict::ok();
}

}  // namespace sieveforge
