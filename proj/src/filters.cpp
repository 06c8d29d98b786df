#include "sieveforge/filters.hpp"

#include <algorithm>
#include <deque>

namespace sieveforge {

Verdict check_filter(const CoverAssignment& a) {
  const Carrier& c = *a.carrier;
  // F1: upward closure
  for (int o = 0; o < c.object_count(); ++o)
    for (int s : a.table[o])
      for (int r : c.supersets_of(o, s))
        if (!a.contains(o, r))
          return Verdict::fail(Witness{"F1",
                                       {c.object_name(o)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(o, r)},
                                       {},
                                       c.sieve_label(o, r) + " contains the assigned " +
                                           c.sieve_label(o, s) + " but is not assigned"});
  // F2: nonempty table and binary intersections
  for (int o = 0; o < c.object_count(); ++o) {
    if (a.table[o].empty())
      return Verdict::fail(Witness{"F2-nonempty",
                                   {c.object_name(o)},
                                   {},
                                   {},
                                   "no sieve assigned at " + c.object_name(o)});
    for (size_t i = 0; i < a.table[o].size(); ++i)
      for (size_t j = i; j < a.table[o].size(); ++j) {
        int s = a.table[o][i], t = a.table[o][j];
        int m = c.intersect(o, s, t);
        if (!a.contains(o, m))
          return Verdict::fail(Witness{"F2",
                                       {c.object_name(o)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(o, t)},
                                       {},
                                       "intersection " + c.sieve_label(o, m) + " is not assigned"});
      }
  }
  // F3: pullback stability along every arrow
  for (int o = 0; o < c.object_count(); ++o)
    for (int s : a.table[o])
      for (int p = 0; p < c.member_count(o); ++p) {
        int d = c.arrow_source(o, p);
        int pulled = c.pullback(o, p, s);
        if (!a.contains(d, pulled))
          return Verdict::fail(Witness{"F3",
                                       {c.object_name(o), c.object_name(d)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(d, pulled)},
                                       {c.member_name(o, p)},
                                       "pullback of " + c.sieve_label(o, s) + " along " +
                                           c.member_name(o, p) + " is not assigned at " +
                                           c.object_name(d)});
      }
  // F4: no empty sieve
  for (int o = 0; o < c.object_count(); ++o)
    if (a.contains(o, c.empty_sieve(o)))
      return Verdict::fail(Witness{
          "F4", {c.object_name(o)}, {{}}, {}, "the empty sieve is assigned at " + c.object_name(o)});
  return Verdict::ok();
}

Verdict check_subbase(const CoverAssignment& a) {
  const Carrier& c = *a.carrier;
  for (int o = 0; o < c.object_count(); ++o) {
    if (a.table[o].empty()) continue;
    Bits total(c.member_count(o));
    bool first = true;
    for (int s : a.table[o]) {
      total = first ? c.sieve_bits(o, s) : (total & c.sieve_bits(o, s));
      first = false;
    }
    if (total.none()) {
      std::vector<std::vector<std::string>> sieves;
      for (int s : a.table[o]) sieves.push_back(c.sieve_names_of(o, s));
      return Verdict::fail(Witness{"S1",
                                   {c.object_name(o)},
                                   sieves,
                                   {},
                                   "the assigned sieves at " + c.object_name(o) +
                                       " intersect to the empty sieve"});
    }
  }
  return Verdict::ok();
}

Verdict check_basis(const CoverAssignment& a, BasisMode mode) {
  const Carrier& c = *a.carrier;
  // B3 first: nonempty tables make B1/B2 witnesses meaningful
  for (int o = 0; o < c.object_count(); ++o) {
    if (a.table[o].empty())
      return Verdict::fail(
          Witness{"B3", {c.object_name(o)}, {}, {}, "no sieve assigned at " + c.object_name(o)});
    if (a.contains(o, c.empty_sieve(o)))
      return Verdict::fail(Witness{
          "B3", {c.object_name(o)}, {{}}, {}, "the empty sieve is assigned at " + c.object_name(o)});
  }
  auto contains_member_below = [&](int o, int idx) {
    for (int w : a.table[o])
      if (c.subset(o, w, idx)) return true;
    return false;
  };
  for (int o = 0; o < c.object_count(); ++o) {
    for (size_t i = 0; i < a.table[o].size(); ++i)
      for (size_t j = i; j < a.table[o].size(); ++j) {
        int s = a.table[o][i], t = a.table[o][j];
        int m = c.intersect(o, s, t);
        if (!contains_member_below(o, m))
          return Verdict::fail(Witness{"B1",
                                       {c.object_name(o)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(o, t)},
                                       {},
                                       "no assigned sieve inside " + c.sieve_label(o, m)});
      }
    for (int s : a.table[o])
      for (int p = 0; p < c.member_count(o); ++p) {
        int d = c.arrow_source(o, p);
        int pulled = c.pullback(o, p, s);
        bool ok = mode == BasisMode::strict ? a.contains(d, pulled)
                                            : contains_member_below(d, pulled);
        if (!ok)
          return Verdict::fail(Witness{"B2",
                                       {c.object_name(o), c.object_name(d)},
                                       {c.sieve_names_of(o, s), c.sieve_names_of(d, pulled)},
                                       {c.member_name(o, p)},
                                       "pullback " + c.sieve_label(d, pulled) + " along " +
                                           c.member_name(o, p) + " has no assigned sieve " +
                                           (mode == BasisMode::strict ? "equal to it" : "inside it")});
      }
  }
  return Verdict::ok();
}

FilterCertificate filter_from_basis(const CoverAssignment& basis, BasisMode mode) {
  Verdict v = check_basis(basis, mode);
  if (!v) throw Error("NotABasis", "input fails the basis axioms", *v.witness);
  const Carrier& c = *basis.carrier;
  CoverAssignment f = empty_assignment(basis.carrier);
  for (int o = 0; o < c.object_count(); ++o)
    for (int r = 0; r < c.universe_size(o); ++r)
      for (int w : basis.table[o])
        if (c.subset(o, w, r)) {
          f.insert(o, r);
          break;
        }
  Verdict fv = check_filter(f);
  if (!fv) throw Error("InternalError", "generated assignment fails the filter axioms");
  return FilterCertificate{std::move(f), CertKind::filter};
}

namespace {

struct Derivation {
  char rule;          // 'I' input, 'M' maximal seed, '1','2','3'
  int obj;            // object where the sieve appeared
  int parent_a = -1;  // sieve index at parent object
  int parent_obj = -1;
  int parent_b = -1;  // second parent for F2
  int arrow = -1;     // member position for F3
};

std::string step_line(const Carrier& c, const Derivation& d, int obj, int idx) {
  switch (d.rule) {
    case 'I':
      return "input: " + c.sieve_label(obj, idx) + " at " + c.object_name(obj);
    case 'M':
      return "seed: maximal sieve at " + c.object_name(obj);
    case '1':
      return "F1: " + c.sieve_label(d.parent_obj, d.parent_a) + " at " +
             c.object_name(d.parent_obj) + " grows to " + c.sieve_label(obj, idx);
    case '2':
      return "F2: intersect " + c.sieve_label(d.parent_obj, d.parent_a) + " with " +
             c.sieve_label(d.parent_obj, d.parent_b) + " at " + c.object_name(d.parent_obj) +
             " -> " + c.sieve_label(obj, idx);
    default:
      return "F3: pull " + c.sieve_label(d.parent_obj, d.parent_a) + " at " +
             c.object_name(d.parent_obj) + " back along " +
             c.member_name(d.parent_obj, d.arrow) + " -> " + c.sieve_label(obj, idx) + " at " +
             c.object_name(obj);
  }
}

}  // namespace

Saturation saturate_subbase(const CoverAssignment& a, SaturationCache* cache, std::size_t budget) {
  if (cache) {
    auto it = cache->find(a.table);
    if (it != cache->end()) return it->second;
  }
  const Carrier& c = *a.carrier;
  const int n = c.object_count();

  std::vector<std::vector<char>> present(n);
  std::vector<std::vector<Derivation>> how(n);
  for (int o = 0; o < n; ++o) {
    present[o].assign(c.universe_size(o), 0);
    how[o].resize(c.universe_size(o));
  }
  std::deque<std::pair<int, int>> queue;
  std::size_t states = 0;
  auto add = [&](int o, int idx, Derivation d) {
    if (present[o][idx]) return;
    present[o][idx] = 1;
    how[o][idx] = d;
    queue.emplace_back(o, idx);
    if (++states > budget) throw Error("BudgetExceeded", "saturation exceeds the state budget");
  };

  for (int o = 0; o < n; ++o) add(o, c.maximal_sieve_index(o), Derivation{'M', o});
  for (int o = 0; o < n; ++o)
    for (int idx : a.table[o]) add(o, idx, Derivation{'I', o});

  int empty_at = -1;
  while (!queue.empty() && empty_at < 0) {
    auto [o, s] = queue.front();
    queue.pop_front();
    if (s == c.empty_sieve(o)) {
      empty_at = o;
      break;
    }
    for (int r : c.supersets_of(o, s))
      if (!present[o][r]) add(o, r, Derivation{'1', o, s, o});
    for (int t = 0; t < c.universe_size(o); ++t)
      if (present[o][t]) {
        int m = c.intersect(o, s, t);
        if (!present[o][m]) add(o, m, Derivation{'2', o, s, o, t});
      }
    for (int p = 0; p < c.member_count(o); ++p) {
      int d = c.arrow_source(o, p);
      int pulled = c.pullback(o, p, s);
      if (!present[d][pulled]) add(d, pulled, Derivation{'3', d, s, o, -1, p});
    }
  }

  Saturation out;
  if (empty_at >= 0) {
    out.proper = false;
    // walk the derivation chain back from the empty sieve
    std::vector<std::string> lines;
    int o = empty_at, idx = c.empty_sieve(empty_at);
    while (true) {
      const Derivation& d = how[o][idx];
      lines.push_back(step_line(c, d, o, idx));
      if (d.rule == 'I' || d.rule == 'M') break;
      // follow the first parent; for F2 both parents exist but one suffices
      int po = d.parent_obj, pi = d.parent_a;
      o = po;
      idx = pi;
    }
    std::reverse(lines.begin(), lines.end());
    out.trace = std::move(lines);
  } else {
    out.proper = true;
    out.filter = empty_assignment(a.carrier);
    for (int o = 0; o < n; ++o)
      for (int idx = 0; idx < c.universe_size(o); ++idx)
        if (present[o][idx]) out.filter.insert(o, idx);
  }
  if (cache) (*cache)[a.table] = out;
  return out;
}

FilterCertificate meet_filters(std::span<const FilterCertificate> family) {
  if (family.empty()) throw Error("InvalidArgument", "meet of an empty filter family");
  CoverAssignment out = family.front().assignment;
  for (size_t i = 1; i < family.size(); ++i) {
    require_same_site(out, family[i].assignment);
    for (int o = 0; o < out.carrier->object_count(); ++o) {
      std::vector<int> kept;
      for (int idx : out.table[o])
        if (family[i].assignment.contains(o, idx)) kept.push_back(idx);
      out.table[o] = std::move(kept);
    }
  }
  Verdict v = check_filter(out);
  if (!v) throw Error("InternalError", "pointwise intersection of filters fails the filter axioms");
  return FilterCertificate{std::move(out), CertKind::filter};
}

bool is_finer(const CoverAssignment& f1, const CoverAssignment& f2) {
  require_same_site(f1, f2);
  for (int o = 0; o < f1.carrier->object_count(); ++o)
    for (int idx : f1.table[o])
      if (!f2.contains(o, idx)) return false;
  return true;
}

namespace {

/// Saturation of `f` extended with one sieve; f must already be saturated.
Saturation saturate_with(const FilterCertificate& f, int obj, int idx, SaturationCache* cache) {
  CoverAssignment ext = f.assignment;
  ext.insert(obj, idx);
  return saturate_subbase(ext, cache);
}

}  // namespace

Verdict is_ultrafilter(const FilterCertificate& f, SaturationCache* cache) {
  const Carrier& c = *f.assignment.carrier;
  SaturationCache local;
  if (!cache) cache = &local;
  for (int o = 0; o < c.object_count(); ++o)
    for (int idx = 0; idx < c.universe_size(o); ++idx) {
      if (f.assignment.contains(o, idx)) continue;
      Saturation s = saturate_with(f, o, idx, cache);
      if (s.proper)
        return Verdict::fail(Witness{"maximality",
                                     {c.object_name(o)},
                                     {c.sieve_names_of(o, idx)},
                                     {},
                                     "adding " + c.sieve_label(o, idx) + " at " +
                                         c.object_name(o) + " still saturates to a filter"});
    }
  return Verdict::ok();
}

FilterCertificate extend_to_ultrafilter(const FilterCertificate& f, SaturationCache* cache) {
  SaturationCache local;
  if (!cache) cache = &local;
  const Carrier& c = *f.assignment.carrier;
  FilterCertificate cur{f.assignment, CertKind::ultrafilter};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int o = 0; o < c.object_count(); ++o)
      for (int idx = 0; idx < c.universe_size(o); ++idx) {
        if (cur.assignment.contains(o, idx)) continue;
        Saturation s = saturate_with(cur, o, idx, cache);
        if (s.proper) {
          cur.assignment = std::move(s.filter);
          grew = true;
        }
      }
  }
  return cur;
}

namespace {

struct UltraSearch {
  const Carrier& c;
  SaturationCache cache;
  std::vector<std::pair<int, int>> candidates;  // (object, sieve) canonical order
  std::vector<std::vector<std::vector<int>>> found_tables;
  std::vector<CoverAssignment> found;
  std::size_t budget;
  std::size_t nodes = 0;

  void run(const CoverAssignment& state, size_t pos, const std::vector<char>& excluded) {
    if (++nodes > budget) throw Error("BudgetExceeded", "ultrafilter search exceeds budget");
    for (size_t i = pos; i < candidates.size(); ++i) {
      auto [o, idx] = candidates[i];
      if (state.contains(o, idx) || excluded[i]) continue;
      CoverAssignment ext = state;
      ext.insert(o, idx);
      Saturation s = saturate_subbase(ext, &cache);
      if (!s.proper) continue;  // permanently impossible along this path
      bool conflicts = false;
      for (size_t j = 0; j < candidates.size() && !conflicts; ++j)
        conflicts = excluded[j] && s.filter.contains(candidates[j].first, candidates[j].second);
      if (conflicts) continue;
      // branch: include, then exclude
      run(s.filter, i + 1, excluded);
      std::vector<char> ex = excluded;
      ex[i] = 1;
      run(state, i + 1, ex);
      return;
    }
    // leaf: no candidate can be added on this path; keep genuine ultrafilters
    for (auto& t : found_tables)
      if (t == state.table) return;
    FilterCertificate cand{state, CertKind::ultrafilter};
    if (is_ultrafilter(cand, &cache)) {
      found_tables.push_back(state.table);
      found.push_back(state);
    }
  }
};

}  // namespace

std::vector<FilterCertificate> enumerate_ultrafilters(const CarrierPtr& carrier,
                                                      std::size_t budget) {
  UltraSearch search{*carrier, {}, {}, {}, {}, budget};
  for (int o = 0; o < carrier->object_count(); ++o)
    for (int idx = 0; idx < carrier->universe_size(o); ++idx) search.candidates.push_back({o, idx});
  Saturation base = saturate_subbase(empty_assignment(carrier), &search.cache);
  if (!base.proper) return {};
  search.run(base.filter, 0, std::vector<char>(search.candidates.size(), 0));
  std::sort(search.found.begin(), search.found.end(),
            [](const CoverAssignment& a, const CoverAssignment& b) { return a.table < b.table; });
  std::vector<FilterCertificate> out;
  out.reserve(search.found.size());
  for (auto& a : search.found) out.push_back(FilterCertificate{a, CertKind::ultrafilter});
  return out;
}

std::vector<FilterCertificate> enumerate_filters(const CarrierPtr& carrier, std::size_t budget) {
  const Carrier& c = *carrier;
  const int n = c.object_count();
  // free positions per object: everything except the forced maximal sieve
  // and the forbidden empty sieve
  std::vector<std::vector<int>> free(n);
  std::size_t bits = 0;
  for (int o = 0; o < n; ++o) {
    for (int idx = 0; idx < c.universe_size(o); ++idx)
      if (idx != c.empty_sieve(o) && idx != c.maximal_sieve_index(o)) free[o].push_back(idx);
    bits += free[o].size();
  }
  if (bits >= 8 * sizeof(std::size_t) || (std::size_t{1} << bits) > budget)
    throw Error("BudgetExceeded", "exhaustive filter enumeration needs 2^" + std::to_string(bits) +
                                      " candidate families");
  std::vector<FilterCertificate> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    CoverAssignment a = empty_assignment(carrier);
    std::size_t b = mask;
    for (int o = 0; o < n; ++o) {
      a.insert(o, c.maximal_sieve_index(o));
      for (int idx : free[o]) {
        if (b & 1) a.insert(o, idx);
        b >>= 1;
      }
    }
    if (check_filter(a)) out.push_back(FilterCertificate{std::move(a), CertKind::filter});
  }
  std::sort(out.begin(), out.end(), [](const FilterCertificate& a, const FilterCertificate& b) {
    return a.assignment.table < b.assignment.table;
  });
  return out;
}

FilterCertificate product_filter_basis(const CarrierPtr& locale_carrier,
                                       const std::vector<std::string>& targets,
                                       std::span<const FilterCertificate> filters) {
  const Carrier& c = *locale_carrier;
  if (c.flavor() != Flavor::locale)
    throw Error("CarrierMismatch", "product filter bases are locale-only");
  if (targets.empty() || targets.size() != filters.size())
    throw Error("InvalidArgument", "need one filter per target element");
  const FiniteLattice& L = c.lat();
  std::vector<int> tgt;
  for (auto& t : targets) tgt.push_back(L.require(t));
  for (auto& f : filters)
    if (!f.assignment.carrier->same_carrier(c))
      throw Error("CarrierMismatch", "filter lives on a different carrier");

  int k = meet_of(L, tgt);

  // position of element e inside ↓k's member space
  auto pos_in = [&](int obj, int elem) {
    for (int p = 0; p < c.member_count(obj); ++p)
      if (c.member_id(obj, p) == elem) return p;
    return -1;
  };

  // all combinations of one sieve per filter, restricted to ↓k and met
  std::vector<int> combo_idx;
  std::vector<size_t> odo(filters.size(), 0);
  std::vector<int> members_at_k;
  CoverAssignment basis = empty_assignment(locale_carrier);
  while (true) {
    Bits acc(c.member_count(k));
    for (int p = 0; p < c.member_count(k); ++p) acc.set(p);
    for (size_t i = 0; i < filters.size(); ++i) {
      int sidx = filters[i].assignment.table[tgt[i]][odo[i]];
      const Bits& sb = c.sieve_bits(tgt[i], sidx);
      Bits restricted(c.member_count(k));
      for (int p = 0; p < c.member_count(k); ++p) {
        int e = c.member_id(k, p);
        int q = pos_in(tgt[i], e);
        if (q >= 0 && sb.test(q)) restricted.set(p);
      }
      acc = acc & restricted;
    }
    if (acc.none()) {
      std::vector<std::vector<std::string>> parts;
      for (size_t i = 0; i < filters.size(); ++i)
        parts.push_back(c.sieve_names_of(tgt[i], filters[i].assignment.table[tgt[i]][odo[i]]));
      throw Error("EmptyMeetSieve", "a combination of member sieves meets to the empty sieve",
                  Witness{"B3", {L.elements[k]}, parts, {}, ""});
    }
    basis.insert(k, c.index_of(k, acc));
    // advance odometer
    size_t d = 0;
    while (d < odo.size()) {
      if (++odo[d] < filters[d].assignment.table[tgt[d]].size()) break;
      odo[d] = 0;
      ++d;
    }
    if (d == odo.size()) break;
  }

  // restrictions below k, maximal elsewhere
  for (int o = 0; o < c.object_count(); ++o) {
    if (o == k) continue;
    if (L.leq[o][k]) {
      for (int bidx : basis.table[k]) {
        const Bits& bb = c.sieve_bits(k, bidx);
        Bits r(c.member_count(o));
        for (int p = 0; p < c.member_count(o); ++p) {
          int q = pos_in(k, c.member_id(o, p));
          if (q >= 0 && bb.test(q)) r.set(p);
        }
        basis.insert(o, c.index_of(o, r));
      }
    } else {
      basis.insert(o, c.maximal_sieve_index(o));
    }
  }

  Verdict v = check_basis(basis);
  if (!v) throw Error("NotABasis", "product family fails the basis axioms", *v.witness);
  return FilterCertificate{std::move(basis), CertKind::basis};
}

}  // namespace sieveforge
