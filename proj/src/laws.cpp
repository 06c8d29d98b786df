#include "sieveforge/laws.hpp"

#include <algorithm>
#include <functional>

#include "sieveforge/convergence.hpp"
#include "sieveforge/corpus.hpp"
#include "sieveforge/coverage.hpp"
#include "sieveforge/filters.hpp"
#include "sieveforge/functors.hpp"

namespace sieveforge {

namespace {

constexpr size_t kWitnessCap = 8;

void record(LawResult& r, const std::string& witness) {
  ++r.violation_count;
  if (r.violations.size() < kWitnessCap) r.violations.push_back(witness);
}

std::vector<std::pair<std::string, CoverAssignment>> twopt_sites(const CarrierPtr& tp) {
  std::vector<std::pair<std::string, CoverAssignment>> sites;
  CoverAssignment j1 = trivial_topology(tp);
  sites.push_back({"two_point/maximal-only", j1});
  CoverAssignment j2 = j1;
  add_sieve(j2, "C", {"x", "a"});
  sites.push_back({"two_point/with-x", j2});
  CoverAssignment j3 = j2;
  add_sieve(j3, "C", {"y", "b"});
  sites.push_back({"two_point/with-x-y", j3});
  return sites;
}

std::vector<std::pair<std::string, CoverAssignment>> chain3_sites(const CarrierPtr& c3) {
  return {{"chain3/trivial", standard_topology(TopologyKind::trivial, c3)},
          {"chain3/dense", standard_topology(TopologyKind::dense, c3)}};
}

std::string site_point_label(const CoverAssignment& site, int obj, const Point& p) {
  return site.carrier->object_name(obj) + ", point " + point_label(*site.carrier, p);
}

// --- the laws ---------------------------------------------------------------

LawResult law_filter_topology_bridge(const LawOptions& opt) {
  LawResult r{"every-filter-satisfies-covering-axioms", 0, 0, {}};
  Rng rng(opt.seed);
  SaturationCache cache;
  auto probe = [&](const CarrierPtr& carrier, const std::string& label) {
    cache.clear();
    FilterCertificate from_basis = filter_from_basis(random_basis(rng, carrier));
    FilterCertificate from_saturation = random_filter(rng, carrier, &cache);
    for (auto* f : {&from_basis, &from_saturation}) {
      ++r.checked;
      Verdict topo = check_topology(f->assignment);
      if (!topo)
        record(r, label + ": filter fails " + topo.witness->axiom + " (" +
                      topo.witness->detail + ")");
    }
  };
  for (int i = 0; i < opt.random_locales; ++i)
    probe(Carrier::locale(random_lattice(rng, opt.max_locale_elements)),
          "locale#" + std::to_string(i));
  for (int i = 0; i < opt.random_categories; ++i)
    probe(Carrier::category(poset_category(random_lattice(rng, opt.max_category_elements))),
          "poset#" + std::to_string(i));
  return r;
}

LawResult law_subtopology_filters(const LawOptions& opt) {
  LawResult r{"topologies-below-a-filter-are-filters", 0, 0, {}};
  Rng rng(opt.seed + 1);
  std::vector<CarrierPtr> pool{Carrier::locale(chain_lattice(3)),
                               Carrier::locale(square_lattice())};
  for (int i = 0; i < 18; ++i)
    pool.push_back(Carrier::locale(random_lattice(rng, opt.max_category_elements)));
  SaturationCache cache;
  for (int k = 0; k < opt.subtopology_pairs; ++k) {
    const CarrierPtr& carrier = pool[static_cast<size_t>(k) % pool.size()];
    cache.clear();
    FilterCertificate f = random_filter(rng, carrier, &cache);
    CoverAssignment j = random_subtopology(rng, f);
    ++r.checked;
    Verdict v = check_filter(j);
    if (!v)
      record(r, "pair#" + std::to_string(k) + ": pruned topology fails " + v.witness->axiom);
  }
  return r;
}

LawResult law_ultrafilter_union_prime(const LawOptions& opt) {
  LawResult r{"ultrafilter-tables-are-union-prime", 0, 0, {}};
  for (auto& carrier : {Carrier::locale(chain_lattice(3)),
                        Carrier::category(two_point_category())}) {
    const Carrier& c = *carrier;
    for (auto& u : enumerate_ultrafilters(carrier, opt.budget)) {
      for (int o = 0; o < c.object_count(); ++o)
        for (int s = 0; s < c.universe_size(o); ++s)
          for (int t = s; t < c.universe_size(o); ++t) {
            if (!u.assignment.contains(o, c.unite(o, s, t))) continue;
            ++r.checked;
            if (!u.assignment.contains(o, s) && !u.assignment.contains(o, t))
              record(r, c.object_name(o) + ": " + c.sieve_label(o, s) + " and " +
                            c.sieve_label(o, t) +
                            " are both outside the ultrafilter but their union is inside");
            // the three-sieve corollary, via one more union
            for (int w = t; w < c.universe_size(o); ++w) {
              int sw = c.unite(o, c.unite(o, s, t), w);
              if (!u.assignment.contains(o, sw)) continue;
              ++r.checked;
              if (!u.assignment.contains(o, s) && !u.assignment.contains(o, t) &&
                  !u.assignment.contains(o, w))
                record(r, c.object_name(o) + ": triple union inside, all parts outside (" +
                              c.sieve_label(o, s) + ", " + c.sieve_label(o, t) + ", " +
                              c.sieve_label(o, w) + ")");
            }
          }
    }
  }
  return r;
}

LawResult law_cluster_iff_finer_limit(const LawOptions& opt) {
  LawResult r{"cluster-points-are-limits-of-finer-filters", 0, 0, {}};
  auto run_site = [&](const std::string& label, const CoverAssignment& site,
                      const std::vector<FilterCertificate>& filters) {
    const Carrier& c = *site.carrier;
    for (auto& f : filters)
      for (int o = 0; o < c.object_count(); ++o)
        for (auto& p : points_at(site.carrier, o)) {
          ++r.checked;
          auto clusters = cluster_points(f.assignment, site, o);
          bool lhs = std::find(clusters.begin(), clusters.end(), p) != clusters.end();
          bool rhs = false;
          for (auto& g : filters)
            if (is_finer(f.assignment, g.assignment) && converges(g.assignment, site, o, p)) {
              rhs = true;
              break;
            }
          if (lhs != rhs)
            record(r, label + " at " + site_point_label(site, o, p) +
                          (lhs ? ": cluster point with no finer converging filter"
                               : ": a finer filter converges to a non-cluster point"));
        }
  };
  auto c3 = Carrier::locale(chain_lattice(3));
  auto c3_filters = enumerate_filters(c3, opt.budget);
  for (auto& [label, site] : chain3_sites(c3)) run_site(label, site, c3_filters);
  auto tp = Carrier::category(two_point_category());
  auto tp_filters = enumerate_filters(tp, opt.budget);
  for (auto& [label, site] : twopt_sites(tp)) run_site(label, site, tp_filters);
  return r;
}

LawResult law_closure_iff_member_limit(const LawOptions& opt) {
  LawResult r{"closure-points-are-limits-of-filters-containing-the-sieve", 0, 0, {}};
  auto run_site = [&](const std::string& label, const CoverAssignment& site,
                      const std::vector<FilterCertificate>& filters) {
    const Carrier& c = *site.carrier;
    for (int o = 0; o < c.object_count(); ++o)
      for (int a = 0; a < c.universe_size(o); ++a) {
        auto cl = closure(site, o, a);
        for (auto& p : points_at(site.carrier, o)) {
          ++r.checked;
          bool lhs = std::find(cl.begin(), cl.end(), p) != cl.end();
          bool rhs = false;
          for (auto& g : filters)
            if (g.assignment.contains(o, a) && converges(g.assignment, site, o, p)) {
              rhs = true;
              break;
            }
          if (lhs != rhs)
            record(r, label + ", sieve " + c.sieve_label(o, a) + " at " +
                          site_point_label(site, o, p) +
                          (lhs ? ": in the closure but no filter containing it converges"
                               : ": converging filter exists but the point is outside the closure"));
        }
      }
  };
  auto c3 = Carrier::locale(chain_lattice(3));
  auto c3_filters = enumerate_filters(c3, opt.budget);
  for (auto& [label, site] : chain3_sites(c3)) run_site(label, site, c3_filters);
  auto tp = Carrier::category(two_point_category());
  auto tp_filters = enumerate_filters(tp, opt.budget);
  for (auto& [label, site] : twopt_sites(tp)) run_site(label, site, tp_filters);
  return r;
}

LawResult law_ultrafilter_limits_equal_clusters(const LawOptions& opt) {
  LawResult r{"ultrafilter-limits-equal-clusters", 0, 0, {}};
  auto run_site = [&](const std::string& label, const CoverAssignment& site,
                      const std::vector<FilterCertificate>& ultras) {
    const Carrier& c = *site.carrier;
    for (auto& u : ultras)
      for (int o = 0; o < c.object_count(); ++o) {
        ++r.checked;
        auto limits = limit_points(u.assignment, site, o);
        auto clusters = cluster_points(u.assignment, site, o);
        if (limits != clusters)
          record(r, label + " at " + c.object_name(o) + ": " +
                        std::to_string(limits.size()) + " limit point(s) vs " +
                        std::to_string(clusters.size()) + " cluster point(s)");
      }
  };
  auto c3 = Carrier::locale(chain_lattice(3));
  auto c3_ultras = enumerate_ultrafilters(c3, opt.budget);
  for (auto& [label, site] : chain3_sites(c3)) run_site(label, site, c3_ultras);
  auto tp = Carrier::category(two_point_category());
  auto tp_ultras = enumerate_ultrafilters(tp, opt.budget);
  for (auto& [label, site] : twopt_sites(tp)) run_site(label, site, tp_ultras);
  return r;
}

LawResult law_quasicompact_method_agreement(const LawOptions& opt) {
  LawResult r{"quasicompactness-method-agreement", 0, 0, {}};
  std::vector<std::pair<std::string, CoverAssignment>> sites;
  std::vector<std::pair<std::string, CarrierPtr>> locales{
      {"chain1", Carrier::locale(chain_lattice(1))},
      {"chain2", Carrier::locale(chain_lattice(2))},
      {"chain3", Carrier::locale(chain_lattice(3))},
      {"chain4", Carrier::locale(chain_lattice(4))},
      {"square", Carrier::locale(square_lattice())}};
  for (auto& [name, carrier] : locales) {
    for (auto kind : {TopologyKind::trivial, TopologyKind::discrete, TopologyKind::atomic,
                      TopologyKind::dense})
      sites.push_back({name, standard_topology(kind, carrier)});
    sites.push_back({name, sup_topology(carrier)});
  }
  auto tp = Carrier::category(two_point_category());
  for (auto& [label, site] : twopt_sites(tp)) sites.push_back({label, site});
  sites.push_back({"two_point/discrete", discrete_topology(tp)});

  for (auto& [label, site] : sites) {
    const Carrier& c = *site.carrier;
    for (int o = 0; o < c.object_count(); ++o) {
      ++r.checked;
      bool ultra = compactness_report(site, c.object_name(o), CompactnessMethod::ultrafilter,
                                      opt.budget)
                       .quasi_compact;
      bool exhaustive = compactness_report(site, c.object_name(o),
                                           CompactnessMethod::exhaustive, opt.budget)
                            .quasi_compact;
      if (ultra != exhaustive)
        record(r, label + " at " + c.object_name(o) + ": ultrafilter method says " +
                      (ultra ? "quasi-compact" : "not quasi-compact") +
                      ", exhaustive method disagrees");
    }
  }
  return r;
}

LawResult law_meet_of_compacts_compact(const LawOptions& opt) {
  LawResult r{"meets-of-compact-elements-stay-compact", 0, 0, {}};
  for (auto& [name, carrier] : std::vector<std::pair<std::string, CarrierPtr>>{
           {"divisors12", Carrier::locale(divisor_lattice(12))},
           {"square", Carrier::locale(square_lattice())}}) {
    const FiniteLattice& L = carrier->lat();
    for (auto kind : {TopologyKind::trivial, TopologyKind::dense}) {
      CoverAssignment j = standard_topology(kind, carrier);
      std::string label = name + (kind == TopologyKind::trivial ? "/trivial" : "/dense");
      std::vector<int> compact;
      for (int e = 0; e < L.size(); ++e)
        if (compactness_report(j, L.elements[e], CompactnessMethod::ultrafilter, opt.budget)
                .compact)
          compact.push_back(e);
      for (size_t i = 0; i < compact.size(); ++i)
        for (size_t k = i; k < compact.size(); ++k) {
          ++r.checked;
          int m = L.meet[compact[i]][compact[k]];
          if (!compactness_report(j, L.elements[m], CompactnessMethod::ultrafilter, opt.budget)
                   .compact)
            record(r, label + ": compact " + L.elements[compact[i]] + " and " +
                          L.elements[compact[k]] + " meet at non-compact " + L.elements[m]);
        }
    }
  }
  return r;
}

LawResult law_basis_filter_superset_oracle(const LawOptions& opt) {
  LawResult r{"generated-filters-equal-superset-scans", 0, 0, {}};
  auto c3 = Carrier::locale(chain_lattice(3));
  Rng rng(opt.seed + 2);
  for (int k = 0; k < opt.basis_samples; ++k) {
    CoverAssignment basis = random_basis(rng, c3);
    FilterCertificate gen = filter_from_basis(basis);
    ++r.checked;
    // value-level superset scan, away from the indexed engine
    bool match = true;
    for (int o = 0; o < c3->object_count() && match; ++o) {
      auto members = basis.sieves_at(o);
      for (int idx = 0; idx < c3->universe_size(o) && match; ++idx) {
        Sieve s = c3->sieve_value(o, idx);
        bool expect = false;
        for (auto& w : members)
          expect = expect || std::includes(s.members.begin(), s.members.end(),
                                           w.members.begin(), w.members.end());
        match = expect == gen.assignment.contains(o, idx);
      }
    }
    if (!match) record(r, "basis sample #" + std::to_string(k) + " disagrees with the scan");
  }
  return r;
}

LawResult law_locale_points_subset_scan(const LawOptions& opt) {
  LawResult r{"locale-points-equal-subset-scans", 0, 0, {}};
  Rng rng(opt.seed + 3);
  std::vector<FiniteLattice> corpus{chain_lattice(3), square_lattice(), divisor_lattice(12)};
  for (int i = 0; i < opt.random_locales; ++i)
    corpus.push_back(random_lattice(rng, opt.max_locale_elements));
  for (auto& L : corpus) {
    if (!is_frame(L)) continue;
    ++r.checked;
    auto pts = locale_points(L);
    std::vector<std::vector<int>> expected;
    for (unsigned mask = 0; mask < (1u << L.size()); ++mask) {
      std::vector<int> up;
      std::vector<bool> in(L.size(), false);
      for (int e = 0; e < L.size(); ++e)
        if (mask & (1u << e)) {
          up.push_back(e);
          in[e] = true;
        }
      if (up.empty() || !in[L.top] || in[L.bottom] || !is_up_set(L, up)) continue;
      bool ok = true;
      for (size_t a = 0; a < up.size() && ok; ++a)
        for (size_t b = a; b < up.size() && ok; ++b) ok = in[L.meet[up[a]][up[b]]];
      for (int x = 0; x < L.size() && ok; ++x)
        for (int y = 0; y < L.size() && ok; ++y)
          if (in[L.join[x][y]]) ok = in[x] || in[y];
      if (ok) expected.push_back(up);
    }
    bool match = pts.size() == expected.size();
    for (auto& e : expected) {
      bool found = false;
      for (auto& p : pts) found |= p.dual_kernel == e;
      match = match && found;
    }
    if (!match) record(r, "a lattice with " + std::to_string(L.size()) + " elements disagrees");
  }
  return r;
}

LawResult law_ultrafilters_equal_maximal_filters(const LawOptions& opt) {
  LawResult r{"enumerated-ultrafilters-equal-maximal-filters", 0, 0, {}};
  auto c3 = Carrier::locale(chain_lattice(3));
  auto filters = enumerate_filters(c3, opt.budget);
  auto ultras = enumerate_ultrafilters(c3, opt.budget);
  std::vector<std::vector<std::vector<int>>> maximal;
  for (auto& f : filters) {
    bool mx = true;
    for (auto& g : filters)
      if (!(g.assignment == f.assignment) && is_finer(f.assignment, g.assignment)) mx = false;
    if (mx) maximal.push_back(f.assignment.table);
  }
  ++r.checked;
  bool match = ultras.size() == maximal.size();
  for (size_t i = 0; match && i < ultras.size(); ++i)
    match = ultras[i].assignment.table == maximal[i];
  if (!match) record(r, "branching search and maximal-filter scan disagree on the chain");
  return r;
}

LawResult law_boolean_iff_squarefree(const LawOptions& opt) {
  LawResult r{"boolean-divisor-lattices-are-squarefree", 0, 0, {}};
  for (long long n = 1; n <= opt.boolean_max; ++n) {
    ++r.checked;
    bool sf = true;
    for (long long p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) sf = false;
    if (is_boolean(divisor_lattice(n)) != sf)
      record(r, "n=" + std::to_string(n) + " misclassified");
  }
  return r;
}

LawResult law_pullback_algebra(const LawOptions&) {
  LawResult r{"pullbacks-preserve-maxima-and-intersections", 0, 0, {}};
  std::vector<CarrierPtr> carriers{
      Carrier::locale(chain_lattice(3)), Carrier::locale(square_lattice()),
      Carrier::locale(divisor_lattice(12)), Carrier::category(two_point_category()),
      Carrier::category(poset_category(chain_lattice(3)))};
  for (auto& carrier : carriers) {
    const Carrier& c = *carrier;
    for (int o = 0; o < c.object_count(); ++o)
      for (int p = 0; p < c.member_count(o); ++p) {
        int d = c.arrow_source(o, p);
        ++r.checked;
        if (c.pullback(o, p, c.maximal_sieve_index(o)) != c.maximal_sieve_index(d))
          record(r, c.object_name(o) + ": the maximal sieve does not pull back to the maximal");
        for (int s = 0; s < c.universe_size(o); ++s)
          for (int t = s; t < c.universe_size(o); ++t) {
            ++r.checked;
            if (c.pullback(o, p, c.intersect(o, s, t)) !=
                c.intersect(d, c.pullback(o, p, s), c.pullback(o, p, t)))
              record(r, c.object_name(o) + ": pullback along " + c.member_name(o, p) +
                            " breaks an intersection");
          }
      }
  }
  return r;
}

LawResult law_filtered_object_axioms(const LawOptions&) {
  LawResult r{"cover-neighborhoods-form-filtered-objects", 0, 0, {}};
  std::vector<std::pair<std::string, CoverAssignment>> sites;
  auto tp = Carrier::category(two_point_category());
  for (auto& [label, site] : twopt_sites(tp)) sites.push_back({label, site});
  sites.push_back({"two_point/discrete", discrete_topology(tp)});
  for (auto& [name, carrier] : std::vector<std::pair<std::string, CarrierPtr>>{
           {"chain3", Carrier::locale(chain_lattice(3))},
           {"square", Carrier::locale(square_lattice())},
           {"divisors12", Carrier::locale(divisor_lattice(12))}})
    for (auto kind : {TopologyKind::trivial, TopologyKind::atomic, TopologyKind::dense,
                      TopologyKind::discrete})
      sites.push_back({name, standard_topology(kind, carrier)});

  for (auto& [label, site] : sites) {
    const Carrier& c = *site.carrier;
    for (int o = 0; o < c.object_count(); ++o)
      for (auto& p : points_at(site.carrier, o)) {
        NeighborhoodSystem ns = neighborhood_system(site, o, p);
        if (ns.blind) continue;
        ++r.checked;
        if (!ns.filtered_object)
          record(r, label + " at " + site_point_label(site, o, p) + ": axiom " +
                        ns.filtered_object.witness->axiom + " fails");
      }
  }
  return r;
}

LawResult law_locale_neighborhood_degeneracy(const LawOptions&) {
  LawResult r{"locale-neighborhoods-are-all-covers", 0, 0, {}};
  for (auto& [name, carrier] : std::vector<std::pair<std::string, CarrierPtr>>{
           {"chain3", Carrier::locale(chain_lattice(3))},
           {"square", Carrier::locale(square_lattice())},
           {"divisors12", Carrier::locale(divisor_lattice(12))}})
    for (auto kind : {TopologyKind::trivial, TopologyKind::discrete, TopologyKind::atomic,
                      TopologyKind::dense}) {
      CoverAssignment j = standard_topology(kind, carrier);
      for (int o = 0; o < carrier->object_count(); ++o)
        for (auto& p : points_at(carrier, o)) {
          ++r.checked;
          if (g_neighborhoods(j, o, p) != j.table[o])
            record(r, name + " at " + carrier->object_name(o) +
                          ": some cover is not a neighborhood of a valid point");
        }
    }
  return r;
}

LawResult law_compact_image_preservation(const LawOptions& opt) {
  LawResult r{"filter-preserving-images-of-compacta-are-compact", 0, 0, {}};
  auto tp = Carrier::category(two_point_category());
  FunctorSpec id_spec, swap_spec;
  for (auto& o : tp->cat().objects) id_spec.objects.push_back({o, o});
  for (auto& m : tp->cat().morphisms) id_spec.morphisms.push_back({m.name, m.name});
  swap_spec.objects = {{"one", "one"}, {"C", "C"}};
  swap_spec.morphisms = {{"id_one", "id_one"}, {"id_C", "id_C"}, {"x", "y"}, {"y", "x"},
                         {"t", "t"},           {"a", "b"},       {"b", "a"}};
  std::vector<FunctorMap> functors{build_functor(tp, tp, id_spec),
                                   build_functor(tp, tp, swap_spec)};
  for (auto& [label, site] : twopt_sites(tp))
    for (auto& f : functors) {
      if (!is_filter_preserving(f, site, site)) continue;
      for (auto& obj : tp->cat().objects) {
        CompactnessReport src =
            compactness_report(site, obj, CompactnessMethod::ultrafilter, opt.budget);
        if (!src.compact) continue;
        ++r.checked;
        int to = f.object_map[tp->require_object(obj)];
        if (!compactness_report(site, tp->object_name(to), CompactnessMethod::ultrafilter,
                                opt.budget)
                 .compact)
          record(r, label + ": compact " + obj + " maps to non-compact " +
                        tp->object_name(to));
      }
    }
  return r;
}

using LawFn = LawResult (*)(const LawOptions&);

const std::vector<std::pair<std::string, LawFn>>& registry() {
  static const std::vector<std::pair<std::string, LawFn>> laws{
      {"every-filter-satisfies-covering-axioms", law_filter_topology_bridge},
      {"topologies-below-a-filter-are-filters", law_subtopology_filters},
      {"ultrafilter-tables-are-union-prime", law_ultrafilter_union_prime},
      {"cluster-points-are-limits-of-finer-filters", law_cluster_iff_finer_limit},
      {"closure-points-are-limits-of-filters-containing-the-sieve", law_closure_iff_member_limit},
      {"ultrafilter-limits-equal-clusters", law_ultrafilter_limits_equal_clusters},
      {"quasicompactness-method-agreement", law_quasicompact_method_agreement},
      {"meets-of-compact-elements-stay-compact", law_meet_of_compacts_compact},
      {"generated-filters-equal-superset-scans", law_basis_filter_superset_oracle},
      {"locale-points-equal-subset-scans", law_locale_points_subset_scan},
      {"enumerated-ultrafilters-equal-maximal-filters", law_ultrafilters_equal_maximal_filters},
      {"boolean-divisor-lattices-are-squarefree", law_boolean_iff_squarefree},
      {"pullbacks-preserve-maxima-and-intersections", law_pullback_algebra},
      {"cover-neighborhoods-form-filtered-objects", law_filtered_object_axioms},
      {"locale-neighborhoods-are-all-covers", law_locale_neighborhood_degeneracy},
      {"filter-preserving-images-of-compacta-are-compact", law_compact_image_preservation},
  };
  return laws;
}

}  // namespace

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

LawResult run_law(const std::string& name, const LawOptions& options) {
  for (auto& [n, fn] : registry())
    if (n == name) return fn(options);
  throw Error("UnknownLaw", "no law named '" + name + "'");
}

std::vector<LawResult> run_law_corpus(const LawOptions& options) {
  std::vector<LawResult> out;
  for (auto& [name, fn] : registry()) out.push_back(fn(options));
  return out;
}

}  // namespace sieveforge
