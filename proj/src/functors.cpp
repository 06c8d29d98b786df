#include "sieveforge/functors.hpp"

#include <algorithm>

namespace sieveforge {

FunctorMap build_functor(const CarrierPtr& source, const CarrierPtr& target,
                         const FunctorSpec& spec) {
  const FiniteCategory& s = source->cat();
  const FiniteCategory& t = target->cat();
  FunctorMap f;
  f.source = source;
  f.target = target;
  f.object_map.assign(s.object_count(), -1);
  f.morphism_map.assign(s.morphism_count(), -1);
  for (auto& [a, b] : spec.objects) f.object_map[s.require_object(a)] = t.require_object(b);
  for (auto& [a, b] : spec.morphisms) f.morphism_map[s.require_morphism(a)] = t.require_morphism(b);
  for (int o = 0; o < s.object_count(); ++o)
    if (f.object_map[o] < 0)
      throw Error("NotAFunctor", "object '" + s.objects[o] + "' is unmapped",
                  Witness{"totality", {s.objects[o]}, {}, {}, ""});
  for (int m = 0; m < s.morphism_count(); ++m)
    if (f.morphism_map[m] < 0)
      throw Error("NotAFunctor", "morphism '" + s.morphisms[m].name + "' is unmapped",
                  Witness{"totality", {}, {}, {s.morphisms[m].name}, ""});

  for (int m = 0; m < s.morphism_count(); ++m) {
    const Morphism& sm = s.morphisms[m];
    const Morphism& tm = t.morphisms[f.morphism_map[m]];
    if (tm.dom != f.object_map[sm.dom] || tm.cod != f.object_map[sm.cod])
      throw Error("NotAFunctor", "image of '" + sm.name + "' has wrong endpoints",
                  Witness{"endpoints", {}, {}, {sm.name, tm.name}, ""});
  }
  for (int o = 0; o < s.object_count(); ++o)
    if (f.morphism_map[s.identity[o]] != t.identity[f.object_map[o]])
      throw Error("NotAFunctor", "identity of '" + s.objects[o] + "' is not preserved",
                  Witness{"identity", {s.objects[o]}, {}, {s.morphisms[s.identity[o]].name}, ""});
  for (int g = 0; g < s.morphism_count(); ++g)
    for (int m = 0; m < s.morphism_count(); ++m) {
      if (s.morphisms[g].cod != s.morphisms[m].dom) continue;
      int lhs = f.morphism_map[s.then(g, m)];
      int rhs = t.then(f.morphism_map[g], f.morphism_map[m]);
      if (lhs != rhs)
        throw Error("NotAFunctor",
                    "composite of '" + s.morphisms[g].name + "' then '" + s.morphisms[m].name +
                        "' is not preserved",
                    Witness{"composition", {}, {},
                            {s.morphisms[g].name, s.morphisms[m].name}, ""});
    }
  return f;
}

Sieve image_sieve(const FunctorMap& f, const Sieve& r) {
  const FiniteCategory& s = f.source->cat();
  const FiniteCategory& t = f.target->cat();
  if (r.owner < 0 || r.owner >= s.object_count())
    throw Error("OwnerMismatch", "sieve owner is not a source object");
  int fc = f.object_map[r.owner];
  std::vector<bool> image(t.morphism_count(), false);
  for (int m : r.members) {
    if (s.morphisms[m].cod != r.owner)
      throw Error("OwnerMismatch", "sieve member does not land in its owner");
    image[f.morphism_map[m]] = true;
  }
  // factorization scan: m is in the image sieve iff m = F(f0)∘g for some
  // member image F(f0) and target morphism g
  Sieve out{fc, {}};
  for (int m : t.incoming[fc]) {
    bool factors = false;
    for (int ff = 0; ff < t.morphism_count() && !factors; ++ff) {
      if (!image[ff]) continue;
      for (int g : t.incoming[t.morphisms[ff].dom])
        if (t.morphisms[g].dom == t.morphisms[m].dom && t.then(g, ff) == m) {
          factors = true;
          break;
        }
    }
    if (factors) out.members.push_back(m);
  }
  return out;
}

Verdict is_filter_preserving(const FunctorMap& f, const CoverAssignment& src,
                             const CoverAssignment& tgt) {
  if (!src.carrier->same_carrier(*f.source) || !tgt.carrier->same_carrier(*f.target))
    throw Error("CarrierMismatch", "assignments do not live on the functor's carriers");
  const Carrier& cs = *src.carrier;
  const Carrier& ct = *tgt.carrier;
  for (int o = 0; o < cs.object_count(); ++o)
    for (int idx : src.table[o]) {
      Sieve img = image_sieve(f, cs.sieve_value(o, idx));
      int tidx = ct.sieve_index_of_names(
          img.owner, [&] {
            std::vector<std::string> names;
            for (int m : img.members) names.push_back(ct.cat().morphisms[m].name);
            return names;
          }());
      if (!tgt.contains(img.owner, tidx))
        return Verdict::fail(Witness{"preservation",
                                     {cs.object_name(o), ct.object_name(img.owner)},
                                     {cs.sieve_names_of(o, idx), ct.sieve_names_of(img.owner, tidx)},
                                     {},
                                     "image sieve is not assigned in the target"});
    }
  return Verdict::ok();
}

namespace {

int designated_terminal(const FiniteCategory& cat) {
  auto terms = terminal_objects(cat);
  if (terms.empty()) throw Error("NoTerminalObject", "category has no terminal object");
  return cat.require_object(terms.front());
}

Point image_point(const FunctorMap& f, const Point& p) {
  Point q;
  q.flavor = Flavor::category;
  q.morphism = f.morphism_map[p.morphism];
  return q;
}

int target_sieve_index(const Carrier& ct, const Sieve& s) {
  Bits b(ct.member_count(s.owner));
  for (int m : s.members)
    for (int pos = 0; pos < ct.member_count(s.owner); ++pos)
      if (ct.member_id(s.owner, pos) == m) b.set(pos);
  return ct.index_of(s.owner, b);
}

}  // namespace

ImageLawReport image_law_report(const FunctorMap& f, const CoverAssignment& source_topology,
                                const CoverAssignment& target_topology,
                                const CoverAssignment& source_basis) {
  const Carrier& cs = *f.source;
  const Carrier& ct = *f.target;
  if (!source_topology.carrier->same_carrier(cs) || !target_topology.carrier->same_carrier(ct) ||
      !source_basis.carrier->same_carrier(cs))
    throw Error("CarrierMismatch", "assignments do not live on the functor's carriers");
  int sterm = designated_terminal(cs.cat());
  int tterm = designated_terminal(ct.cat());
  if (f.object_map[sterm] != tterm)
    throw Error("PreconditionUnmet", "the source terminal object does not map to the target one");

  ImageLawReport rep;
  rep.g_neighborhood_images = Verdict::ok();
  rep.cover_neighborhood_images = Verdict::ok();
  rep.basis_images = Verdict::ok();

  // (1) images of 𝔊-neighborhoods are 𝔊-neighborhoods of the image point
  for (int o = 0; o < cs.object_count() && rep.g_neighborhood_images; ++o)
    for (auto& p : points_at(f.source, o)) {
      for (int v : g_neighborhoods(source_topology, o, p)) {
        Sieve img = image_sieve(f, cs.sieve_value(o, v));
        int tidx = target_sieve_index(ct, img);
        Point q = image_point(f, p);
        bool ok = target_topology.contains(img.owner, tidx);
        if (ok) {
          auto gn = g_neighborhoods(target_topology, img.owner, q);
          ok = std::find(gn.begin(), gn.end(), tidx) != gn.end();
        }
        if (!ok) {
          rep.g_neighborhood_images = Verdict::fail(
              Witness{"image-g-neighborhood",
                      {cs.object_name(o), ct.object_name(img.owner)},
                      {cs.sieve_names_of(o, v), ct.sieve_names_of(img.owner, tidx)},
                      {point_label(cs, p)},
                      "image of a covering neighborhood is not one of the image point"});
          break;
        }
      }
      if (!rep.g_neighborhood_images) break;
    }

  // (2) images of cover-neighborhood systems stay cover-neighborhood systems
  for (int o = 0; o < cs.object_count() && rep.cover_neighborhood_images; ++o)
    for (auto& p : points_at(f.source, o)) {
      NeighborhoodSystem ns = neighborhood_system(source_topology, o, p);
      if (ns.blind) continue;
      Point q = image_point(f, p);
      for (int w : ns.cover_nbhds) {
        Sieve img = image_sieve(f, cs.sieve_value(o, w));
        int tidx = target_sieve_index(ct, img);
        bool ok = false;
        for (int v : g_neighborhoods(target_topology, img.owner, q))
          if (ct.subset(img.owner, v, tidx)) {
            ok = true;
            break;
          }
        if (!ok) {
          rep.cover_neighborhood_images = Verdict::fail(
              Witness{"image-cover-neighborhood",
                      {cs.object_name(o), ct.object_name(img.owner)},
                      {cs.sieve_names_of(o, w), ct.sieve_names_of(img.owner, tidx)},
                      {point_label(cs, p)},
                      "image contains no covering neighborhood of the image point"});
          break;
        }
      }
      if (!rep.cover_neighborhood_images) break;
    }

  // (3) the image family of a basis satisfies the basis axioms at image
  // objects, with pullbacks along every target arrow between image objects
  {
    CoverAssignment image_family = empty_assignment(f.target);
    std::vector<bool> image_obj(ct.object_count(), false);
    for (int o = 0; o < cs.object_count(); ++o) {
      image_obj[f.object_map[o]] = true;
      for (int idx : source_basis.table[o]) {
        Sieve img = image_sieve(f, cs.sieve_value(o, idx));
        image_family.insert(img.owner, target_sieve_index(ct, img));
      }
    }
    auto member_below = [&](int o, int idx) {
      for (int w : image_family.table[o])
        if (ct.subset(o, w, idx)) return true;
      return false;
    };
    for (int o = 0; o < ct.object_count() && rep.basis_images; ++o) {
      if (!image_obj[o]) continue;
      if (image_family.table[o].empty() ||
          image_family.contains(o, ct.empty_sieve(o))) {
        rep.basis_images = Verdict::fail(Witness{
            "B3", {ct.object_name(o)}, {}, {}, "image family is empty or contains the empty sieve"});
        break;
      }
      for (size_t i = 0; i < image_family.table[o].size() && rep.basis_images; ++i)
        for (size_t j = i; j < image_family.table[o].size(); ++j) {
          int m = ct.intersect(o, image_family.table[o][i], image_family.table[o][j]);
          if (!member_below(o, m)) {
            rep.basis_images = Verdict::fail(
                Witness{"B1",
                        {ct.object_name(o)},
                        {ct.sieve_names_of(o, image_family.table[o][i]),
                         ct.sieve_names_of(o, image_family.table[o][j])},
                        {},
                        "no image sieve inside the intersection"});
            break;
          }
        }
      for (int s : image_family.table[o]) {
        if (!rep.basis_images) break;
        for (int pos = 0; pos < ct.member_count(o); ++pos) {
          int d = ct.arrow_source(o, pos);
          if (!image_obj[d]) continue;
          int pulled = ct.pullback(o, pos, s);
          if (!member_below(d, pulled)) {
            rep.basis_images = Verdict::fail(
                Witness{"B2",
                        {ct.object_name(o), ct.object_name(d)},
                        {ct.sieve_names_of(o, s), ct.sieve_names_of(d, pulled)},
                        {ct.member_name(o, pos)},
                        "pullback of an image sieve has no image sieve inside it"});
            break;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace sieveforge
