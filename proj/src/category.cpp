#include "sieveforge/category.hpp"

#include <algorithm>
#include <unordered_set>

namespace sieveforge {

int FiniteCategory::object_index(std::string_view name) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects[i] == name) return i;
  return -1;
}

int FiniteCategory::require_object(std::string_view name) const {
  int i = object_index(name);
  if (i < 0) throw Error("UnknownObject", "no object named '" + std::string(name) + "'");
  return i;
}

int FiniteCategory::morphism_index(std::string_view name) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms[i].name == name) return i;
  return -1;
}

int FiniteCategory::require_morphism(std::string_view name) const {
  int i = morphism_index(name);
  if (i < 0) throw Error("UnknownMorphism", "no morphism named '" + std::string(name) + "'");
  return i;
}

FiniteCategory build_category(const CategorySpec& spec) {
  if (spec.objects.empty()) throw Error("InvalidArgument", "category needs at least one object");
  FiniteCategory c;
  c.objects = spec.objects;
  {
    std::unordered_set<std::string> seen;
    for (auto& o : spec.objects)
      if (!seen.insert(o).second) throw Error("InvalidArgument", "duplicate object '" + o + "'");
  }
  for (auto& [name, dom, cod] : spec.morphisms) {
    if (c.morphism_index(name) >= 0)
      throw Error("InvalidArgument", "duplicate morphism '" + name + "'");
    c.morphisms.push_back({name, c.require_object(dom), c.require_object(cod)});
  }
  const int m = c.morphism_count();

  c.identity.assign(c.object_count(), -1);
  for (auto& [obj, mor] : spec.identities) {
    int oi = c.require_object(obj);
    int mi = c.require_morphism(mor);
    if (c.morphisms[mi].dom != oi || c.morphisms[mi].cod != oi)
      throw Error("IdentityViolation", "identity '" + mor + "' is not an endomorphism of " + obj,
                  Witness{"identity", {obj}, {}, {mor}, ""});
    c.identity[oi] = mi;
  }
  for (int o = 0; o < c.object_count(); ++o)
    if (c.identity[o] < 0)
      throw Error("IdentityViolation", "object '" + c.objects[o] + "' has no declared identity",
                  Witness{"identity", {c.objects[o]}, {}, {}, ""});

  c.compose.assign(m, std::vector<int>(m, -1));
  auto set_composite = [&](int g, int f, int r) {
    if (c.compose[g][f] >= 0 && c.compose[g][f] != r)
      throw Error("IdentityViolation",
                  "conflicting composites for " + c.morphisms[g].name + " then " + c.morphisms[f].name,
                  Witness{"identity", {}, {}, {c.morphisms[g].name, c.morphisms[f].name}, ""});
    c.compose[g][f] = r;
  };

  // identity composites are forced
  for (int f = 0; f < m; ++f) {
    set_composite(c.identity[c.morphisms[f].dom], f, f);
    set_composite(f, c.identity[c.morphisms[f].cod], f);
  }
  for (auto& [g, f, r] : spec.composites) {
    int gi = c.require_morphism(g), fi = c.require_morphism(f), ri = c.require_morphism(r);
    if (c.morphisms[gi].cod != c.morphisms[fi].dom)
      throw Error("MissingComposite", "'" + g + "' then '" + f + "' is not composable",
                  Witness{"composite", {}, {}, {g, f}, ""});
    if (c.morphisms[ri].dom != c.morphisms[gi].dom || c.morphisms[ri].cod != c.morphisms[fi].cod)
      throw Error("IdentityViolation", "composite of '" + g + "' then '" + f + "' has wrong endpoints",
                  Witness{"composite", {}, {}, {g, f, r}, ""});
    set_composite(gi, fi, ri);
  }

  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.morphisms[g].cod == c.morphisms[f].dom && c.compose[g][f] < 0)
        throw Error("MissingComposite",
                    "no composite declared for " + c.morphisms[g].name + " then " + c.morphisms[f].name,
                    Witness{"composite", {}, {}, {c.morphisms[g].name, c.morphisms[f].name}, ""});

  // identity laws beyond the forced entries cannot fail now; associativity can.
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (c.morphisms[h].cod != c.morphisms[g].dom) continue;
      int gh = c.compose[h][g];
      for (int f = 0; f < m; ++f) {
        if (c.morphisms[g].cod != c.morphisms[f].dom) continue;
        int fg = c.compose[g][f];
        if (c.compose[h][fg] != c.compose[gh][f])
          throw Error("AssociativityViolation",
                      "(" + c.morphisms[f].name + " after " + c.morphisms[g].name + " after " +
                          c.morphisms[h].name + ") composes two ways",
                      Witness{"associativity", {}, {},
                              {c.morphisms[h].name, c.morphisms[g].name, c.morphisms[f].name}, ""});
      }
    }

  c.incoming.assign(c.object_count(), {});
  for (int i = 0; i < m; ++i) c.incoming[c.morphisms[i].cod].push_back(i);
  return c;
}

FiniteCategory poset_category(const FiniteLattice& L) {
  FiniteCategory c;
  c.objects = L.elements;
  const int n = L.size();
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      if (L.leq[m][k]) {
        arrow[m][k] = c.morphism_count();
        c.morphisms.push_back({L.elements[m] + "<=" + L.elements[k], m, k});
      }
  c.identity.assign(n, -1);
  for (int k = 0; k < n; ++k) c.identity[k] = arrow[k][k];
  const int m = c.morphism_count();
  c.compose.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.morphisms[g].cod == c.morphisms[f].dom)
        c.compose[g][f] = arrow[c.morphisms[g].dom][c.morphisms[f].cod];
  c.incoming.assign(n, {});
  for (int i = 0; i < m; ++i) c.incoming[c.morphisms[i].cod].push_back(i);
  return c;
}

Sieve maximal_sieve(const FiniteCategory& cat, std::string_view obj) {
  int o = cat.require_object(obj);
  return Sieve{o, cat.incoming[o]};
}

Verdict is_sieve(const FiniteCategory& cat, std::string_view obj,
                 const std::vector<std::string>& members) {
  int o = cat.require_object(obj);
  std::vector<bool> in(cat.morphism_count(), false);
  for (auto& name : members) {
    int mi = cat.require_morphism(name);
    if (cat.morphisms[mi].cod != o)
      return Verdict::fail(Witness{"codomain", {std::string(obj)}, {}, {name},
                                   "member does not land in the owner object"});
    in[mi] = true;
  }
  for (int f = 0; f < cat.morphism_count(); ++f) {
    if (!in[f]) continue;
    for (int g = 0; g < cat.morphism_count(); ++g) {
      if (cat.morphisms[g].cod != cat.morphisms[f].dom) continue;
      int fg = cat.then(g, f);
      if (!in[fg])
        return Verdict::fail(Witness{
            "closure", {std::string(obj)}, {}, {cat.morphisms[f].name, cat.morphisms[g].name},
            cat.morphisms[f].name + " after " + cat.morphisms[g].name + " = " +
                cat.morphisms[fg].name + " is missing"});
    }
  }
  return Verdict::ok();
}

Sieve generated_sieve(const FiniteCategory& cat, std::string_view obj,
                      const std::vector<std::string>& generators) {
  int o = cat.require_object(obj);
  std::vector<bool> in(cat.morphism_count(), false);
  std::vector<int> todo;
  for (auto& name : generators) {
    int mi = cat.require_morphism(name);
    if (cat.morphisms[mi].cod != o)
      throw Error("BadCodomain", "generator '" + name + "' does not land in " + std::string(obj),
                  Witness{"codomain", {std::string(obj)}, {}, {name}, ""});
    if (!in[mi]) {
      in[mi] = true;
      todo.push_back(mi);
    }
  }
  while (!todo.empty()) {
    int f = todo.back();
    todo.pop_back();
    for (int g = 0; g < cat.morphism_count(); ++g) {
      if (cat.morphisms[g].cod != cat.morphisms[f].dom) continue;
      int fg = cat.then(g, f);
      if (!in[fg]) {
        in[fg] = true;
        todo.push_back(fg);
      }
    }
  }
  Sieve s{o, {}};
  for (int i = 0; i < cat.morphism_count(); ++i)
    if (in[i]) s.members.push_back(i);
  return s;
}

Sieve pullback_sieve(const FiniteCategory& cat, std::string_view h, const Sieve& s) {
  int hi = cat.require_morphism(h);
  if (cat.morphisms[hi].cod != s.owner)
    throw Error("OwnerMismatch", "sieve is not owned by the codomain of '" + std::string(h) + "'",
                Witness{"owner", {cat.objects[s.owner]}, {}, {std::string(h)}, ""});
  int d = cat.morphisms[hi].dom;
  std::vector<bool> in(cat.morphism_count(), false);
  for (int m : s.members) in[m] = true;
  Sieve r{d, {}};
  for (int g : cat.incoming[d])
    if (in[cat.then(g, hi)]) r.members.push_back(g);
  return r;
}

Sieve restrict_sieve(const FiniteLattice& L, const Sieve& s, std::string_view m) {
  int mi = L.require(m);
  if (!L.leq[mi][s.owner])
    throw Error("OwnerMismatch", "'" + std::string(m) + "' is not below the sieve owner");
  Sieve r{mi, {}};
  for (int e : s.members)
    if (L.leq[e][mi]) r.members.push_back(e);
  return r;
}

std::vector<std::string> terminal_objects(const FiniteCategory& cat) {
  std::vector<std::string> out;
  for (int t = 0; t < cat.object_count(); ++t) {
    std::vector<int> count(cat.object_count(), 0);
    for (int m : cat.incoming[t]) ++count[cat.morphisms[m].dom];
    bool terminal = true;
    for (int x = 0; x < cat.object_count() && terminal; ++x) terminal = count[x] == 1;
    if (terminal) out.push_back(cat.objects[t]);
  }
  return out;
}

std::vector<CatPoint> category_points(const FiniteCategory& cat, std::string_view obj) {
  int o = cat.require_object(obj);
  auto terms = terminal_objects(cat);
  if (terms.empty()) throw Error("NoTerminalObject", "category has no terminal object");
  int t = cat.require_object(terms.front());
  std::vector<CatPoint> out;
  for (int m : cat.incoming[o])
    if (cat.morphisms[m].dom == t) out.push_back(CatPoint{m});
  return out;
}

std::vector<std::string> sieve_names(const FiniteCategory& cat, const Sieve& s) {
  std::vector<std::string> out;
  out.reserve(s.members.size());
  for (int m : s.members) out.push_back(cat.morphisms[m].name);
  return out;
}

std::vector<std::string> sieve_names(const FiniteLattice& L, const Sieve& s) {
  std::vector<std::string> out;
  out.reserve(s.members.size());
  for (int m : s.members) out.push_back(L.elements[m]);
  return out;
}

}  // namespace sieveforge
