#include "sieveforge/model.hpp"

#include <algorithm>
#include <sstream>

#include "sieveforge/coverage.hpp"

namespace sieveforge {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw Error("SyntaxError", "line " + std::to_string(line + 1) + ": " + what);
}

}  // namespace

bool ModelDocument::has(const std::string& name) const {
  return lattices.count(name) || categories.count(name) || assignments.count(name) ||
         functors.count(name) || points.count(name);
}

FiniteLattice ModelDocument::lattice(const std::string& name) const {
  auto it = lattices.find(name);
  if (it == lattices.end()) throw Error("UnresolvedReference", "no lattice named '" + name + "'");
  if (it->second.divisors) return divisor_lattice(*it->second.divisors);
  return build_lattice(it->second.elements, it->second.order);
}

CarrierPtr ModelDocument::carrier(const std::string& name, std::size_t budget) const {
  auto cached = carrier_cache_.find(name);
  if (cached != carrier_cache_.end()) return cached->second;
  CarrierPtr c;
  if (lattices.count(name)) {
    c = Carrier::locale(lattice(name), budget);
  } else if (auto it = categories.find(name); it != categories.end()) {
    c = Carrier::category(build_category(it->second.spec), budget);
  } else {
    throw Error("UnresolvedReference", "no lattice or category named '" + name + "'");
  }
  carrier_cache_[name] = c;
  return c;
}

CoverAssignment ModelDocument::assignment(const std::string& name, std::size_t budget) const {
  auto it = assignments.find(name);
  if (it == assignments.end())
    throw Error("UnresolvedReference", "no cover assignment named '" + name + "'");
  const AssignmentDef& def = it->second;
  CarrierPtr c = carrier(def.carrier, budget);
  if (def.standard) {
    const std::string& kind = *def.standard;
    if (kind == "sup") return sup_topology(c);
    if (kind == "trivial") return trivial_topology(c);
    if (kind == "discrete") return discrete_topology(c);
    if (kind == "atomic") return standard_topology(TopologyKind::atomic, c);
    if (kind == "dense") return standard_topology(TopologyKind::dense, c);
    throw Error("ValidationError", "unknown standard topology '" + kind + "'");
  }
  CoverAssignment a = empty_assignment(c);
  for (auto& [obj, members] : def.sieves) add_sieve(a, obj, members);
  return a;
}

FunctorMap ModelDocument::functor(const std::string& name, std::size_t budget) const {
  auto it = functors.find(name);
  if (it == functors.end()) throw Error("UnresolvedReference", "no functor named '" + name + "'");
  return build_functor(carrier(it->second.source, budget), carrier(it->second.target, budget),
                       it->second.spec);
}

Point ModelDocument::point(const std::string& name, std::size_t budget) const {
  auto it = points.find(name);
  if (it == points.end()) throw Error("UnresolvedReference", "no point named '" + name + "'");
  const PointDef& def = it->second;
  CarrierPtr c = carrier(def.carrier, budget);
  if (def.via) {
    const FiniteCategory& cat = c->cat();
    int m = cat.require_morphism(*def.via);
    for (auto& cp : category_points(cat, cat.objects[cat.morphisms[m].cod]))
      if (cp.morphism == m) {
        Point p;
        p.flavor = Flavor::category;
        p.morphism = m;
        return p;
      }
    throw Error("ValidationError",
                "'" + *def.via + "' is not a morphism from the terminal object");
  }
  const FiniteLattice& L = c->lat();
  std::vector<int> dual;
  for (auto& e : def.dual_kernel) dual.push_back(L.require(e));
  std::sort(dual.begin(), dual.end());
  for (auto& lp : locale_points(L))
    if (lp.dual_kernel == dual) {
      Point p;
      p.flavor = Flavor::locale;
      p.dual_kernel = lp.dual_kernel;
      p.kernel = lp.kernel;
      return p;
    }
  throw Error("ValidationError",
              "the set is not the dual kernel of any point of '" + def.carrier + "'");
}

ModelDocument parse_model(const std::string& text) {
  ModelDocument doc;
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  auto declare = [&](const std::string& kind, const std::string& name, int ln) {
    if (doc.has(name)) syntax_error(ln, "duplicate model name '" + name + "'");
    doc.declarations.push_back({kind, name});
  };

  size_t i = 0;
  while (i < lines.size()) {
    auto head = tokenize(lines[i]);
    if (head.empty()) {
      ++i;
      continue;
    }
    const std::string& kw = head[0];
    int ln = static_cast<int>(i);

    if (kw == "lattice") {
      if (head.size() == 4 && head[2] == "divisors") {
        declare("lattice", head[1], ln);
        LatticeDef def;
        try {
          def.divisors = std::stoll(head[3]);
        } catch (const std::exception&) {
          syntax_error(ln, "divisors wants an integer");
        }
        doc.lattices[head[1]] = def;
        ++i;
        continue;
      }
      if (head.size() != 2) syntax_error(ln, "expected `lattice NAME`");
      declare("lattice", head[1], ln);
      LatticeDef def;
      ++i;
      for (; i < lines.size(); ++i) {
        auto row = tokenize(lines[i]);
        if (row.empty()) continue;
        if (row[0] == "end") break;
        if (row[0] == "elements")
          def.elements.insert(def.elements.end(), row.begin() + 1, row.end());
        else if (row[0] == "order" && row.size() == 3)
          def.order.push_back({row[1], row[2]});
        else
          syntax_error(static_cast<int>(i), "expected `elements ...`, `order A B` or `end`");
      }
      if (i == lines.size()) syntax_error(ln, "unterminated lattice block");
      ++i;
      doc.lattices[head[1]] = def;
    } else if (kw == "category") {
      if (head.size() != 2) syntax_error(ln, "expected `category NAME`");
      declare("category", head[1], ln);
      CategoryDef def;
      ++i;
      for (; i < lines.size(); ++i) {
        auto row = tokenize(lines[i]);
        if (row.empty()) continue;
        if (row[0] == "end") break;
        if (row[0] == "objects")
          def.spec.objects.insert(def.spec.objects.end(), row.begin() + 1, row.end());
        else if (row[0] == "morphism" && row.size() == 4)
          def.spec.morphisms.push_back({row[1], row[2], row[3]});
        else if (row[0] == "identity" && row.size() == 3)
          def.spec.identities.push_back({row[1], row[2]});
        else if (row[0] == "compose" && row.size() == 4)
          def.spec.composites.push_back({row[1], row[2], row[3]});
        else
          syntax_error(static_cast<int>(i), "unrecognized category row");
      }
      if (i == lines.size()) syntax_error(ln, "unterminated category block");
      ++i;
      doc.categories[head[1]] = def;
    } else if (kw == "topology" || kw == "filter" || kw == "basis" || kw == "subbase") {
      if (head.size() < 4 || head[2] != "on")
        syntax_error(ln, "expected `" + kw + " NAME on CARRIER`");
      declare(kw, head[1], ln);
      AssignmentDef def;
      def.kind = kw;
      def.carrier = head[3];
      if (head.size() == 6 && head[4] == "standard") {
        def.standard = head[5];
        ++i;
      } else if (head.size() == 4) {
        ++i;
        for (; i < lines.size(); ++i) {
          auto row = tokenize(lines[i]);
          if (row.empty()) continue;
          if (row[0] == "end") break;
          if (row[0] == "sieve" && row.size() >= 2)
            def.sieves.push_back({row[1], {row.begin() + 2, row.end()}});
          else
            syntax_error(static_cast<int>(i), "expected `sieve OBJ members...` or `end`");
        }
        if (i == lines.size()) syntax_error(ln, "unterminated " + kw + " block");
        ++i;
      } else {
        syntax_error(ln, "expected `" + kw + " NAME on CARRIER [standard KIND]`");
      }
      doc.assignments[head[1]] = def;
    } else if (kw == "functor") {
      if (head.size() != 6 || head[2] != "from" || head[4] != "to")
        syntax_error(ln, "expected `functor NAME from SRC to TGT`");
      declare("functor", head[1], ln);
      FunctorDef def;
      def.source = head[3];
      def.target = head[5];
      ++i;
      for (; i < lines.size(); ++i) {
        auto row = tokenize(lines[i]);
        if (row.empty()) continue;
        if (row[0] == "end") break;
        if (row[0] == "object" && row.size() == 3)
          def.spec.objects.push_back({row[1], row[2]});
        else if (row[0] == "map" && row.size() == 3)
          def.spec.morphisms.push_back({row[1], row[2]});
        else
          syntax_error(static_cast<int>(i), "expected `object A B`, `map M N` or `end`");
      }
      if (i == lines.size()) syntax_error(ln, "unterminated functor block");
      ++i;
      doc.functors[head[1]] = def;
    } else if (kw == "point") {
      if (head.size() < 6 || head[2] != "on")
        syntax_error(ln, "expected `point NAME on CARRIER via M` or `... dualkernel E...`");
      declare("point", head[1], ln);
      PointDef def;
      def.carrier = head[3];
      if (head[4] == "via" && head.size() == 6)
        def.via = head[5];
      else if (head[4] == "dualkernel")
        def.dual_kernel.assign(head.begin() + 5, head.end());
      else
        syntax_error(ln, "expected `via MORPHISM` or `dualkernel ELEMENTS...`");
      ++i;
      doc.points[head[1]] = def;
    } else {
      syntax_error(ln, "unrecognized keyword '" + kw + "'");
    }
  }

  // validation pass: everything must materialize
  for (auto& [kind, name] : doc.declarations) {
    if (kind == "lattice" || kind == "category")
      doc.carrier(name);
    else if (kind == "functor")
      doc.functor(name);
    else if (kind == "point")
      doc.point(name);
    else
      doc.assignment(name);
  }
  return doc;
}

std::string serialize_model(const ModelDocument& doc) {
  std::ostringstream out;
  bool first = true;
  for (auto& [kind, name] : doc.declarations) {
    if (!first) out << "\n";
    first = false;
    if (kind == "lattice") {
      const LatticeDef& def = doc.lattices.at(name);
      if (def.divisors) {
        out << "lattice " << name << " divisors " << *def.divisors << "\n";
        continue;
      }
      out << "lattice " << name << "\n  elements";
      for (auto& e : def.elements) out << ' ' << e;
      out << "\n";
      for (auto& [a, b] : def.order) out << "  order " << a << ' ' << b << "\n";
      out << "end\n";
    } else if (kind == "category") {
      const CategorySpec& spec = doc.categories.at(name).spec;
      out << "category " << name << "\n  objects";
      for (auto& o : spec.objects) out << ' ' << o;
      out << "\n";
      for (auto& [n, d, c] : spec.morphisms)
        out << "  morphism " << n << ' ' << d << ' ' << c << "\n";
      for (auto& [o, m] : spec.identities) out << "  identity " << o << ' ' << m << "\n";
      for (auto& [g, f, r] : spec.composites)
        out << "  compose " << g << ' ' << f << ' ' << r << "\n";
      out << "end\n";
    } else if (kind == "functor") {
      const FunctorDef& def = doc.functors.at(name);
      out << "functor " << name << " from " << def.source << " to " << def.target << "\n";
      for (auto& [a, b] : def.spec.objects) out << "  object " << a << ' ' << b << "\n";
      for (auto& [a, b] : def.spec.morphisms) out << "  map " << a << ' ' << b << "\n";
      out << "end\n";
    } else if (kind == "point") {
      const PointDef& def = doc.points.at(name);
      out << "point " << name << " on " << def.carrier;
      if (def.via) {
        out << " via " << *def.via << "\n";
      } else {
        out << " dualkernel";
        for (auto& e : def.dual_kernel) out << ' ' << e;
        out << "\n";
      }
    } else {
      const AssignmentDef& def = doc.assignments.at(name);
      out << def.kind << ' ' << name << " on " << def.carrier;
      if (def.standard) {
        out << " standard " << *def.standard << "\n";
        continue;
      }
      out << "\n";
      for (auto& [obj, members] : def.sieves) {
        out << "  sieve " << obj;
        for (auto& m : members) out << ' ' << m;
        out << "\n";
      }
      out << "end\n";
    }
  }
  return out.str();
}

}  // namespace sieveforge
