#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sieveforge/convergence.hpp"
#include "sieveforge/functors.hpp"

namespace sieveforge {

// Line-oriented model files: named blocks for lattices, categories, cover
// assignments (topology/filter/basis/subbase), functors and points, with
// `sieve <obj> <members...>` rows inside assignment blocks. Hand-writable
// and diff-friendly; reports are emitted as JSON elsewhere.

struct LatticeDef {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::optional<long long> divisors;  // `lattice N divisors k` sugar
  bool operator==(const LatticeDef&) const = default;
};

struct CategoryDef {
  CategorySpec spec;
  bool operator==(const CategoryDef&) const = default;
};

struct AssignmentDef {
  std::string kind;  // topology | filter | basis | subbase
  std::string carrier;
  std::optional<std::string> standard;  // trivial | discrete | atomic | dense | sup
  std::vector<std::pair<std::string, std::vector<std::string>>> sieves;
  bool operator==(const AssignmentDef&) const = default;
};

struct FunctorDef {
  std::string source;
  std::string target;
  FunctorSpec spec;
  bool operator==(const FunctorDef&) const = default;
};

struct PointDef {
  std::string carrier;
  std::optional<std::string> via;         // category flavor: a morphism name
  std::vector<std::string> dual_kernel;   // locale flavor
  bool operator==(const PointDef&) const = default;
};

class ModelDocument {
 public:
  std::vector<std::pair<std::string, std::string>> declarations;  // (kind, name) in order
  std::map<std::string, LatticeDef> lattices;
  std::map<std::string, CategoryDef> categories;
  std::map<std::string, AssignmentDef> assignments;
  std::map<std::string, FunctorDef> functors;
  std::map<std::string, PointDef> points;

  bool operator==(const ModelDocument& o) const {
    return declarations == o.declarations && lattices == o.lattices &&
           categories == o.categories && assignments == o.assignments &&
           functors == o.functors && points == o.points;
  }

  bool has(const std::string& name) const;

  // materialization (cached per document)
  FiniteLattice lattice(const std::string& name) const;
  CarrierPtr carrier(const std::string& name, std::size_t budget = kDefaultBudget) const;
  CoverAssignment assignment(const std::string& name, std::size_t budget = kDefaultBudget) const;
  FunctorMap functor(const std::string& name, std::size_t budget = kDefaultBudget) const;
  Point point(const std::string& name, std::size_t budget = kDefaultBudget) const;

 private:
  mutable std::map<std::string, CarrierPtr> carrier_cache_;
};

/// Parses and validates a document. SyntaxError carries the line number;
/// UnresolvedReference and ValidationError name the offending entity.
ModelDocument parse_model(const std::string& text);

/// Canonical text form; parse(serialize(d)) == d.
std::string serialize_model(const ModelDocument& doc);

}  // namespace sieveforge
