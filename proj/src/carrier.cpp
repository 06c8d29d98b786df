#include "sieveforge/carrier.hpp"

#include <algorithm>
#include <unordered_set>

namespace sieveforge {

const FiniteCategory& Carrier::cat() const {
  if (flavor_ != Flavor::category) throw Error("CarrierMismatch", "carrier is not a category");
  return cat_;
}

const FiniteLattice& Carrier::lat() const {
  if (flavor_ != Flavor::locale) throw Error("CarrierMismatch", "carrier is not a locale");
  return lat_;
}

int Carrier::object_index(std::string_view name) const {
  for (int i = 0; i < object_count(); ++i)
    if (object_names_[i] == name) return i;
  return -1;
}

int Carrier::require_object(std::string_view name) const {
  int i = object_index(name);
  if (i < 0) throw Error("UnknownObject", "no object or element named '" + std::string(name) + "'");
  return i;
}

std::string Carrier::member_name(int o, int pos) const {
  int id = members_[o][pos];
  return flavor_ == Flavor::category ? cat_.morphisms[id].name : lat_.elements[id];
}

std::shared_ptr<const Carrier> Carrier::category(FiniteCategory cat, std::size_t max_sieves) {
  auto c = std::shared_ptr<Carrier>(new Carrier());
  c->flavor_ = Flavor::category;
  c->cat_ = std::move(cat);
  c->object_names_ = c->cat_.objects;
  const int n = c->object_count();
  c->members_.resize(n);
  c->sources_.resize(n);
  c->comp_.resize(n);
  c->below_.resize(n);
  for (int o = 0; o < n; ++o) {
    c->members_[o] = c->cat_.incoming[o];
    const int k = static_cast<int>(c->members_[o].size());
    c->sources_[o].resize(k);
    for (int p = 0; p < k; ++p) c->sources_[o][p] = c->cat_.morphisms[c->members_[o][p]].dom;
  }
  // composite positions and factorization relation
  std::vector<std::unordered_map<int, int>> pos_of(n);
  for (int o = 0; o < n; ++o)
    for (int p = 0; p < static_cast<int>(c->members_[o].size()); ++p)
      pos_of[o][c->members_[o][p]] = p;
  for (int o = 0; o < n; ++o) {
    const int k = static_cast<int>(c->members_[o].size());
    c->comp_[o].resize(k);
    c->below_[o].assign(k, Bits(k));
    for (int p = 0; p < k; ++p) {
      int h = c->members_[o][p];
      int d = c->sources_[o][p];
      const auto& dmem = c->members_[d];
      c->comp_[o][p].resize(dmem.size());
      for (size_t i = 0; i < dmem.size(); ++i)
        c->comp_[o][p][i] = pos_of[o].at(c->cat_.then(dmem[i], h));
      // everything of the form h∘g factors through h
      for (size_t i = 0; i < dmem.size(); ++i) {
        int q = c->comp_[o][p][i];
        if (q != p) c->below_[o][p].set(q);
      }
    }
  }
  c->build_universes(max_sieves);
  return c;
}

std::shared_ptr<const Carrier> Carrier::locale(FiniteLattice lat, std::size_t max_sieves) {
  auto c = std::shared_ptr<Carrier>(new Carrier());
  c->flavor_ = Flavor::locale;
  c->lat_ = std::move(lat);
  c->object_names_ = c->lat_.elements;
  const int n = c->object_count();
  c->members_.resize(n);
  c->sources_.resize(n);
  c->comp_.resize(n);
  c->below_.resize(n);
  std::vector<std::vector<int>> pos_of(n, std::vector<int>(n, -1));
  for (int o = 0; o < n; ++o) {
    for (int e = 0; e < n; ++e)
      if (c->lat_.leq[e][o]) {
        pos_of[o][e] = static_cast<int>(c->members_[o].size());
        c->members_[o].push_back(e);
      }
    c->sources_[o] = c->members_[o];
  }
  for (int o = 0; o < n; ++o) {
    const int k = static_cast<int>(c->members_[o].size());
    c->comp_[o].resize(k);
    c->below_[o].assign(k, Bits(k));
    for (int p = 0; p < k; ++p) {
      int m = c->members_[o][p];
      const auto& dmem = c->members_[m];
      c->comp_[o][p].resize(dmem.size());
      for (size_t i = 0; i < dmem.size(); ++i) {
        c->comp_[o][p][i] = pos_of[o][dmem[i]];
        if (c->comp_[o][p][i] != p) c->below_[o][p].set(c->comp_[o][p][i]);
      }
    }
  }
  c->build_universes(max_sieves);
  return c;
}

void Carrier::build_universes(std::size_t max_sieves) {
  const int n = object_count();
  universe_.resize(n);
  universe_index_.resize(n);
  pull_.resize(n);
  for (int o = 0; o < n; ++o) {
    const int k = member_count(o);
    // grow closed sets one position at a time; below_ may contain mutually
    // factoring members, so additions go class-at-a-time
    std::vector<Bits> cls(k, Bits(k));
    for (int i = 0; i < k; ++i) {
      cls[i].set(i);
      for (int j = 0; j < k; ++j)
        if (j != i && below_[o][i].test(j) && below_[o][j].test(i)) cls[i].set(j);
    }
    std::unordered_set<Bits, Bits::Hash> seen;
    std::vector<Bits> frontier{Bits(k)};
    seen.insert(frontier.front());
    std::vector<Bits> found;
    while (!frontier.empty()) {
      for (auto& s : frontier) found.push_back(s);
      if (found.size() > max_sieves)
        throw Error("BudgetExceeded", "sieve universe on '" + object_names_[o] +
                                          "' exceeds the enumeration budget");
      std::vector<Bits> next;
      for (auto& s : frontier)
        for (int i = 0; i < k; ++i) {
          if (s.test(i)) continue;
          Bits need = below_[o][i];
          // members of i's own class are added together, not required first
          Bits t = s | cls[i];
          bool ok = true;
          for (int j = 0; j < k && ok; ++j)
            if (need.test(j) && !cls[i].test(j) && !s.test(j)) ok = false;
          if (!ok) continue;
          if (seen.insert(t).second) next.push_back(t);
        }
      frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(),
              [](const Bits& a, const Bits& b) { return a.canonical_less(b); });
    universe_[o] = std::move(found);
    for (int i = 0; i < universe_size(o); ++i) universe_index_[o][universe_[o][i]] = i;
    pull_[o].assign(k, {});
  }
}

int Carrier::index_of(int o, const Bits& b) const {
  auto it = universe_index_[o].find(b);
  return it == universe_index_[o].end() ? -1 : it->second;
}

int Carrier::intersect(int o, int i, int j) const {
  return universe_index_[o].at(universe_[o][i] & universe_[o][j]);
}

int Carrier::unite(int o, int i, int j) const {
  return universe_index_[o].at(universe_[o][i] | universe_[o][j]);
}

std::vector<int> Carrier::supersets_of(int o, int idx) const {
  std::vector<int> out;
  const Bits& b = universe_[o][idx];
  for (int i = 0; i < universe_size(o); ++i)
    if (b.subset_of(universe_[o][i])) out.push_back(i);
  return out;
}

int Carrier::pullback(int o, int pos, int idx) const {
  auto& memo = pull_[o][pos];
  if (memo.empty()) memo.assign(universe_size(o), -1);
  if (memo[idx] >= 0) return memo[idx];
  int d = sources_[o][pos];
  Bits r(member_count(d));
  const Bits& s = universe_[o][idx];
  for (int i = 0; i < member_count(d); ++i)
    if (s.test(comp_[o][pos][i])) r.set(i);
  int ridx = universe_index_[d].at(r);
  memo[idx] = ridx;
  return ridx;
}

int Carrier::sieve_join(int o, int idx) const {
  const FiniteLattice& L = lat();
  int v = L.bottom;
  const Bits& s = universe_[o][idx];
  for (int i = 0; i < member_count(o); ++i)
    if (s.test(i)) v = L.join[v][members_[o][i]];
  return v;
}

Sieve Carrier::sieve_value(int o, int idx) const {
  Sieve s{o, {}};
  const Bits& b = universe_[o][idx];
  for (int i = 0; i < member_count(o); ++i)
    if (b.test(i)) s.members.push_back(members_[o][i]);
  std::sort(s.members.begin(), s.members.end());
  return s;
}

std::vector<std::string> Carrier::sieve_names_of(int o, int idx) const {
  Sieve s = sieve_value(o, idx);
  std::vector<std::string> out;
  out.reserve(s.members.size());
  for (int id : s.members)
    out.push_back(flavor_ == Flavor::category ? cat_.morphisms[id].name : lat_.elements[id]);
  return out;
}

std::string Carrier::sieve_label(int o, int idx) const {
  auto names = sieve_names_of(o, idx);
  std::string s = "[";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) s += ' ';
    s += names[i];
  }
  return s + "]";
}

int Carrier::sieve_index_of_names(int o, const std::vector<std::string>& members) const {
  Bits b(member_count(o));
  for (auto& name : members) {
    int pos = -1;
    for (int p = 0; p < member_count(o); ++p)
      if (member_name(o, p) == name) {
        pos = p;
        break;
      }
    if (pos < 0)
      throw Error("ValidationError",
                  "'" + name + "' is not an arrow into '" + object_names_[o] + "'",
                  Witness{"codomain", {object_names_[o]}, {}, {name}, ""});
    b.set(pos);
  }
  int idx = index_of(o, b);
  if (idx < 0) {
    // locate a missing precomposite for the witness
    for (int p = 0; p < member_count(o); ++p) {
      if (!b.test(p)) continue;
      int d = sources_[o][p];
      for (int i = 0; i < member_count(d); ++i)
        if (!b.test(comp_[o][p][i]))
          throw Error("ValidationError", "member set is not closed under precomposition",
                      Witness{"closure",
                              {object_names_[o]},
                              {members},
                              {member_name(o, p), member_name(o, comp_[o][p][i])},
                              member_name(o, comp_[o][p][i]) + " is missing"});
    }
    throw Error("ValidationError", "member set is not a sieve");
  }
  return idx;
}

bool Carrier::same_carrier(const Carrier& other) const {
  if (this == &other) return true;
  if (flavor_ != other.flavor_) return false;
  return flavor_ == Flavor::category ? cat_ == other.cat_ : lat_ == other.lat_;
}

bool CoverAssignment::contains(int obj, int idx) const {
  const auto& row = table[obj];
  return std::binary_search(row.begin(), row.end(), idx);
}

void CoverAssignment::insert(int obj, int idx) {
  auto& row = table[obj];
  auto it = std::lower_bound(row.begin(), row.end(), idx);
  if (it == row.end() || *it != idx) row.insert(it, idx);
}

std::vector<Sieve> CoverAssignment::sieves_at(int obj) const {
  std::vector<Sieve> out;
  out.reserve(table[obj].size());
  for (int idx : table[obj]) out.push_back(carrier->sieve_value(obj, idx));
  return out;
}

CoverAssignment empty_assignment(CarrierPtr carrier) {
  CoverAssignment a;
  a.table.assign(carrier->object_count(), {});
  a.carrier = std::move(carrier);
  return a;
}

void add_sieve(CoverAssignment& a, std::string_view obj, const std::vector<std::string>& members) {
  int o = a.carrier->require_object(obj);
  a.insert(o, a.carrier->sieve_index_of_names(o, members));
}

void require_same_site(const CoverAssignment& a, const CoverAssignment& b) {
  if (!a.same_site(b)) throw Error("CarrierMismatch", "assignments live on different carriers");
}

std::vector<Sieve> sieves_on(const CarrierPtr& carrier, std::string_view obj) {
  int o = carrier->require_object(obj);
  std::vector<Sieve> out;
  out.reserve(carrier->universe_size(o));
  for (int i = 0; i < carrier->universe_size(o); ++i) out.push_back(carrier->sieve_value(o, i));
  return out;
}

}  // namespace sieveforge
