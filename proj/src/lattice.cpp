#include "sieveforge/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "sieveforge/bits.hpp"

namespace sieveforge {

int FiniteLattice::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

int FiniteLattice::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw Error("UnknownElement", "no element named '" + std::string(name) + "'");
  return i;
}

std::vector<std::string> ElementSet::names() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (int m : members) out.push_back(carrier->elements[m]);
  return out;
}

FiniteLattice build_lattice(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& order_pairs) {
  if (elements.empty()) throw Error("InvalidArgument", "lattice needs at least one element");
  FiniteLattice L;
  L.elements = elements;
  const int n = L.size();
  {
    std::unordered_set<std::string> seen;
    for (auto& e : elements)
      if (!seen.insert(e).second)
        throw Error("InvalidArgument", "duplicate element '" + e + "'");
  }

  L.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) L.leq[i][i] = true;
  for (auto& [a, b] : order_pairs) L.leq[L.require(a)][L.require(b)] = true;

  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (L.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (L.leq[k][j]) L.leq[i][j] = true;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (L.leq[i][j] && L.leq[j][i])
        throw Error("NotAPartialOrder", "antisymmetry fails",
                    Witness{"antisymmetry", {L.elements[i], L.elements[j]}, {}, {}, ""});

  auto bound = [&](int x, int y, bool lower) -> int {
    std::vector<int> cand;
    for (int z = 0; z < n; ++z) {
      bool ok = lower ? (L.leq[z][x] && L.leq[z][y]) : (L.leq[x][z] && L.leq[y][z]);
      if (ok) cand.push_back(z);
    }
    for (int z : cand) {
      bool extreme = true;
      for (int w : cand)
        if (lower ? !L.leq[w][z] : !L.leq[z][w]) {
          extreme = false;
          break;
        }
      if (extreme) return z;
    }
    return -1;
  };

  L.meet.assign(n, std::vector<int>(n, -1));
  L.join.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      L.meet[i][j] = bound(i, j, true);
      L.join[i][j] = bound(i, j, false);
      if (L.meet[i][j] < 0 || L.join[i][j] < 0)
        throw Error("NotALattice",
                    "pair has no " + std::string(L.meet[i][j] < 0 ? "meet" : "join"),
                    Witness{L.meet[i][j] < 0 ? "meet" : "join",
                            {L.elements[i], L.elements[j]},
                            {},
                            {},
                            ""});
    }

  int b = 0, t = 0;
  for (int i = 1; i < n; ++i) {
    b = L.meet[b][i];
    t = L.join[t][i];
  }
  L.bottom = b;
  L.top = t;
  return L;
}

FiniteLattice divisor_lattice(long long n) {
  if (n < 1) throw Error("InvalidArgument", "divisor lattice needs n >= 1");
  std::vector<long long> divs;
  for (long long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());

  FiniteLattice L;
  for (auto d : divs) L.elements.push_back(std::to_string(d));
  const int m = L.size();
  std::unordered_map<long long, int> idx;
  for (int i = 0; i < m; ++i) idx[divs[i]] = i;

  L.leq.assign(m, std::vector<bool>(m, false));
  L.meet.assign(m, std::vector<int>(m, -1));
  L.join.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      L.leq[i][j] = divs[j] % divs[i] == 0;
      long long g = std::gcd(divs[i], divs[j]);
      L.meet[i][j] = idx.at(g);
      L.join[i][j] = idx.at(divs[i] / g * divs[j]);
    }
  L.bottom = 0;
  L.top = m - 1;
  return L;
}

ElementSet principal_down(const FiniteLattice& L, std::string_view x) {
  int xi = L.require(x);
  ElementSet s{&L, {}};
  for (int y = 0; y < L.size(); ++y)
    if (L.leq[y][xi]) s.members.push_back(y);
  return s;
}

ElementSet principal_up(const FiniteLattice& L, std::string_view x) {
  int xi = L.require(x);
  ElementSet s{&L, {}};
  for (int y = 0; y < L.size(); ++y)
    if (L.leq[xi][y]) s.members.push_back(y);
  return s;
}

namespace {
ElementSet closure(const FiniteLattice& L, const std::vector<std::string>& members, bool down) {
  std::vector<bool> in(L.size(), false);
  for (auto& m : members) {
    int mi = L.require(m);
    for (int y = 0; y < L.size(); ++y)
      if (down ? L.leq[y][mi] : L.leq[mi][y]) in[y] = true;
  }
  ElementSet s{&L, {}};
  for (int y = 0; y < L.size(); ++y)
    if (in[y]) s.members.push_back(y);
  return s;
}
}  // namespace

ElementSet closure_down(const FiniteLattice& L, const std::vector<std::string>& members) {
  return closure(L, members, true);
}

ElementSet closure_up(const FiniteLattice& L, const std::vector<std::string>& members) {
  return closure(L, members, false);
}

Verdict is_frame(const FiniteLattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = L.meet[x][L.join[y][z]];
        int rhs = L.join[L.meet[x][y]][L.meet[x][z]];
        if (lhs != rhs)
          return Verdict::fail(Witness{
              "distributivity",
              {L.elements[x], L.elements[y], L.elements[z]},
              {},
              {},
              L.elements[x] + " /\\ (" + L.elements[y] + " \\/ " + L.elements[z] + ") = " +
                  L.elements[lhs] + " but joins of meets give " + L.elements[rhs]});
      }
  return Verdict::ok();
}

bool is_boolean(const FiniteLattice& L) {
  if (!is_frame(L)) return false;
  for (int x = 0; x < L.size(); ++x) {
    bool has = false;
    for (int y = 0; y < L.size() && !has; ++y)
      has = L.meet[x][y] == L.bottom && L.join[x][y] == L.top;
    if (!has) return false;
  }
  return true;
}

bool is_down_set(const FiniteLattice& L, std::span<const int> members) {
  std::vector<bool> in(L.size(), false);
  for (int m : members) in[m] = true;
  for (int m : members)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq[y][m] && !in[y]) return false;
  return true;
}

bool is_up_set(const FiniteLattice& L, std::span<const int> members) {
  std::vector<bool> in(L.size(), false);
  for (int m : members) in[m] = true;
  for (int m : members)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq[m][y] && !in[y]) return false;
  return true;
}

int join_of(const FiniteLattice& L, std::span<const int> members) {
  int v = L.bottom;
  for (int m : members) v = L.join[v][m];
  return v;
}

int meet_of(const FiniteLattice& L, std::span<const int> members) {
  int v = L.top;
  for (int m : members) v = L.meet[v][m];
  return v;
}

namespace {

// Down-sets of a finite preorder given as "below[i] = strictly smaller
// positions of i"; grows sets one addable position at a time, which reaches
// every down-set exactly once through the dedup set.
std::vector<Bits> down_sets_of(const std::vector<Bits>& below, int n, std::size_t budget,
                               const char* what) {
  std::vector<Bits> out;
  std::unordered_set<Bits, Bits::Hash> seen;
  std::vector<Bits> frontier{Bits(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    for (auto& s : frontier) out.push_back(s);
    if (out.size() > budget)
      throw Error("BudgetExceeded", std::string(what) + " enumeration exceeds budget");
    std::vector<Bits> next;
    for (auto& s : frontier)
      for (int i = 0; i < n; ++i) {
        if (s.test(i) || !below[i].subset_of(s)) continue;
        Bits t = s;
        t.set(i);
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) { return a.canonical_less(b); });
  return out;
}

}  // namespace

std::vector<std::vector<int>> all_down_sets(const FiniteLattice& L, std::span<const int> universe,
                                            std::size_t budget) {
  const int n = static_cast<int>(universe.size());
  std::vector<Bits> below(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && L.leq[universe[j]][universe[i]]) below[i].set(j);
  auto sets = down_sets_of(below, n, budget, "down-set");
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (auto& s : sets) {
    std::vector<int> mem;
    for (int i = 0; i < n; ++i)
      if (s.test(i)) mem.push_back(universe[i]);
    out.push_back(std::move(mem));
  }
  return out;
}

std::vector<std::vector<int>> all_up_sets(const FiniteLattice& L, std::size_t budget) {
  const int n = L.size();
  std::vector<Bits> below(n, Bits(n));  // reversed order: up-sets are down-sets of the dual
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && L.leq[i][j]) below[i].set(j);
  auto sets = down_sets_of(below, n, budget, "up-set");
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(s.members());
  return out;
}

}  // namespace sieveforge
