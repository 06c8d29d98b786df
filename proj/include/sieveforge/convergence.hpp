#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sieveforge/filters.hpp"

namespace sieveforge {

/// Frame homomorphism to 2, stored as its dual kernel (a prime filter of the
/// carrier lattice); the kernel is the complementary prime ideal.
struct LocalePoint {
  std::vector<int> dual_kernel;
  std::vector<int> kernel;
  bool operator==(const LocalePoint&) const = default;
};

/// Exhaustive up-set scan for prime filters; canonical (size, lex) order.
std::vector<LocalePoint> locale_points(const FiniteLattice& L);

/// A point of either flavor. Category: a morphism from the designated
/// terminal object. Locale: a frame homomorphism via its dual kernel.
struct Point {
  Flavor flavor = Flavor::locale;
  int morphism = -1;
  std::vector<int> dual_kernel;
  std::vector<int> kernel;
  bool operator==(const Point&) const = default;
};

std::string point_label(const Carrier& c, const Point& p);

/// Points relevant at an object: category points into it, or locale points
/// whose kernel contains the element.
std::vector<Point> points_at(const CarrierPtr& carrier, int obj);
std::vector<Point> points_at(const CarrierPtr& carrier, std::string_view obj);

/// Covering sieves witnessing the point: factorization through a member
/// (category) or containment in the kernel (locale). Universe indices.
std::vector<int> g_neighborhoods(const CoverAssignment& topology, int obj, const Point& p);

struct NeighborhoodSystem {
  int obj = -1;
  Point point;
  std::vector<int> g_nbhds;
  std::vector<int> cover_nbhds;
  /// Upward closure, binary intersections, no empty sieve; only meaningful
  /// when g_nbhds is nonempty.
  Verdict filtered_object;
  bool blind = false;  // no covering sieve witnesses the point
};

NeighborhoodSystem neighborhood_system(const CoverAssignment& topology, int obj, const Point& p);

/// cover_nbhds(p) ⊆ filter table at obj.
bool converges(const CoverAssignment& filter, const CoverAssignment& topology, int obj,
               const Point& p);

/// Join criterion: every assigned sieve at c joins to c.
bool sup_converges(const FiniteLattice& L, const CoverAssignment& filter, std::string_view c);

/// Points whose every cover-neighborhood meets the sieve.
std::vector<Point> closure(const CoverAssignment& topology, int obj, int sieve_idx);
std::vector<Point> closure(const CoverAssignment& topology, std::string_view obj,
                           const std::vector<std::string>& sieve_members);

std::vector<Point> cluster_points(const CoverAssignment& filter, const CoverAssignment& topology,
                                  int obj);
std::vector<Point> limit_points(const CoverAssignment& filter, const CoverAssignment& topology,
                                int obj);

enum class CompactnessMethod { ultrafilter, exhaustive };

struct CompactnessReport {
  std::string object;
  bool quasi_compact = false;
  bool hausdorff = false;
  bool compact = false;
  CompactnessMethod method = CompactnessMethod::ultrafilter;
  std::vector<Point> blind_points;
  /// Failing data, replayable: a filter with no cluster point, or a point
  /// pair plus the filter converging to both.
  std::optional<CoverAssignment> clusterless_filter;
  std::optional<std::pair<Point, Point>> limit_pair;
  std::optional<CoverAssignment> doubly_converging_filter;
};

CompactnessReport compactness_report(const CoverAssignment& topology, std::string_view obj,
                                     CompactnessMethod method,
                                     std::size_t budget = kDefaultBudget);

/// Locale flavor: all targets must be compact; passes when their meet is.
Verdict tychonoff_check(const CoverAssignment& topology, const std::vector<std::string>& targets,
                        CompactnessMethod method = CompactnessMethod::ultrafilter,
                        std::size_t budget = kDefaultBudget);

}  // namespace sieveforge
