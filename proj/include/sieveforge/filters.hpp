#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sieveforge/carrier.hpp"

namespace sieveforge {

enum class CertKind { filter, basis, subbase, ultrafilter };

struct FilterCertificate {
  CoverAssignment assignment;
  CertKind certified_as = CertKind::filter;
};

enum class BasisMode { relaxed, strict };

/// F1 upward closure, F2 binary intersections (every table nonempty), F3
/// pullback stability along every arrow, F4 empty sieve absent.
Verdict check_filter(const CoverAssignment& a);

/// Per object, the total intersection of the assigned sieves is nonempty.
Verdict check_subbase(const CoverAssignment& a);

/// B1 intersections contain a member, B2 pullbacks contain a member
/// (relaxed) or are members (strict), B3 nonempty tables without the empty
/// sieve.
Verdict check_basis(const CoverAssignment& a, BasisMode mode = BasisMode::relaxed);

/// All sieves containing some basis member; certified as a filter.
FilterCertificate filter_from_basis(const CoverAssignment& basis,
                                    BasisMode mode = BasisMode::relaxed);

/// One closure step record; a derivation trace explains an improper result.
struct Saturation {
  bool proper = false;
  CoverAssignment filter;           // meaningful when proper
  std::vector<std::string> trace;   // derivation of the empty sieve when improper
};

/// Memo for repeated saturations keyed by the input table.
using SaturationCache = std::map<std::vector<std::vector<int>>, Saturation>;

/// Least filter containing the assignment: close under supersets, binary
/// intersections and pullbacks with maximal sieves seeded everywhere;
/// improper exactly when the closure manufactures the empty sieve.
Saturation saturate_subbase(const CoverAssignment& a, SaturationCache* cache = nullptr,
                            std::size_t budget = kDefaultBudget);

FilterCertificate meet_filters(std::span<const FilterCertificate> family);

/// True when f1's tables are pointwise contained in f2's (f2 refines f1).
bool is_finer(const CoverAssignment& f1, const CoverAssignment& f2);

/// No strictly finer filter exists: every absent sieve saturates improperly.
Verdict is_ultrafilter(const FilterCertificate& f, SaturationCache* cache = nullptr);

/// Deterministic greedy extension in canonical candidate order.
FilterCertificate extend_to_ultrafilter(const FilterCertificate& f,
                                        SaturationCache* cache = nullptr);

/// Complete ultrafilter list by branching extension with memoized
/// saturation; canonical output order.
std::vector<FilterCertificate> enumerate_ultrafilters(const CarrierPtr& carrier,
                                                      std::size_t budget = kDefaultBudget);

/// Exhaustive subset-family scan; tiny carriers only (guarded).
std::vector<FilterCertificate> enumerate_filters(const CarrierPtr& carrier,
                                                 std::size_t budget = kDefaultBudget);

/// Locale flavor: basis at the meet of the targets made of all intersections
/// of restricted member sieves; other elements carry restrictions of those
/// (below the meet) or the maximal sieve.
FilterCertificate product_filter_basis(const CarrierPtr& locale_carrier,
                                       const std::vector<std::string>& targets,
                                       std::span<const FilterCertificate> filters);

}  // namespace sieveforge
