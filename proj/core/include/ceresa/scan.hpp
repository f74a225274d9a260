#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ceresa/quartic.hpp"
#include "ceresa/rat.hpp"

namespace ceresa {

struct ScanGrid {
  std::vector<Rat> a;
  std::vector<Rat> b;
  std::vector<Rat> c;

  std::size_t size() const { return a.size() * b.size() * c.size(); }
};

/// Parses a grid axis: "lo:hi" or "lo:hi:step" (inclusive, rational
/// endpoints, step defaults to 1) or a comma list "r1,r2,...".
std::vector<Rat> parse_axis(std::string_view text);

enum class ScanStatus { Torsion, NonTorsion, Skipped };

struct ScanRecord {
  DepressedQuartic quartic;
  QuarticInvariants invariants;
  ScanStatus status = ScanStatus::Skipped;
  std::optional<int> point_order;
};

struct ScanOptions {
  /// Worker count; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Decides every grid point. Records come back in lexicographic (a, b, c)
/// order whatever the thread count; points with disc = 0 are Skipped.
std::vector<ScanRecord> scan(const ScanGrid& grid, const ScanOptions& options = {});

std::string_view to_string(ScanStatus s);

/// CSV with header a,b,c,I,J,disc,verdict,point_order.
std::string scan_to_csv(const std::vector<ScanRecord>& records);

}  // namespace ceresa
