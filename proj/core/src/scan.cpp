#include "ceresa/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "ceresa/errors.hpp"
#include "ceresa/picard.hpp"

namespace ceresa {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Grids this large are almost certainly a typo in the step.
constexpr std::size_t kMaxAxisLength = 1'000'000;

}  // namespace

std::vector<Rat> parse_axis(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw DomainError("bad range '" + std::string(text) + "'");
    const Rat lo = Rat::parse(parts[0]);
    const Rat hi = Rat::parse(parts[1]);
    const Rat step = parts.size() == 3 ? Rat::parse(parts[2]) : Rat(1);
    if (step.sign() <= 0) throw DomainError("range step must be positive");
    if (hi < lo) throw DomainError("empty range '" + std::string(text) + "'");
    std::vector<Rat> out;
    for (Rat v = lo; v <= hi; v += step) {
      if (out.size() >= kMaxAxisLength) throw DomainError("range too long");
      out.push_back(v);
    }
    return out;
  }
  std::vector<Rat> out;
  for (auto part : split(text, ',')) out.push_back(Rat::parse(part));
  return out;
}

std::vector<ScanRecord> scan(const ScanGrid& grid, const ScanOptions& options) {
  const std::size_t total = grid.size();
  if (total == 0) throw DomainError("empty scan grid");

  std::vector<ScanRecord> records(total);
  const std::size_t nb = grid.b.size();
  const std::size_t nc = grid.c.size();

  auto evaluate = [&](std::size_t idx) {
    ScanRecord& rec = records[idx];
    rec.quartic = {grid.a[idx / (nb * nc)], grid.b[(idx / nc) % nb], grid.c[idx % nc]};
    rec.invariants = invariants(rec.quartic);
    if (rec.invariants.disc.is_zero()) {
      rec.status = ScanStatus::Skipped;
      return;
    }
    const CeresaVerdict v = decide(PicardCurve(rec.quartic));
    rec.point_order = v.point_order;
    rec.status = v.chow_torsion() ? ScanStatus::Torsion : ScanStatus::NonTorsion;
  };

  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) evaluate(i);
    return records;
  }

  // Each worker writes only to the slots it claims, so the merge is the
  // vector itself and the order is fixed by the index.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::string_view to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Torsion:
      return "torsion";
    case ScanStatus::NonTorsion:
      return "non-torsion";
    case ScanStatus::Skipped:
      return "skipped";
  }
  return "?";
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
  std::ostringstream os;
  os << "a,b,c,I,J,disc,verdict,point_order\n";
  for (const auto& r : records) {
    os << r.quartic.a << ',' << r.quartic.b << ',' << r.quartic.c << ',' << r.invariants.I << ','
       << r.invariants.J << ',' << r.invariants.disc << ',' << to_string(r.status) << ',';
    if (r.point_order) os << *r.point_order;
    os << '\n';
  }
  return os.str();
}

}  // namespace ceresa
