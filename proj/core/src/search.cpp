#include "frz/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <utility>

#include "frz/compress.hpp"
#include "frz/error.hpp"
#include "frz/mask_space.hpp"
#include "frz/setops.hpp"

namespace frz {

namespace {

// Runs fn(chunk) for chunk in [0, chunks) on up to `threads` workers.
template <class F>
void parallel_chunks(std::size_t chunks, unsigned threads, F&& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) fn(c);
    });
  }
}

// floor(total * k / count) without overflow.
std::uint64_t shard_point(std::uint64_t total, std::uint64_t k, std::uint64_t count) {
  return total / count * k + total % count * k / count;
}

std::pair<std::uint64_t, std::uint64_t> shard_range(std::uint64_t total, const Shard& s) {
  return {shard_point(total, s.index, s.count), shard_point(total, s.index + 1, s.count)};
}

// Best (largest span, then least witness) per (|A+A|, |A|) pair.
struct Candidate {
  std::uint64_t span = 0;
  std::uint64_t mask = 0;
};

struct CandidateSet {
  std::uint64_t span = 0;
  DenseSet witness;
};

std::vector<FrontierRecord> pareto(std::vector<FrontierRecord> all) {
  std::sort(all.begin(), all.end(), [](const FrontierRecord& a, const FrontierRecord& b) {
    if (a.doubling != b.doubling) return a.doubling < b.doubling;
    if (a.spanning != b.spanning) return a.spanning > b.spanning;
    return witness_less(a.witness, b.witness);
  });
  std::vector<FrontierRecord> out;
  for (auto& r : all) {
    if (out.empty() || r.spanning > out.back().spanning) out.push_back(std::move(r));
  }
  return out;
}

bool class_accepts(const MaskSpace& ms, SetClass c, std::uint64_t a) {
  switch (c) {
    case SetClass::kArbitrary:
      return true;
    case SetClass::kContainsE:
      return ms.contains_E(a);
    case SetClass::kDownSet:
      return ms.is_down_set(a);
    case SetClass::kECompressed:
      return ms.contains_E(a) && ms.is_down_set(a) && ms.is_E_compressed(a);
  }
  return false;
}

DenseSet down_closure(const DenseSet& a) {
  const GroupParams& g = a.group();
  DenseSet out = a;
  for (std::uint64_t x = g.size(); x-- > 0;) {
    const Point u{static_cast<Index>(x)};
    if (!out.contains(u)) continue;
    for (std::uint32_t i = 0; i < g.n(); ++i) {
      if (g.coord(u, i) > 0) out.insert(Point{static_cast<Index>(x - g.stride(i))});
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(SetClass c) {
  switch (c) {
    case SetClass::kArbitrary:
      return "arbitrary";
    case SetClass::kContainsE:
      return "contains-E";
    case SetClass::kDownSet:
      return "down-set";
    case SetClass::kECompressed:
      return "E-compressed";
  }
  return "?";
}

SetClass parse_set_class(std::string_view text) {
  for (SetClass c : {SetClass::kArbitrary, SetClass::kContainsE, SetClass::kDownSet, SetClass::kECompressed}) {
    if (text == to_string(c)) return c;
  }
  throw ValidationError("unknown set class '" + std::string(text) +
                        "' (expected arbitrary, contains-E, down-set or E-compressed)");
}

std::string_view to_string(SearchMode m) { return m == SearchMode::kExhaustive ? "exhaustive" : "random"; }

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::kExhaustive;
  if (text == "random") return SearchMode::kRandom;
  throw ValidationError("unknown search mode '" + std::string(text) + "' (expected exhaustive or random)");
}

Shard parse_shard(std::string_view text) {
  const auto slash = text.find('/');
  Shard s;
  auto parse = [&](std::string_view part, std::uint32_t& out) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw ValidationError("malformed shard '" + std::string(text) + "' (expected i/k)");
    }
  };
  if (slash == std::string_view::npos) throw ValidationError("malformed shard '" + std::string(text) + "' (expected i/k)");
  parse(text.substr(0, slash), s.index);
  parse(text.substr(slash + 1), s.count);
  if (s.count == 0 || s.index >= s.count) throw ValidationError("shard index must be below the shard count");
  return s;
}

void SearchConfig::validate() const {
  GroupParams g(p, n);
  if (mode == SearchMode::kRandom && trials < 1) throw ValidationError("random search needs at least one trial");
  if (shard.count == 0 || shard.index >= shard.count) throw ValidationError("shard index must be below the shard count");
  if (threads < 1) throw ValidationError("thread count must be positive");
}

bool dominates(const FrontierRecord& a, const FrontierRecord& b) {
  return a.doubling <= b.doubling && a.spanning >= b.spanning &&
         (a.doubling < b.doubling || a.spanning > b.spanning);
}

bool witness_less(const DenseSet& a, const DenseSet& b) {
  const auto wa = a.words();
  const auto wb = b.words();
  if (wa.size() != wb.size()) return wa.size() < wb.size();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

std::vector<FrontierRecord> merge_frontiers(std::span<const std::vector<FrontierRecord>> parts) {
  std::vector<FrontierRecord> all;
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  return pareto(std::move(all));
}

std::vector<FrontierRecord> frontier_exhaustive(const SearchConfig& cfg) {
  cfg.validate();
  const GroupParams g(cfg.p, cfg.n);
  const std::uint64_t universe = g.size();
  const bool filtered = cfg.set_class == SetClass::kDownSet || cfg.set_class == SetClass::kECompressed;
  if (universe > kMaxScanUniverse) {
    throw CapacityError("exhaustive scan of all 2^" + std::to_string(universe) +
                        " subsets is beyond the supported universe of " + std::to_string(kMaxScanUniverse) +
                        " points; use --mode random");
  }
  if (!filtered && universe > cfg.exhaustive_cap && !cfg.force) {
    throw CapacityError("exhaustive scan of 2^" + std::to_string(universe) + " subsets exceeds the cap of 2^" +
                        std::to_string(cfg.exhaustive_cap) +
                        "; restrict with --class down-set or --class E-compressed, or pass --force");
  }

  const MaskSpace ms(g);
  const auto [lo, hi] = shard_range(std::uint64_t{1} << universe, cfg.shard);
  const std::size_t width = universe + 1;
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
  const std::size_t chunks = static_cast<std::size_t>((hi - lo + kChunk - 1) / kChunk);
  std::vector<std::vector<Candidate>> tables(chunks);

  parallel_chunks(chunks, cfg.threads, [&](std::size_t c) {
    std::vector<Candidate> best(width * width);
    const std::uint64_t begin = lo + c * kChunk;
    const std::uint64_t end = std::min(hi, begin + kChunk);
    for (std::uint64_t a = std::max<std::uint64_t>(begin, 1); a < end; ++a) {
      if (!class_accepts(ms, cfg.set_class, a)) continue;
      const auto size = static_cast<std::size_t>(std::popcount(a));
      const auto sum = static_cast<std::size_t>(std::popcount(ms.sumset(a, a)));
      Candidate& slot = best[sum * width + size];
      if (slot.span != 0 && slot.span >= universe) continue;  // cannot improve
      const std::uint64_t span = ms.span_size(a);
      if (span > slot.span) slot = {span, a};
    }
    tables[c] = std::move(best);
  });

  std::vector<Candidate> best(width * width);
  for (const auto& t : tables) {
    if (t.empty()) continue;
    for (std::size_t k = 0; k < best.size(); ++k) {
      // Chunks are visited in ascending order, so the first strict improvement keeps the least mask.
      if (t[k].span > best[k].span) best[k] = t[k];
    }
  }

  std::vector<FrontierRecord> records;
  for (std::size_t sum = 1; sum < width; ++sum) {
    for (std::size_t size = 1; size < width; ++size) {
      const Candidate& c = best[sum * width + size];
      if (c.span == 0) continue;
      records.push_back({ratio(sum, size), ratio(c.span, size), ms.to_set(c.mask), cfg.set_class});
    }
  }
  return pareto(std::move(records));
}

std::vector<FrontierRecord> frontier_random(const SearchConfig& cfg) {
  cfg.validate();
  const GroupParams g(cfg.p, cfg.n);
  const auto [lo, hi] = shard_range(cfg.trials, cfg.shard);
  const bool small = g.size() <= MaskSpace::kMaxPoints;
  std::unique_ptr<MaskSpace> ms = small ? std::make_unique<MaskSpace>(g) : nullptr;
  const LineTableCache cache(g);
  const DenseSet e = basis_set(g);

  constexpr std::uint64_t kChunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((hi - lo + kChunk - 1) / kChunk);
  using Table = std::map<std::pair<std::uint64_t, std::uint64_t>, CandidateSet>;
  std::vector<Table> tables(chunks);

  parallel_chunks(chunks, cfg.threads, [&](std::size_t c) {
    Table& best = tables[c];
    const std::uint64_t begin = lo + c * kChunk;
    const std::uint64_t end = std::min(hi, begin + kChunk);
    for (std::uint64_t t = begin; t < end; ++t) {
      const CounterRng rng(cfg.seed, t);
      DenseSet s = sample_set(g, rng, rng.uniform(0), 1);
      switch (cfg.set_class) {
        case SetClass::kArbitrary:
          break;
        case SetClass::kContainsE:
          s |= e;
          break;
        case SetClass::kDownSet:
          s = down_closure(s);
          break;
        case SetClass::kECompressed:
          s |= e;
          s = reduce(s, cache).set;
          break;
      }
      if (s.empty()) continue;
      std::uint64_t sum, span;
      if (small) {
        const std::uint64_t w = s.word();
        sum = static_cast<std::uint64_t>(std::popcount(ms->sumset(w, w)));
        span = ms->span_size(w);
      } else {
        sum = sumset(s, s).size();
        span = affine_span(s).size;
      }
      auto [it, inserted] = best.try_emplace({sum, s.size()}, CandidateSet{span, s});
      if (!inserted && (span > it->second.span || (span == it->second.span && witness_less(s, it->second.witness)))) {
        it->second = CandidateSet{span, std::move(s)};
      }
    }
  });

  std::vector<FrontierRecord> records;
  for (const auto& t : tables) {
    for (const auto& [key, cand] : t) {
      records.push_back({ratio(key.first, key.second), ratio(cand.span, key.second), cand.witness, cfg.set_class});
    }
  }
  return pareto(std::move(records));
}

std::vector<FrontierRecord> run_search(const SearchConfig& cfg) {
  return cfg.mode == SearchMode::kExhaustive ? frontier_exhaustive(cfg) : frontier_random(cfg);
}

std::vector<DenseSet> enumerate_E_compressed(std::uint32_t p, std::uint32_t n, unsigned threads) {
  const GroupParams g(p, n);
  if (n == 0) throw DomainError("E-compressed enumeration needs n >= 1");
  if (g.size() > kMaxScanUniverse) {
    throw CapacityError("E-compressed enumeration scans 2^(p^n) words; p^n = " + std::to_string(g.size()) +
                        " exceeds " + std::to_string(kMaxScanUniverse));
  }
  const MaskSpace ms(g);
  const std::uint64_t total = std::uint64_t{1} << g.size();
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 18;
  const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  std::vector<std::vector<std::uint64_t>> found(chunks);

  parallel_chunks(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min(total, begin + kChunk);
    auto& out = found[c];
    // Every candidate contains 0, so only odd words are visited.
    for (std::uint64_t a = begin | 1; a < end; a += 2) {
      if (ms.is_down_set(a) && ms.contains_E(a) && ms.is_E_compressed(a)) out.push_back(a);
    }
  });

  std::vector<DenseSet> out;
  for (const auto& chunk : found) {
    for (std::uint64_t a : chunk) out.push_back(ms.to_set(a));
  }
  return out;
}

std::string_view to_string(CurveStatus s) {
  switch (s) {
    case CurveStatus::kBelow:
      return "below";
    case CurveStatus::kEqual:
      return "equal";
    case CurveStatus::kNearTie:
      return "near-tie";
    case CurveStatus::kExceeds:
      return "exceeds";
  }
  return "?";
}

FrontierReport compare_frontier(std::span<const FrontierRecord> records, std::uint32_t p, double tolerance) {
  FrontierReport report;
  for (const FrontierRecord& r : records) {
    CurveComparison c{r.doubling, r.spanning, 0, 0, CurveStatus::kBelow, false};
    const double k = to_double(r.doubling);
    c.log_spanning = std::log(numerator_of(r.spanning).convert_to<double>()) -
                     std::log(denominator_of(r.spanning).convert_to<double>());
    c.log_curve = log_main_theorem_curve(p, k);
    c.below_threshold = k < kThresholdDoubling;
    const Rational twice = 2 * r.doubling;
    if (denominator_of(twice) == 1) {
      const Rational curve = main_theorem_curve_exact(p, r.doubling);
      c.status = r.spanning < curve ? CurveStatus::kBelow
                 : r.spanning == curve ? CurveStatus::kEqual
                                       : CurveStatus::kExceeds;
    } else {
      const double diff = c.log_spanning - c.log_curve;
      c.status = std::abs(diff) <= tolerance ? CurveStatus::kNearTie
                 : diff > 0                  ? CurveStatus::kExceeds
                                             : CurveStatus::kBelow;
    }
    if (c.status == CurveStatus::kExceeds) {
      ++report.exceedances;
      if (!c.below_threshold) ++report.exceedances_at_threshold;
    }
    if (!c.below_threshold) report.threshold_vacuous = false;
    report.entries.push_back(std::move(c));
  }
  return report;
}

}  // namespace frz
