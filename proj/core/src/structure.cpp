#include "frz/structure.hpp"

#include <algorithm>

#include "frz/error.hpp"
#include "frz/setops.hpp"

namespace frz {

namespace {

// A ∩ [start, start + len): a coset of H = span{e_1..e_h} whose
// representative has zero low coordinates is a contiguous index range.
DenseSet coset_part(const DenseSet& a, std::uint64_t start, std::uint64_t len) {
  DenseSet out(a.group());
  for (std::uint64_t x = start; x < start + len; ++x) {
    if (a.contains(Point{static_cast<Index>(x)})) out.insert(Point{static_cast<Index>(x)});
  }
  return out;
}

bool range_inside(const DenseSet& a, std::uint64_t start, std::uint64_t len) {
  for (std::uint64_t x = start; x < start + len; ++x) {
    if (!a.contains(Point{static_cast<Index>(x)})) return false;
  }
  return true;
}

bool range_meets(const DenseSet& a, std::uint64_t start, std::uint64_t len) {
  for (std::uint64_t x = start; x < start + len; ++x) {
    if (a.contains(Point{static_cast<Index>(x)})) return true;
  }
  return false;
}

std::uint32_t min2q(const GroupParams& g, std::uint32_t q) { return std::min(2 * q, g.p() - 1); }

}  // namespace

Point StructureReport::piece_offset(std::size_t i) const {
  return i == 0 ? group.scale(q, a[0]) : a[i];
}

StructureReport extract_structure(const DenseSet& a) { return extract_structure(a, LineTableCache(a.group())); }

StructureReport extract_structure(const DenseSet& a, const LineTableCache& cache) {
  const GroupParams& g = a.group();
  if (g.n() == 0) throw PreconditionError("structure extraction needs n >= 1");
  if (!is_E_compressed(a, cache)) throw PreconditionError("structure extraction needs an E-compressed set");

  StructureReport r{g};
  r.h = g.n();
  while (r.h > 0 && !range_inside(a, 0, g.stride(r.h))) --r.h;
  r.m = g.n() - r.h;
  r.h_size = g.stride(r.h);
  if (r.m == 0) {
    r.q = g.p() - 1;
    return r;
  }
  for (std::uint32_t i = 0; i < r.m; ++i) r.a.push_back(g.unit(r.h + i));
  r.q = g.p() - 1;
  while (r.q > 1 && !range_meets(a, r.q * r.h_size, r.h_size)) --r.q;
  r.pieces.push_back(coset_part(a, r.q * r.h_size, r.h_size));
  for (std::uint32_t i = 1; i < r.m; ++i) r.pieces.push_back(coset_part(a, r.a[i].index, r.h_size));
  return r;
}

bool verify_structure(const DenseSet& a, const StructureReport& r) {
  const GroupParams& g = a.group();
  if (!(r.group == g) || r.h > g.n() || r.m != g.n() - r.h || r.h_size != g.stride(r.h)) return false;
  if (!range_inside(a, 0, r.h_size)) return false;
  if (r.m == 0) {
    return r.q == g.p() - 1 && r.a.empty() && r.pieces.empty() && a.size() == g.size();
  }
  if (range_inside(a, 0, g.stride(r.h + 1))) return false;  // H not maximal
  if (r.q < 1 || r.q >= g.p() || r.a.size() != r.m || r.pieces.size() != r.m) return false;
  for (std::uint32_t i = 0; i < r.m; ++i) {
    if (!(r.a[i] == g.unit(r.h + i))) return false;
  }
  for (std::uint32_t k = r.q + 1; k < g.p(); ++k) {
    if (range_meets(a, k * r.h_size, r.h_size)) return false;  // q not maximal
  }
  if (r.pieces[0].empty()) return false;
  for (std::uint32_t i = 0; i < r.m; ++i) {
    if (!(r.pieces[i] == coset_part(a, r.piece_offset(i).index, r.h_size))) return false;
  }

  DenseSet u(g);
  for (std::uint64_t x = 0; x < r.q * r.h_size; ++x) u.insert(Point{static_cast<Index>(x)});
  for (const DenseSet& piece : r.pieces) u |= piece;
  return u == a;
}

ProofObservations check_proof_observations(const DenseSet& a, const StructureReport& r) {
  const GroupParams& g = a.group();
  ProofObservations obs;
  if (r.m == 0) return obs;
  obs.coset_below_q = range_inside(a, (r.q - 1) * r.h_size, r.h_size);
  for (std::uint32_t i = 1; i < r.m; ++i) {
    if (a.contains(g.add(r.a[0], r.a[i]))) obs.a1_plus_ai_absent = false;
    if (g.p() > 2 && a.contains(g.scale(2, r.a[i]))) obs.double_ai_absent = false;
    for (std::uint32_t j = 1; j < i; ++j) {
      if (a.contains(g.add(r.a[j], r.a[i]))) obs.aj_plus_ai_absent = false;
    }
  }
  return obs;
}

std::pair<Rational, Rational> cardinality_bounds(const StructureReport& r) {
  if (r.m == 0) return {Rational(1), Rational(1)};
  const BigInt pm = ipow(r.group.p(), r.m);
  return {ratio(r.q, pm), ratio(r.m + r.q, pm)};
}

std::uint64_t piece_sumset_total(const StructureReport& r) {
  const GroupParams sub(r.group.p(), r.h);
  std::vector<DenseSet> local;
  local.reserve(r.pieces.size());
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    const Index offset = r.piece_offset(i).index;
    DenseSet t(sub);
    r.pieces[i].for_each([&](Point x) { t.insert(Point{x.index - offset}); });
    local.push_back(std::move(t));
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < local.size(); ++i) {
    for (std::size_t j = i; j < local.size(); ++j) total += sumset(local[i], local[j]).size();
  }
  return total;
}

bool sumset_bounds_apply(const StructureReport& r) { return r.group.p() > 2; }

namespace {

void require_odd(const StructureReport& r) {
  if (!sumset_bounds_apply(r)) throw DomainError("the sumset lower bounds need p > 2");
}

}  // namespace

BigInt sumset_lower_bound(const StructureReport& r) {
  require_odd(r);
  const BigInt h(r.h_size);
  const BigInt m_minus_1 = BigInt(r.m) - 1;
  return BigInt(min2q(r.group, r.q)) * h + m_minus_1 * r.q * h + BigInt(piece_sumset_total(r));
}

Rational simplified_lower_bound(const StructureReport& r, std::uint64_t a_size, std::uint64_t span_size) {
  require_odd(r);
  const Rational coeff = Rational(min2q(r.group, r.q)) + ratio((BigInt(r.m) - 3) * r.q, 2);
  return coeff * ratio(span_size, ipow(r.group.p(), r.m)) + ratio(BigInt(r.m) + 1, 2) * a_size;
}

}  // namespace frz
