#include "frz/dense_set.hpp"

#include <string>

#include "frz/error.hpp"

namespace frz {

namespace {

void require_same_group(const DenseSet& a, const DenseSet& b) {
  if (!(a.group() == b.group())) throw ValidationError("sets live in different groups");
}

}  // namespace

DenseSet::DenseSet(GroupParams group)
    : group_(std::move(group)), words_((group_.size() + 63) / 64, 0) {}

DenseSet DenseSet::from_points(const GroupParams& group, std::span<const Point> points) {
  DenseSet out(group);
  for (Point u : points) out.insert(u);
  return out;
}

DenseSet DenseSet::full(const GroupParams& group) {
  DenseSet out(group);
  const std::uint64_t n = group.size();
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    const std::uint64_t lo = w * 64;
    out.words_[w] = (n - lo >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - lo)) - 1);
  }
  out.count_ = static_cast<std::size_t>(n);
  return out;
}

DenseSet DenseSet::from_word(const GroupParams& group, std::uint64_t word) {
  if (group.size() > 64) throw CapacityError("membership words need a universe of at most 64 points");
  if (group.size() < 64 && (word >> group.size()) != 0) {
    throw ValidationError("membership word has bits beyond the universe");
  }
  DenseSet out(group);
  out.words_[0] = word;
  out.recount();
  return out;
}

void DenseSet::insert(Point u) {
  if (u.index >= group_.size()) throw ValidationError("point " + std::to_string(u.index) + " outside the group");
  std::uint64_t& w = words_[u.index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (u.index & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void DenseSet::erase(Point u) {
  if (u.index >= group_.size()) return;
  std::uint64_t& w = words_[u.index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (u.index & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

Point DenseSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return Point{static_cast<Index>(w * 64 + std::countr_zero(words_[w]))};
  }
  throw DomainError("empty set has no least element");
}

std::vector<Point> DenseSet::points() const {
  std::vector<Point> out;
  out.reserve(count_);
  for_each([&](Point u) { out.push_back(u); });
  return out;
}

std::uint64_t DenseSet::word() const {
  if (group_.size() > 64) throw CapacityError("membership words need a universe of at most 64 points");
  return words_[0];
}

bool DenseSet::is_subset_of(const DenseSet& other) const {
  require_same_group(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

DenseSet& DenseSet::operator|=(const DenseSet& other) {
  require_same_group(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  recount();
  return *this;
}

DenseSet& DenseSet::operator&=(const DenseSet& other) {
  require_same_group(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  recount();
  return *this;
}

void DenseSet::recount() {
  count_ = 0;
  for (std::uint64_t w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

}  // namespace frz
