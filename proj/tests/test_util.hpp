#pragma once

#include <initializer_list>
#include <vector>

#include "frz/dense_set.hpp"

namespace testing_util {

// A set given by coordinate tuples (first coordinate least significant).
inline frz::DenseSet set_of(std::uint32_t p, std::uint32_t n,
                            std::initializer_list<std::initializer_list<frz::Residue>> pts) {
  const frz::GroupParams g(p, n);
  frz::DenseSet out(g);
  for (const auto& c : pts) {
    const std::vector<frz::Residue> v(c);
    out.insert(g.encode(v));
  }
  return out;
}

inline frz::Point pt(const frz::GroupParams& g, std::initializer_list<frz::Residue> c) {
  const std::vector<frz::Residue> v(c);
  return g.encode(v);
}

}  // namespace testing_util
