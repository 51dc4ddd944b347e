#ifndef RABKIT_TESTS_PERM_ORACLE_HPP
#define RABKIT_TESTS_PERM_ORACLE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm mul(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

/// Group generated by gens, by repeated multiplication until nothing new appears.
inline std::set<Perm> generate(int degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> group{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> current(group.begin(), group.end());
    for (const auto& a : current)
      for (const auto& g : gens)
        if (group.insert(mul(a, g)).second) grew = true;
  }
  return group;
}

/// Subgroup generated by elements with a fixed point.
inline std::set<Perm> plus_subgroup(int degree, const std::set<Perm>& group) {
  std::vector<Perm> stab;
  for (const auto& g : group)
    for (int x = 0; x < degree; ++x)
      if (g[x] == x) {
        stab.push_back(g);
        break;
      }
  return generate(degree, stab);
}

/// orbit[x] = least point in the orbit of x.
inline std::vector<int> orbits(int degree, const std::set<Perm>& group) {
  std::vector<int> out(degree);
  for (int x = 0; x < degree; ++x) {
    int least = x;
    for (const auto& g : group) least = std::min(least, g[x]);
    out[x] = least;
  }
  return out;
}

}  // namespace oracle

#endif  // RABKIT_TESTS_PERM_ORACLE_HPP
