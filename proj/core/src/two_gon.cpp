#include "rabkit/two_gon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rabkit/errors.hpp"

namespace rab {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<int> dense(const std::vector<int>& raw) {
  std::map<int, int> ids;
  std::vector<int> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = ids.emplace(raw[i], static_cast<int>(ids.size()));
    out[i] = it->second;
  }
  return out;
}

/// Chamber permutation of left multiplication by h.
Perm left_multiplication(const TwoGon& x, const std::map<Perm, int>& index, const Perm& h) {
  Perm out(x.size());
  for (int c = 0; c < x.size(); ++c) out[c] = index.at(compose(h, x.chambers[c]));
  return out;
}

std::vector<Perm> base_local_actions(const TwoGon& x, const std::map<Perm, int>& index, int type) {
  const auto& panel = type == 0 ? x.s_panel : x.t_panel;
  std::set<Perm> out;
  for (const auto& h : x.chambers) {
    auto l = left_multiplication(x, index, h);
    if (panel[l[0]] != panel[0]) continue;
    out.insert(*two_gon_local_action(x, l, type, panel[0]));
  }
  return {out.begin(), out.end()};
}

bool same_panels(const TwoGon& x, const Perm& phi, int i, int j) {
  return (x.s_panel[i] == x.s_panel[j]) == (x.s_panel[phi[i]] == x.s_panel[phi[j]]) &&
         (x.t_panel[i] == x.t_panel[j]) == (x.t_panel[phi[i]] == x.t_panel[phi[j]]);
}

int element_order(Perm p) {
  Perm id(p.size());
  std::iota(id.begin(), id.end(), 0);
  int k = 1;
  for (Perm q = p; q != id; q = compose(p, q)) ++k;
  return k;
}

}  // namespace

TwoGon make_two_gon(int n) {
  if (n < 2 || n > 4) throw BoundExceeded("two-gon fixture supports 2 <= n <= 4");
  TwoGon x;
  x.n = n;
  Perm h(n);
  std::iota(h.begin(), h.end(), 0);
  do x.chambers.push_back(h);
  while (std::next_permutation(h.begin(), h.end()));
  std::map<Perm, int> index;
  for (int c = 0; c < x.size(); ++c) index.emplace(x.chambers[c], c);

  Perm cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<int> s_raw(x.size()), t_raw(x.size());
  for (int c = 0; c < x.size(); ++c) {
    int least = c;
    Perm y = x.chambers[c];
    for (int k = 0; k < n; ++k) {
      y = compose(y, cycle);
      least = std::min(least, index.at(y));
    }
    s_raw[c] = least;
    t_raw[c] = x.chambers[c][0];
  }
  x.s_panel = dense(s_raw);
  x.t_panel = dense(t_raw);
  x.s_colour = t_raw;
  x.t_colour = x.s_panel;
  x.s_colours = n;
  x.t_colours = *std::max_element(x.s_panel.begin(), x.s_panel.end()) + 1;
  x.f_s = base_local_actions(x, index, 0);
  x.f_t = base_local_actions(x, index, 1);
  return x;
}

std::optional<std::vector<int>> two_gon_local_action(const TwoGon& x, const std::vector<int>& phi, int type,
                                                     int panel) {
  const auto& panels = type == 0 ? x.s_panel : x.t_panel;
  const auto& colour = type == 0 ? x.s_colour : x.t_colour;
  int degree = type == 0 ? x.s_colours : x.t_colours;
  std::vector<int> action(degree, -1);
  int image_panel = -1;
  for (int c = 0; c < x.size(); ++c) {
    if (panels[c] != panel) continue;
    int d = phi[c];
    if (image_panel < 0) image_panel = panels[d];
    if (panels[d] != image_panel) return std::nullopt;
    action[colour[c]] = colour[d];
  }
  return action;
}

bool respects_colour_rule(const TwoGon& x, const std::vector<int>& phi) {
  for (int type = 0; type < 2; ++type) {
    const auto& panels = type == 0 ? x.s_panel : x.t_panel;
    const auto& allowed = type == 0 ? x.f_s : x.f_t;
    int count = *std::max_element(panels.begin(), panels.end()) + 1;
    for (int p = 0; p < count; ++p) {
      auto action = two_gon_local_action(x, phi, type, p);
      if (!action || !std::binary_search(allowed.begin(), allowed.end(), *action)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> two_gon_universal_group(const TwoGon& x) {
  std::vector<Perm> out;
  Perm phi(x.size(), -1);
  std::vector<bool> used(x.size(), false);
  auto search = [&](auto&& self, int i) -> void {
    if (i == x.size()) {
      if (respects_colour_rule(x, phi)) out.push_back(phi);
      return;
    }
    for (int d = 0; d < x.size(); ++d) {
      if (used[d]) continue;
      phi[i] = d;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = same_panels(x, phi, i, j);
      if (!ok) continue;
      used[d] = true;
      self(self, i + 1);
      used[d] = false;
    }
    phi[i] = -1;
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> two_gon_regular_group(const TwoGon& x) {
  std::map<Perm, int> index;
  for (int c = 0; c < x.size(); ++c) index.emplace(x.chambers[c], c);
  std::vector<Perm> out;
  for (const auto& h : x.chambers) out.push_back(left_multiplication(x, index, h));
  return out;
}

TwoGonReport analyze_two_gon(int n) {
  auto x = make_two_gon(n);
  TwoGonReport r;
  r.n = n;
  r.chambers = x.size();
  r.f_s_order = x.f_s.size();
  r.f_t_order = x.f_t.size();
  r.f_s_cyclic = std::any_of(x.f_s.begin(), x.f_s.end(), [&](const Perm& p) { return element_order(p) == n; });

  auto u = two_gon_universal_group(x);
  r.universal_order = u.size();
  std::set<std::pair<Perm, Perm>> images;
  bool uniform = true;
  for (const auto& phi : u) {
    for (int type = 0; type < 2 && uniform; ++type) {
      const auto& panels = type == 0 ? x.s_panel : x.t_panel;
      auto first = two_gon_local_action(x, phi, type, panels[0]);
      for (int c = 0; c < x.size() && uniform; ++c) uniform = two_gon_local_action(x, phi, type, panels[c]) == first;
    }
    images.emplace(*two_gon_local_action(x, phi, 0, x.s_panel[0]), *two_gon_local_action(x, phi, 1, x.t_panel[0]));
  }
  r.direct_product = uniform && images.size() == u.size() && u.size() == r.f_s_order * r.f_t_order;

  auto h = two_gon_regular_group(x);
  r.regular_order = h.size();
  std::vector<int> hits(x.size(), 0);
  for (const auto& l : h) ++hits[l[0]];
  r.regular_is_simply_transitive = std::all_of(hits.begin(), hits.end(), [](int k) { return k == 1; });
  for (int e = 0; e < static_cast<int>(h.size()) && !r.violation; ++e) {
    for (int type = 0; type < 2 && !r.violation; ++type) {
      const auto& panels = type == 0 ? x.s_panel : x.t_panel;
      const auto& allowed = type == 0 ? x.f_s : x.f_t;
      int count = *std::max_element(panels.begin(), panels.end()) + 1;
      for (int p = 0; p < count; ++p) {
        auto action = *two_gon_local_action(x, h[e], type, p);
        if (!std::binary_search(allowed.begin(), allowed.end(), action)) {
          r.violation = TwoGonViolation{e, type, p, action};
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace rab
