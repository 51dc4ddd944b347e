#include "rabkit/local_action.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "rabkit/errors.hpp"

namespace rab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<int> identity_perm(std::int64_t n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_bijection(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<int> dense_ids(const std::vector<int>& raw) {
  std::vector<int> ids(raw.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& p) { return p.first == raw[i]; });
    if (it == seen.end()) {
      seen.push_back({raw[i], static_cast<int>(seen.size())});
      ids[i] = seen.back().second;
    } else {
      ids[i] = it->second;
    }
  }
  return ids;
}

constexpr std::size_t kClosureLimit = 1u << 20;

std::vector<std::vector<int>> closure(int degree, const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen{identity_perm(degree)};
  std::vector<std::vector<int>> queue{identity_perm(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      auto h = compose_perm(g, queue[i]);
      if (seen.insert(h).second) {
        if (seen.size() > kClosureLimit) throw BoundExceeded("permutation group closure too large");
        queue.push_back(std::move(h));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

LocalPerm LocalPerm::identity(const VertexGroupSpec& spec) {
  LocalPerm p;
  if (spec.kind != VertexGroupSpec::Kind::InfiniteCyclic) p.perm = identity_perm(spec.order);
  return p;
}

LocalPerm LocalPerm::finite(std::vector<int> perm) {
  LocalPerm p;
  p.perm = std::move(perm);
  return p;
}

LocalPerm LocalPerm::affine(int eps, std::int64_t shift) {
  LocalPerm p;
  p.eps = eps;
  p.shift = shift;
  return p;
}

LocalPerm LocalPerm::translation(const VertexGroupSpec& spec, std::int64_t k) {
  LocalPerm p = identity(spec);
  if (spec.is_finite()) {
    for (std::int64_t r = 0; r < spec.order; ++r) p.perm[r] = static_cast<int>(mod(r + k, spec.order));
  } else {
    p.shift = k;
  }
  return p;
}

VertexElement LocalPerm::apply(const VertexElement& e) const {
  return {perm.at(static_cast<std::size_t>(e.residue)), eps * e.z + shift};
}

bool LocalPerm::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return eps == 1 && shift == 0;
}

void LocalPerm::validate(const VertexGroupSpec& spec) const {
  if (eps != 1 && eps != -1) throw NotABijection("affine part must have slope +1 or -1");
  if (!is_bijection(perm)) throw NotABijection("residue part is not a permutation");
  switch (spec.kind) {
    case VertexGroupSpec::Kind::FiniteCyclic:
      if (static_cast<std::int64_t>(perm.size()) != spec.order) throw NotABijection("wrong degree for " + to_string(spec));
      if (eps != 1 || shift != 0) throw NotABijection("finite colours have no affine part");
      break;
    case VertexGroupSpec::Kind::InfiniteCyclic:
      if (perm.size() != 1) throw NotABijection("Z colours have no residue part");
      break;
    case VertexGroupSpec::Kind::TwoEnded:
      if (static_cast<std::int64_t>(perm.size()) != spec.order) throw NotABijection("wrong degree for " + to_string(spec));
      break;
  }
}

LocalPerm compose(const LocalPerm& a, const LocalPerm& b) {
  if (a.perm.size() != b.perm.size()) throw NotABijection("composing permutations of different sets");
  LocalPerm out;
  out.perm = compose_perm(a.perm, b.perm);
  out.eps = a.eps * b.eps;
  out.shift = a.eps * b.shift + a.shift;
  return out;
}

LocalPerm inverse(const LocalPerm& a) {
  LocalPerm out;
  out.perm.assign(a.perm.size(), 0);
  for (std::size_t i = 0; i < a.perm.size(); ++i) out.perm[a.perm[i]] = static_cast<int>(i);
  out.eps = a.eps;
  out.shift = -a.eps * a.shift;
  return out;
}

std::string to_string(const LocalPerm& p) {
  std::ostringstream os;
  bool has_perm = p.perm.size() > 1;
  bool has_affine = p.eps != 1 || p.shift != 0 || !has_perm;
  if (has_perm) {
    os << '[';
    for (std::size_t i = 0; i < p.perm.size(); ++i) os << (i ? "," : "") << p.perm[i];
    os << ']';
  }
  if (has_affine) {
    if (has_perm) os << ' ';
    os << "x -> " << (p.eps < 0 ? "-x" : "x");
    if (p.shift > 0) os << '+' << p.shift;
    if (p.shift < 0) os << p.shift;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

ColourClasses ColourClasses::table(std::vector<int> classes) {
  if (classes.empty()) throw ParseError("empty class table");
  ColourClasses c(Kind::Table);
  c.table_ = dense_ids(classes);
  return c;
}

ColourClasses ColourClasses::modular(std::int64_t m) {
  if (m < 1) throw ParseError("modulus must be positive");
  ColourClasses c(Kind::Modular);
  c.m_ = m;
  return c;
}

ColourClasses ColourClasses::folded(std::int64_t m, std::int64_t centre) {
  if (m < 1) throw ParseError("modulus must be positive");
  ColourClasses c(Kind::Folded);
  c.m_ = m;
  c.c_ = mod(centre, m);
  std::vector<int> raw(static_cast<std::size_t>(m));
  for (std::int64_t x = 0; x < m; ++x) raw[x] = static_cast<int>(std::min(x, mod(centre - x, m)));
  c.folded_ids_ = dense_ids(raw);
  return c;
}

std::int64_t ColourClasses::count(const VertexGroupSpec& spec) const {
  switch (kind_) {
    case Kind::Identity:
      return spec.is_finite() ? spec.order : 0;
    case Kind::Table:
      if (!spec.is_finite() || static_cast<std::int64_t>(table_.size()) != spec.order)
        throw ParseError("class table does not match " + to_string(spec));
      return *std::max_element(table_.begin(), table_.end()) + 1;
    case Kind::Modular:
      if (spec.is_finite() && spec.order % m_ != 0)
        throw ParseError("modulus " + std::to_string(m_) + " does not divide " + std::to_string(spec.order));
      return m_;
    case Kind::Folded:
      if (spec.is_finite() && spec.order % m_ != 0)
        throw ParseError("modulus " + std::to_string(m_) + " does not divide " + std::to_string(spec.order));
      return *std::max_element(folded_ids_.begin(), folded_ids_.end()) + 1;
  }
  return 0;
}

std::int64_t ColourClasses::classify(const VertexGroupSpec& spec, const VertexElement& e) const {
  std::int64_t x = spec.is_finite() ? e.residue : e.z;
  switch (kind_) {
    case Kind::Identity:
      if (spec.kind == VertexGroupSpec::Kind::TwoEnded) throw Error("identity classes on Z/nxZ have no integer index");
      return x;
    case Kind::Table:
      return table_.at(static_cast<std::size_t>(e.residue));
    case Kind::Modular:
      return mod(x, m_);
    case Kind::Folded:
      return folded_ids_[mod(x, m_)];
  }
  return 0;
}

VertexGroupSpec ColourClasses::target_spec(const VertexGroupSpec& spec) const {
  if (kind_ == Kind::Identity) return spec;
  return VertexGroupSpec::finite(count(spec));
}

VertexElement ColourClasses::label(const VertexGroupSpec& spec, const VertexElement& e) const {
  if (kind_ == Kind::Identity) return e;
  return {classify(spec, e), 0};
}

std::string ColourClasses::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Table: {
      std::string s = "table[";
      for (std::size_t i = 0; i < table_.size(); ++i) s += (i ? "," : "") + std::to_string(table_[i]);
      return s + "]";
    }
    case Kind::Modular:
      return "mod " + std::to_string(m_);
    case Kind::Folded:
      return "fold mod " + std::to_string(m_) + " about " + std::to_string(c_);
  }
  return "?";
}

// ---------------------------------------------------------------------------

LocalActionGroup LocalActionGroup::finite(int degree, std::vector<std::vector<int>> generators) {
  if (degree < 1) throw ParseError("degree must be positive");
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != degree || !is_bijection(g)) throw NotABijection("generator is not a permutation");
  LocalActionGroup f;
  f.kind_ = Kind::Finite;
  f.degree_ = degree;
  f.generators_ = std::move(generators);
  return f;
}

LocalActionGroup LocalActionGroup::symmetric(int degree) {
  std::vector<std::vector<int>> gens;
  if (degree >= 2) {
    auto swap = identity_perm(degree);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
  }
  if (degree >= 3) {
    std::vector<int> cycle(degree);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    gens.push_back(cycle);
  }
  return finite(degree, std::move(gens));
}

LocalActionGroup LocalActionGroup::cyclic_regular(int degree) {
  std::vector<int> cycle(degree);
  for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
  return finite(degree, {cycle});
}

LocalActionGroup LocalActionGroup::line(const std::vector<LocalPerm>& generators) {
  std::int64_t d = 0;
  std::optional<std::int64_t> c0;
  for (const auto& g : generators) {
    if (g.perm.size() != 1 || (g.eps != 1 && g.eps != -1)) throw NotABijection("not an isometry of the integer line");
    if (g.eps == 1) {
      d = std::gcd(d, g.shift);
    } else if (!c0) {
      c0 = g.shift;
    } else {
      d = std::gcd(d, g.shift - *c0);
    }
  }
  return line_normal_form(d, c0.has_value(), c0.value_or(0));
}

LocalActionGroup LocalActionGroup::line_normal_form(std::int64_t lattice, bool reflections, std::int64_t c0) {
  LocalActionGroup f;
  f.kind_ = Kind::Line;
  f.lattice_ = lattice < 0 ? -lattice : lattice;
  f.reflections_ = reflections;
  f.c0_ = reflections ? (f.lattice_ > 0 ? mod(c0, f.lattice_) : c0) : 0;
  return f;
}

LocalActionGroup LocalActionGroup::regular(const VertexGroupSpec& spec) {
  switch (spec.kind) {
    case VertexGroupSpec::Kind::FiniteCyclic:
      return cyclic_regular(static_cast<int>(spec.order));
    case VertexGroupSpec::Kind::InfiniteCyclic:
      return line_translations();
    case VertexGroupSpec::Kind::TwoEnded:
      break;
  }
  throw UnsupportedSymbolicGroup("local action groups on Z/nxZ are not supported");
}

bool LocalActionGroup::contains(const LocalPerm& p) const {
  if (kind_ == Kind::Line) {
    if (p.perm.size() != 1) return false;
    if (p.eps == 1) return lattice_ == 0 ? p.shift == 0 : mod(p.shift, lattice_) == 0;
    if (!reflections_) return false;
    return lattice_ == 0 ? p.shift == c0_ : mod(p.shift - c0_, lattice_) == 0;
  }
  if (p.eps != 1 || p.shift != 0 || static_cast<int>(p.perm.size()) != degree_) return false;
  const auto& e = elements();
  return std::binary_search(e.begin(), e.end(), p.perm);
}

const std::vector<std::vector<int>>& LocalActionGroup::elements() const {
  if (kind_ != Kind::Finite) throw UnsupportedSymbolicGroup("symbolic groups have no element list");
  std::call_once(cache_->once, [this] { cache_->elements = closure(degree_, generators_); });
  return cache_->elements;
}

std::uint64_t LocalActionGroup::order() const {
  if (kind_ == Kind::Finite) return elements().size();
  if (lattice_ != 0) return 0;
  return reflections_ ? 2 : 1;
}

std::string LocalActionGroup::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::Line) {
    os << "line: translations by " << lattice_ << "Z";
    if (reflections_) os << ", reflections x -> -x+" << c0_ << "+" << lattice_ << "Z";
    return os.str();
  }
  os << "degree " << degree_ << ", order " << order();
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

PlusClosure finite_plus(const LocalActionGroup& f) {
  const int n = f.degree();
  const auto& all = f.elements();

  std::vector<std::vector<int>> gens;
  std::set<std::vector<int>> plus{identity_perm(n)};
  for (const auto& g : all) {
    bool fixes = false;
    for (int x = 0; x < n && !fixes; ++x) fixes = g[x] == x;
    if (!fixes || plus.count(g)) continue;
    gens.push_back(g);
    auto c = closure(n, gens);
    plus = std::set<std::vector<int>>(c.begin(), c.end());
  }

  std::vector<int> orbit(n);
  std::iota(orbit.begin(), orbit.end(), 0);
  std::function<int(int)> find = [&](int x) { return orbit[x] == x ? x : orbit[x] = find(orbit[x]); };
  for (const auto& g : gens)
    for (int x = 0; x < n; ++x) orbit[find(x)] = find(g[x]);
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = find(x);

  PlusClosure out{LocalActionGroup::finite(n, gens), ColourClasses::table(raw), 0, 0, true};
  auto spec = VertexGroupSpec{VertexGroupSpec::Kind::FiniteCyclic, n};
  out.orbit_count = out.orbits.count(spec);
  out.quotient_order = all.size() / plus.size();
  for (const auto& g : all) {
    if (plus.count(g)) continue;
    for (int x = 0; x < n; ++x) {
      if (out.orbits.classify(spec, {x, 0}) == out.orbits.classify(spec, {g[x], 0})) {
        out.quotient_acts_freely = false;
        break;
      }
    }
  }
  return out;
}

PlusClosure line_plus(const LocalActionGroup& f) {
  const std::int64_t d = f.lattice();
  const std::int64_t c0 = f.reflection_offset();
  if (!f.has_reflections() || d == 0)
    throw UnsupportedSymbolicGroup("F+ has infinitely many orbits on the line");

  std::int64_t lattice;
  std::int64_t centre;
  if (d % 2 == 0) {
    if (c0 % 2 != 0) throw UnsupportedSymbolicGroup("no reflection fixes an integer");
    lattice = d;
    centre = c0;
  } else {
    lattice = 2 * d;
    centre = c0 % 2 == 0 ? c0 : c0 + d;
  }
  PlusClosure out{LocalActionGroup::line_normal_form(lattice, true, centre), ColourClasses::folded(lattice, centre), 0,
                  lattice == d ? 1u : 2u, true};
  auto spec = VertexGroupSpec::infinite();
  out.orbit_count = out.orbits.count(spec);
  if (lattice != d) {
    // The nontrivial coset is represented by x -> x + d.
    for (std::int64_t x = 0; x < lattice; ++x)
      if (out.orbits.classify(spec, {0, x}) == out.orbits.classify(spec, {0, x + d})) out.quotient_acts_freely = false;
  }
  return out;
}

}  // namespace

PlusClosure point_stabilizer_closure(const LocalActionGroup& f) {
  return f.kind() == LocalActionGroup::Kind::Finite ? finite_plus(f) : line_plus(f);
}

}  // namespace rab
