#include "sdsearch/perm_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "sdsearch/errors.hpp"

namespace sdsearch {

namespace {

int first_moved_point(const Permutation& p) {
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (p[i] != static_cast<int>(i)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     const std::vector<int>& base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw InputError("PermGroup: generator degree mismatch");
  }
  build(base_prefix);
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles(degree, {{1, 2}}));
    std::vector<int> cyc(degree);
    for (std::size_t i = 0; i < degree; ++i) cyc[i] = static_cast<int>(i + 1);
    if (degree > 2) gens.push_back(Permutation::from_cycles(degree, {cyc}));
  }
  return PermGroup(degree, gens);
}

bool PermGroup::fixes_prefix(const Permutation& p, std::size_t count) const {
  for (std::size_t l = 0; l < count; ++l) {
    if (p[static_cast<std::size_t>(base_[l])] != base_[l]) return false;
  }
  return true;
}

void PermGroup::extend_level(std::size_t i) {
  Level& L = levels_[i];
  if (L.reps.empty()) {
    L.base_point = base_[i];
    L.reps.assign(degree_, std::nullopt);
    L.inv_reps.assign(degree_, std::nullopt);
    L.reps[static_cast<std::size_t>(L.base_point)] = Permutation(degree_);
    L.inv_reps[static_cast<std::size_t>(L.base_point)] = Permutation(degree_);
    L.orbit.assign(1, L.base_point);
    L.done.assign(1, 0);
  }
  // strong_ only grows, so the filtered list extends the previous one.
  L.gens.clear();
  for (const auto& s : strong_) {
    if (fixes_prefix(s, i)) L.gens.push_back(s);
  }
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    const int x = L.orbit[k];
    for (const auto& s : L.gens) {
      const auto y = static_cast<std::size_t>(s[static_cast<std::size_t>(x)]);
      if (!L.reps[y]) {
        L.reps[y] = *L.reps[static_cast<std::size_t>(x)] * s;
        L.inv_reps[y] = L.reps[y]->inverse();
        L.orbit.push_back(static_cast<int>(y));
        L.done.push_back(0);
      }
    }
  }
}

void PermGroup::build(const std::vector<int>& base_prefix) {
  for (int b : base_prefix) {
    if (b < 0 || static_cast<std::size_t>(b) >= degree_) throw InputError("base point out of range");
    if (std::find(base_.begin(), base_.end(), b) == base_.end()) base_.push_back(b);
  }
  for (const auto& g : generators_) {
    if (!g.is_identity()) strong_.push_back(g);
  }
  for (const auto& s : strong_) {
    if (fixes_prefix(s, base_.size())) base_.push_back(first_moved_point(s));
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) extend_level(i);

  // Deterministic Schreier-Sims: levels below i form a complete chain for the
  // group they generate; a failed Schreier generator is added and the search
  // resumes at the deepest level it touched.
  long long i = static_cast<long long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t idx = 0; idx < levels_[li].orbit.size() && !restarted; ++idx) {
      while (levels_[li].done[idx] < levels_[li].gens.size()) {
        const Level& L = levels_[li];
        const int x = L.orbit[idx];
        const Permutation& s = L.gens[L.done[idx]];
        const auto y = static_cast<std::size_t>(s[static_cast<std::size_t>(x)]);
        const Permutation g = *L.reps[static_cast<std::size_t>(x)] * s * *L.inv_reps[y];
        auto [h, j] = strip(g, li + 1);
        if (j < levels_.size() || !h.is_identity()) {
          if (j == levels_.size()) {
            base_.push_back(first_moved_point(h));
            levels_.emplace_back();
          }
          strong_.push_back(h);
          for (std::size_t l = li + 1; l <= j; ++l) extend_level(l);
          i = static_cast<long long>(j);
          restarted = true;
          break;
        }
        ++levels_[li].done[idx];
      }
    }
    if (!restarted) --i;
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(const Permutation& p, std::size_t from) const {
  Permutation g = p;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const int x = g[static_cast<std::size_t>(levels_[l].base_point)];
    const auto& rep = levels_[l].reps[static_cast<std::size_t>(x)];
    if (!rep) return {g, l};
    g = g * *levels_[l].inv_reps[static_cast<std::size_t>(x)];
  }
  return {g, levels_.size()};
}

std::uint64_t PermGroup::order() const {
  std::uint64_t o = 1;
  for (const auto& L : levels_) {
    if (__builtin_mul_overflow(o, static_cast<std::uint64_t>(L.orbit.size()), &o)) {
      throw InvariantError("group order exceeds 64 bits");
    }
  }
  return o;
}

double PermGroup::log2_order() const {
  double s = 0;
  for (const auto& L : levels_) s += std::log2(static_cast<double>(L.orbit.size()));
  return s;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& L : levels_) out.push_back(L.orbit.size());
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [h, j] = strip(p);
  return j == levels_.size() && h.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> out{point};
  std::vector<bool> seen(degree_, false);
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      const int y = g[static_cast<std::size_t>(out[k])];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree_, false);
  for (std::size_t p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(static_cast<int>(p));
    std::sort(o.begin(), o.end());
    for (int x : o) seen[static_cast<std::size_t>(x)] = true;
    out.push_back(std::move(o));
  }
  return out;
}

PermGroup PermGroup::stabilizer_of_base_prefix(std::size_t count) const {
  if (count >= levels_.size()) return PermGroup(degree_);
  std::vector<int> rest(base_.begin() + static_cast<long>(count), base_.end());
  return PermGroup(degree_, levels_[count].gens, rest);
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& f) const {
  // Elements are v_{k-1} * ... * v_0 with v_l a transversal element of level l.
  std::function<bool(long long, const Permutation&)> rec = [&](long long l,
                                                               const Permutation& acc) -> bool {
    if (l < 0) return f(acc);
    const Level& L = levels_[static_cast<std::size_t>(l)];
    for (int x : L.orbit) {
      if (!rec(l - 1, acc * *L.reps[static_cast<std::size_t>(x)])) return false;
    }
    return true;
  };
  rec(static_cast<long long>(levels_.size()) - 1, Permutation(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  if (log2_order() > 62 || order() > limit) {
    throw BudgetError("group has more than " + std::to_string(limit) + " elements");
  }
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation acc(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& L = levels_[l];
    std::uniform_int_distribution<std::size_t> pick(0, L.orbit.size() - 1);
    acc = acc * *L.reps[static_cast<std::size_t>(L.orbit[pick(rng)])];
  }
  return acc;
}

PermGroup centralizer_of_element(const PermGroup& group, const Permutation& x) {
  // Conjugation orbit of x with witnesses t_y satisfying t_y^-1 x t_y = y.
  std::unordered_map<Permutation, Permutation> witness;
  std::vector<Permutation> orbit{x};
  witness.emplace(x, group.identity());
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    const Permutation y = orbit[k];
    for (const auto& s : group.generators()) {
      Permutation z = conjugate(y, s);
      if (!witness.count(z)) {
        witness.emplace(z, witness.at(y) * s);
        orbit.push_back(z);
        budget::require(orbit.size(), "conjugacy class enumeration");
      }
    }
  }
  const std::uint64_t target = group.order() / orbit.size();
  PermGroup c(group.degree());
  std::vector<Permutation> gens;
  for (const auto& y : orbit) {
    if (c.order() == target) break;
    for (const auto& s : group.generators()) {
      const Permutation z = conjugate(y, s);
      Permutation sg = witness.at(y) * s * witness.at(z).inverse();
      if (!c.contains(sg)) {
        gens.push_back(std::move(sg));
        c = PermGroup(group.degree(), gens);
        if (c.order() == target) break;
      }
    }
  }
  if (c.order() != target) throw InvariantError("centralizer order mismatch");
  return c;
}

std::optional<Permutation> conjugating_element_in(const PermGroup& group, const Permutation& a,
                                                  const Permutation& b) {
  if (a == b) return group.identity();
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  std::unordered_map<Permutation, Permutation> witness;
  std::vector<Permutation> orbit{a};
  witness.emplace(a, group.identity());
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    const Permutation y = orbit[k];
    for (const auto& s : group.generators()) {
      Permutation z = conjugate(y, s);
      if (witness.count(z)) continue;
      Permutation t = witness.at(y) * s;
      if (z == b) return t;
      witness.emplace(z, std::move(t));
      orbit.push_back(std::move(z));
      budget::require(orbit.size(), "conjugacy class enumeration");
    }
  }
  return std::nullopt;
}

PermGroup centralizer_in(const PermGroup& group, const std::vector<Permutation>& elems) {
  PermGroup c = group;
  for (const auto& e : elems) c = centralizer_of_element(c, e);
  for (const auto& g : c.generators()) {
    for (const auto& e : elems) {
      if (g * e != e * g) throw InvariantError("centralizer generator does not commute");
    }
  }
  return c;
}

PermGroup semiregular_centralizer(std::size_t degree, const std::vector<Permutation>& gens) {
  const PermGroup h(degree, gens);
  const auto elems = h.elements(1U << 20);
  const auto orbs = h.orbits();
  for (const auto& o : orbs) {
    if (o.size() != elems.size()) throw InputError("group does not act semiregularly");
  }
  // element_at[y] = the unique element h_y with x_b^{h_y} = y.
  std::vector<const Permutation*> element_at(degree, nullptr);
  std::vector<int> orbit_of(degree), base_of(orbs.size());
  for (std::size_t b = 0; b < orbs.size(); ++b) {
    base_of[b] = orbs[b].front();
    for (const auto& e : elems) {
      element_at[static_cast<std::size_t>(e[static_cast<std::size_t>(base_of[b])])] = &e;
    }
    for (int y : orbs[b]) orbit_of[static_cast<std::size_t>(y)] = static_cast<int>(b);
  }
  std::vector<Permutation> out;
  for (std::size_t b = 0; b < orbs.size(); ++b) {
    for (const auto& r : gens) {
      std::vector<int> img(degree);
      for (std::size_t y = 0; y < degree; ++y) img[y] = static_cast<int>(y);
      const int xr = r[static_cast<std::size_t>(base_of[b])];
      for (int y : orbs[b]) img[static_cast<std::size_t>(y)] = (*element_at[static_cast<std::size_t>(y)])[static_cast<std::size_t>(xr)];
      out.push_back(Permutation::from_images(img));
    }
  }
  auto block_map = [&](const std::vector<int>& target_of_orbit) {
    std::vector<int> img(degree);
    for (std::size_t y = 0; y < degree; ++y) {
      const int b = orbit_of[y];
      const int tb = target_of_orbit[static_cast<std::size_t>(b)];
      img[y] = (*element_at[y])[static_cast<std::size_t>(base_of[static_cast<std::size_t>(tb)])];
    }
    return Permutation::from_images(img);
  };
  if (orbs.size() >= 2) {
    std::vector<int> swap01(orbs.size()), cyc(orbs.size());
    for (std::size_t b = 0; b < orbs.size(); ++b) {
      swap01[b] = static_cast<int>(b);
      cyc[b] = static_cast<int>((b + 1) % orbs.size());
    }
    std::swap(swap01[0], swap01[1]);
    out.push_back(block_map(swap01));
    if (orbs.size() > 2) out.push_back(block_map(cyc));
  }
  for (const auto& t : out) {
    for (const auto& g : gens) {
      if (t * g != g * t) throw InvariantError("semiregular centralizer generator does not commute");
    }
  }
  return PermGroup(degree, out);
}

GroupHom::GroupHom(PermGroup domain, std::size_t codomain_degree, std::vector<Permutation> images)
    : domain_(std::move(domain)), codomain_degree_(codomain_degree), images_(std::move(images)) {
  if (images_.size() != domain_.generators().size()) {
    throw InputError("GroupHom: one image per generator required");
  }
  const std::size_t n = domain_.degree();
  std::vector<Permutation> graph_gens;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].degree() != codomain_degree_) throw InputError("GroupHom: image degree mismatch");
    std::vector<int> img(n + codomain_degree_);
    for (std::size_t p = 0; p < n; ++p) img[p] = domain_.generators()[i][p];
    for (std::size_t p = 0; p < codomain_degree_; ++p) {
      img[n + p] = static_cast<int>(n) + images_[i][p];
    }
    graph_gens.push_back(Permutation::from_images(img));
  }
  graph_ = PermGroup(n + codomain_degree_, graph_gens, domain_.base());
  image_ = PermGroup(codomain_degree_, images_);
}

bool GroupHom::well_defined() const {
  // Orders differ by an integer factor, so a log gap below 1/2 means equality.
  return std::abs(graph_.log2_order() - domain_.log2_order()) < 0.5;
}

Permutation GroupHom::operator()(const Permutation& x) const {
  const std::size_t n = domain_.degree();
  if (!domain_.contains(x)) throw InputError("GroupHom: element not in the domain");
  std::vector<int> img(n + codomain_degree_);
  for (std::size_t p = 0; p < n; ++p) img[p] = x[p];
  for (std::size_t p = 0; p < codomain_degree_; ++p) img[n + p] = static_cast<int>(n + p);
  const Permutation lifted = Permutation::from_images(img);
  // Sift through the levels whose base points are domain points; the product
  // of the transversal elements used agrees with x on the domain.
  Permutation g = lifted;
  for (std::size_t l = 0; l < graph_.base_length(); ++l) {
    const int b = graph_.base()[l];
    if (static_cast<std::size_t>(b) >= n) break;
    const auto& rep = graph_.transversal(l, g[static_cast<std::size_t>(b)]);
    if (!rep) throw InvariantError("GroupHom: sift failed");
    g = g * rep->inverse();
  }
  const Permutation w = g.inverse() * lifted;
  std::vector<int> out(codomain_degree_);
  for (std::size_t p = 0; p < codomain_degree_; ++p) {
    out[p] = w[n + p] - static_cast<int>(n);
  }
  return Permutation::from_images(out);
}

std::uint64_t GroupHom::kernel_order() const {
  const std::size_t n = domain_.degree();
  std::vector<int> prefix;
  for (std::size_t p = 0; p < codomain_degree_; ++p) prefix.push_back(static_cast<int>(n + p));
  const PermGroup g(n + codomain_degree_, graph_.generators(), prefix);
  return g.stabilizer_of_base_prefix(codomain_degree_).order();
}

Permutation block_action(const Permutation& p, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(p.degree(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
  }
  std::vector<int> img(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int target = block_of[static_cast<std::size_t>(p[static_cast<std::size_t>(blocks[b][0])])];
    for (int x : blocks[b]) {
      if (block_of[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])] != target) {
        throw InputError("permutation does not preserve the block system");
      }
    }
    img[b] = target;
  }
  return Permutation::from_images(img);
}

std::vector<Permutation> left_transversal(const PermGroup& group, const PermGroup& sub) {
  const std::uint64_t index = group.order() / sub.order();
  if (index * sub.order() != group.order()) throw InvariantError("subgroup order does not divide");
  budget::require(index, "left transversal");
  std::vector<Permutation> reps{group.identity()};
  for (std::size_t k = 0; k < reps.size() && reps.size() < index; ++k) {
    for (const auto& s : group.generators()) {
      const Permutation c = s * reps[k];
      const bool known = std::any_of(reps.begin(), reps.end(), [&](const Permutation& r) {
        return sub.contains(r.inverse() * c);
      });
      if (!known) reps.push_back(c);
    }
  }
  if (reps.size() != index) throw InvariantError("left transversal size mismatch");
  return reps;
}

}  // namespace sdsearch
