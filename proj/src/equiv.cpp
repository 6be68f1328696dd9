#include "sdsearch/equiv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "sdsearch/decomp.hpp"
#include "sdsearch/errors.hpp"
#include "sdsearch/isotropic.hpp"

namespace sdsearch {

using Cells = std::vector<std::vector<int>>;

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

// Point/block incidence structure used for refinement.
class Structure {
 public:
  Structure(std::size_t n, const std::vector<BitVec>& words) : n_(n), point_blocks_(n) {
    blocks_.reserve(words.size());
    for (const auto& w : words) {
      std::vector<int> pts;
      for (std::size_t i = 0; i < n; ++i) {
        if (w.test(i)) pts.push_back(static_cast<int>(i));
      }
      for (int p : pts) point_blocks_[static_cast<std::size_t>(p)].push_back(blocks_.size());
      blocks_.push_back(std::move(pts));
    }
  }

  std::size_t size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }

  // Refines to a stable partition. Cells split by the multiset of block
  // profiles (how each incident block meets the current cells); subcells are
  // ordered by signature so the result depends only on the structure.
  std::uint64_t refine(Cells& cells) const {
    std::uint64_t trace = mix(cells.size());
    std::vector<int> cell_of(n_);
    std::vector<int> count;
    std::vector<std::uint64_t> block_hash(blocks_.size());
    std::vector<std::uint64_t> sig(n_);
    std::vector<int> touched;
    for (;;) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int x : cells[c]) cell_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
      }
      count.assign(cells.size(), 0);
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        touched.clear();
        for (int x : blocks_[b]) {
          const int c = cell_of[static_cast<std::size_t>(x)];
          if (count[static_cast<std::size_t>(c)]++ == 0) touched.push_back(c);
        }
        std::sort(touched.begin(), touched.end());
        std::uint64_t h = 0x51ed27;
        for (int c : touched) {
          h = mix(h ^ (static_cast<std::uint64_t>(c) << 20 | static_cast<std::uint64_t>(count[static_cast<std::size_t>(c)])));
          count[static_cast<std::size_t>(c)] = 0;
        }
        block_hash[b] = h;
      }
      for (std::size_t x = 0; x < n_; ++x) {
        std::uint64_t s = 0;
        for (std::size_t b : point_blocks_[x]) s += mix(block_hash[b]);
        sig[x] = s;
      }
      Cells next;
      next.reserve(cells.size());
      bool changed = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto& cell = cells[c];
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::sort(cell.begin(), cell.end(), [&](int a, int b) {
          const auto sa = sig[static_cast<std::size_t>(a)], sb = sig[static_cast<std::size_t>(b)];
          return sa != sb ? sa < sb : a < b;
        });
        std::size_t start = 0;
        std::size_t pieces = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() ||
              sig[static_cast<std::size_t>(cell[i])] != sig[static_cast<std::size_t>(cell[start])]) {
            next.emplace_back(cell.begin() + static_cast<long>(start), cell.begin() + static_cast<long>(i));
            trace = mix(trace ^ sig[static_cast<std::size_t>(cell[start])] ^ (i - start) ^ (c << 40));
            start = i;
            ++pieces;
          }
        }
        if (pieces > 1) changed = true;
      }
      cells = std::move(next);
      if (!changed) break;
    }
    return mix(trace ^ cells.size());
  }

 private:
  std::size_t n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::vector<std::size_t>> point_blocks_;
};

namespace {

int target_cell(const Cells& cells) {
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1) return static_cast<int>(c);
  }
  return -1;
}

Cells individualize(const Cells& cells, int c, int y) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (i != c) {
      out.push_back(cells[static_cast<std::size_t>(i)]);
      continue;
    }
    out.push_back({y});
    std::vector<int> rest;
    for (int x : cells[static_cast<std::size_t>(i)]) {
      if (x != y) rest.push_back(x);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

std::vector<int> leaf_order(const Cells& cells) {
  std::vector<int> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(c[0]);
  return out;
}

// gamma(from[i]) = to[i].
Permutation leaf_map(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> img(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) img[static_cast<std::size_t>(from[i])] = to[i];
  return Permutation::from_images(img);
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

// Orbits of the subgroup generated by those gens fixing every point of `fixed`.
UnionFind orbits_fixing(std::size_t n, const std::vector<Permutation>& gens, const std::vector<int>& fixed) {
  UnionFind uf(n);
  for (const auto& g : gens) {
    bool ok = true;
    for (int f : fixed) {
      if (g[static_cast<std::size_t>(f)] != f) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (std::size_t x = 0; x < n; ++x) uf.unite(static_cast<int>(x), g[x]);
  }
  return uf;
}

struct FirstPath {
  std::vector<Cells> nodes;
  std::vector<int> targets;
  std::vector<int> chosen;
  std::vector<std::uint64_t> traces;
  std::vector<int> leaf;
};

class Search {
 public:
  Search(const Structure& s, SearchStats& stats) : s_(s), stats_(stats) {}

  Cells root(std::uint64_t& trace) const {
    std::vector<int> all(s_.size());
    std::iota(all.begin(), all.end(), 0);
    Cells cells;
    if (!all.empty()) cells.push_back(std::move(all));
    trace = s_.refine(cells);
    return cells;
  }

  FirstPath first_path() {
    FirstPath p;
    std::uint64_t t = 0;
    Cells cells = root(t);
    for (;;) {
      tick();
      p.nodes.push_back(cells);
      p.traces.push_back(t);
      const int c = target_cell(cells);
      if (c < 0) break;
      const int y = *std::min_element(cells[static_cast<std::size_t>(c)].begin(),
                                      cells[static_cast<std::size_t>(c)].end());
      p.targets.push_back(c);
      p.chosen.push_back(y);
      cells = individualize(cells, c, y);
      t = s_.refine(cells);
    }
    p.leaf = leaf_order(cells);
    return p;
  }

  // Depth-first search below `node` (at `depth`, traces matching `ref`) for
  // a leaf accepted by `accept`. Children equivalent under the gens fixing
  // the individualized points are explored once.
  std::optional<std::vector<int>> dfs(const Cells& node, std::size_t depth, std::vector<int>& fixed,
                                      const FirstPath& ref, const std::vector<Permutation>& gens,
                                      const std::function<bool(const std::vector<int>&)>& accept) {
    tick();
    const int c = target_cell(node);
    if (c < 0) {
      ++stats_.leaves;
      auto leaf = leaf_order(node);
      if (accept(leaf)) return leaf;
      return std::nullopt;
    }
    if (depth >= ref.targets.size() || c != ref.targets[depth]) return std::nullopt;
    UnionFind uf = orbits_fixing(s_.size(), gens, fixed);
    std::vector<bool> tried(s_.size(), false);
    std::vector<int> cell = node[static_cast<std::size_t>(c)];
    std::sort(cell.begin(), cell.end());
    for (int z : cell) {
      const int r = uf.find(z);
      if (tried[static_cast<std::size_t>(r)]) continue;
      tried[static_cast<std::size_t>(r)] = true;
      Cells child = individualize(node, c, z);
      if (s_.refine(child) != ref.traces[depth + 1]) continue;
      fixed.push_back(z);
      auto found = dfs(child, depth + 1, fixed, ref, gens, accept);
      fixed.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const Structure& structure() const { return s_; }

 private:
  void tick() {
    if (++stats_.nodes > budget::limit()) {
      std::ostringstream msg;
      msg << "backtrack search: " << stats_.nodes << " nodes, " << stats_.leaves << " leaves, "
          << stats_.shell_words << " shell words";
      throw BudgetError(msg.str());
    }
  }

  const Structure& s_;
  SearchStats& stats_;
};

std::string describe(const SearchStats& st) {
  std::ostringstream o;
  o << "shells {";
  for (std::size_t i = 0; i < st.shell_weights.size(); ++i) o << (i ? "," : "") << st.shell_weights[i];
  o << "}, " << st.shell_words << " words";
  return o.str();
}

// Weight shells, lightest first, until their words span the code.
std::vector<int> choose_shells(const BinaryCode& code, SearchStats& stats) {
  if (static_cast<int>(code.dimension()) > budget::max_enumeration_dimension()) {
    throw BudgetError("automorphism search: dimension " + std::to_string(code.dimension()) +
                      " exceeds the enumeration budget for the shell invariant");
  }
  const WeightProfile wp = weight_profile(code);
  std::vector<int> chosen;
  std::vector<BitVec> words;
  for (const auto& [w, cnt] : wp.counts) {
    if (w == 0) continue;
    chosen.push_back(w);
    const int one[] = {w};
    auto shell = codewords_of_weight(code, one);
    words.insert(words.end(), shell.begin(), shell.end());
    if (BinaryCode(code.length(), words).dimension() == code.dimension()) break;
  }
  stats.shell_weights = chosen;
  stats.shell_words = words.size();
  return chosen;
}

std::vector<BitVec> shell_words(const BinaryCode& code, const std::vector<int>& weights) {
  return codewords_of_weight(code, weights);
}

}  // namespace

AutGroup automorphism_group(const BinaryCode& code) {
  AutGroup out;
  out.code = code;
  const std::size_t n = code.length();
  const auto weights = choose_shells(code, out.stats);
  const Structure s(n, shell_words(code, weights));
  Search search(s, out.stats);
  const FirstPath path = search.first_path();

  std::vector<Permutation> gens;
  std::vector<std::size_t> orbit_sizes(path.chosen.size(), 1);
  auto accept_aut = [&](const std::vector<int>& leaf) {
    return is_automorphism(code, leaf_map(path.leaf, leaf));
  };
  for (long long l = static_cast<long long>(path.chosen.size()) - 1; l >= 0; --l) {
    const auto lu = static_cast<std::size_t>(l);
    const std::vector<int> prefix(path.chosen.begin(), path.chosen.begin() + l);
    const int base_point = path.chosen[lu];
    std::vector<int> cell = path.nodes[lu][static_cast<std::size_t>(path.targets[lu])];
    std::sort(cell.begin(), cell.end());
    std::vector<bool> done(n, false);
    auto mark_orbit = [&](UnionFind& uf, int x) {
      const int r = uf.find(x);
      for (int z : cell) {
        if (uf.find(z) == r) done[static_cast<std::size_t>(z)] = true;
      }
    };
    UnionFind uf = orbits_fixing(n, gens, prefix);
    mark_orbit(uf, base_point);
    for (int y : cell) {
      if (done[static_cast<std::size_t>(y)]) continue;
      Cells child = individualize(path.nodes[lu], path.targets[lu], y);
      std::optional<std::vector<int>> leaf;
      if (s.refine(child) == path.traces[lu + 1]) {
        std::vector<int> fixed = prefix;
        fixed.push_back(y);
        leaf = search.dfs(child, lu + 1, fixed, path, gens, accept_aut);
      }
      if (leaf) {
        gens.push_back(leaf_map(path.leaf, *leaf));
        uf = orbits_fixing(n, gens, prefix);
        mark_orbit(uf, base_point);
      } else {
        mark_orbit(uf, y);
      }
    }
    const int r = uf.find(base_point);
    orbit_sizes[lu] = static_cast<std::size_t>(
        std::count_if(cell.begin(), cell.end(), [&](int z) { return uf.find(z) == r; }));
  }

  out.group = PermGroup(n, gens, path.chosen);
  for (const auto& g : out.group.generators()) {
    if (!is_automorphism(code, g)) throw InvariantError("automorphism_group: generator does not fix the code");
  }
  std::vector<std::size_t> expect, got;
  for (auto o : orbit_sizes) {
    if (o > 1) expect.push_back(o);
  }
  for (auto o : out.group.basic_orbit_sizes()) {
    if (o > 1) got.push_back(o);
  }
  if (expect != got) {
    throw InvariantError("automorphism_group: search orbits disagree with the stabilizer chain (" +
                         describe(out.stats) + ")");
  }
  return out;
}

struct ClassIndex::Entry {
  BinaryCode code;
  std::map<int, std::uint64_t> profile;
  std::vector<int> weights;
  Structure structure;
  AutGroup aut;
};

ClassIndex::ClassIndex() = default;
ClassIndex::~ClassIndex() = default;
ClassIndex::ClassIndex(ClassIndex&&) noexcept = default;
ClassIndex& ClassIndex::operator=(ClassIndex&&) noexcept = default;

std::size_t ClassIndex::size() const { return entries_.size(); }
const BinaryCode& ClassIndex::rep(std::size_t i) const { return entries_[i]->code; }
const AutGroup& ClassIndex::aut(std::size_t i) const { return entries_[i]->aut; }

std::optional<ClassIndex::Match> ClassIndex::find(const BinaryCode& c) const {
  const auto profile = weight_profile(c).counts;
  // The query's refinement depends only on the shell weights, so it is
  // shared by every candidate with the same weights.
  std::map<std::vector<int>, std::pair<std::unique_ptr<Structure>, FirstPath>> prepared;
  SearchStats stats;
  for (const auto& e : entries_) {
    if (e->code.length() != c.length() || e->code.dimension() != c.dimension() || e->profile != profile) continue;
    if (e->code == c) return Match{static_cast<std::size_t>(&e - entries_.data()), Permutation(c.length())};
    auto it = prepared.find(e->weights);
    if (it == prepared.end()) {
      auto s = std::make_unique<Structure>(c.length(), shell_words(c, e->weights));
      Search sc(*s, stats);
      FirstPath path = sc.first_path();
      it = prepared.emplace(e->weights, std::make_pair(std::move(s), std::move(path))).first;
    }
    const FirstPath& path = it->second.second;
    Search search(e->structure, stats);
    std::uint64_t t = 0;
    const Cells root = search.root(t);
    if (t != path.traces[0]) continue;
    std::vector<int> fixed;
    auto accept = [&](const std::vector<int>& leaf) {
      return act_on_code(c, leaf_map(path.leaf, leaf)) == e->code;
    };
    auto leaf = search.dfs(root, 0, fixed, path, e->aut.group.generators(), accept);
    if (leaf) return Match{static_cast<std::size_t>(&e - entries_.data()), leaf_map(path.leaf, *leaf)};
  }
  return std::nullopt;
}

std::size_t ClassIndex::add(const BinaryCode& c) {
  auto e = std::make_unique<Entry>(Entry{c, weight_profile(c).counts, {}, Structure(c.length(), {}), {}});
  e->aut = automorphism_group(c);
  e->weights = e->aut.stats.shell_weights;
  e->structure = Structure(c.length(), shell_words(c, e->weights));
  entries_.push_back(std::move(e));
  return entries_.size() - 1;
}

std::pair<std::size_t, bool> ClassIndex::insert(const BinaryCode& c) {
  if (auto m = find(c)) return {m->index, false};
  return {add(c), true};
}

std::optional<Permutation> is_equivalent(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return std::nullopt;
  if (a == b) return Permutation(a.length());
  ClassIndex index;
  index.add(b);
  auto m = index.find(a);
  if (!m) return std::nullopt;
  return m->witness;
}

SelfDualClassification classify_self_dual(std::size_t n) {
  if (n == 0 || n % 2 || n > 20) throw InputError("classify_self_dual: length must be even, 2..20");
  SelfDualClassification out;
  out.n = n;
  ClassIndex index;
  std::vector<std::uint64_t> counts;
  enumerate_isotropic(F2Form::standard(n), n / 2, [&](const std::vector<BitVec>& rows) {
    ++out.total;
    const auto [i, fresh] = index.insert(BinaryCode(n, rows));
    if (fresh) counts.push_back(0);
    ++counts[i];
    return true;
  });
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  for (std::size_t i = 0; i < index.size(); ++i) {
    SelfDualClass cls{index.rep(i), index.aut(i).group.order(), counts[i]};
    out.mass += fact / cls.aut_order;
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::uint64_t self_dual_count_formula(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 1; i + 1 <= n / 2; ++i) p *= (std::uint64_t{1} << i) + 1;
  return p;
}

std::optional<Permutation> same_orbit(const BinaryCode& a, const BinaryCode& b, const PermGroup& group) {
  const auto w = is_equivalent(a, b);
  if (!w) return std::nullopt;
  const AutGroup aut = automorphism_group(a);
  budget::require(aut.group.order(), "same_orbit: Aut(a) elements");
  std::optional<Permutation> found;
  aut.group.for_each_element([&](const Permutation& x) {
    const Permutation c = x * *w;
    if (group.contains(c)) {
      found = c;
      return false;
    }
    return true;
  });
  return found;
}

namespace {

std::vector<Permutation> conjugation_class_reps(std::vector<Permutation> elems,
                                                const std::vector<Permutation>& acting) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<bool> seen(elems.size(), false);
  std::vector<Permutation> reps;
  auto index_of = [&](const Permutation& p) -> std::size_t {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p) {
      throw InputError("fpf_element_classes: acting group does not normalize the element set");
    }
    return static_cast<std::size_t>(it - elems.begin());
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    // Ascending scan: the first unseen element is the least of its class.
    reps.push_back(elems[i]);
    seen[i] = true;
    std::vector<std::size_t> queue{i};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& t : acting) {
        const std::size_t j = index_of(conjugate(elems[queue[q]], t));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  return reps;
}

bool wanted(const Permutation& p, int order) { return p.is_fixed_point_free() && p.order() == order; }

}  // namespace

std::vector<Permutation> fpf_element_classes(const PermGroup& group, int order, const PermGroup* acting,
                                             FpfMethod method) {
  if (order < 2) throw InputError("fpf_element_classes: order must be at least 2");
  if (group.degree() == 0) return {};
  if (method == FpfMethod::Auto) {
    method = group.log2_order() <= std::log2(1e6) ? FpfMethod::Enumerate : FpfMethod::Backtrack;
  }
  std::vector<Permutation> found;
  if (method == FpfMethod::Enumerate) {
    budget::require(group.order(), "fpf_element_classes: group elements");
    group.for_each_element([&](const Permutation& p) {
      if (wanted(p, order)) found.push_back(p);
      return true;
    });
  } else {
    // Elements are v_{k-1} * ... * v_0; choosing v_0, v_1, ... in turn fixes
    // the image of b_i as suffix(v_i(b_i)), so a fixed base point prunes.
    const std::size_t k = group.base_length();
    const auto& base = group.base();
    std::uint64_t visited = 0;
    std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t i, const Permutation& suffix) {
      if (i == k) {
        if (++visited > budget::limit()) throw BudgetError("fpf_element_classes: backtrack budget exceeded");
        if (wanted(suffix, order)) found.push_back(suffix);
        return;
      }
      for (int beta : group.basic_orbit(i)) {
        const Permutation next = *group.transversal(i, beta) * suffix;
        if (next[static_cast<std::size_t>(base[i])] == base[i]) continue;
        rec(i + 1, next);
      }
    };
    rec(0, group.identity());
  }
  const auto& gens = acting ? acting->generators() : group.generators();
  return conjugation_class_reps(std::move(found), gens);
}

std::optional<Permutation> random_fpf_element(const PermGroup& group, int order, std::mt19937_64& rng,
                                              int attempts) {
  for (int i = 0; i < attempts; ++i) {
    const Permutation x = group.random_element(rng);
    const int o = x.order();
    if (o % order) continue;
    const Permutation y = x.pow(o / order);
    if (y.is_fixed_point_free()) return y;
  }
  return std::nullopt;
}

std::optional<Permutation> inverting_involution(const PermGroup& group, const Permutation& g) {
  const auto t = conjugating_element_in(group, g, g.inverse());
  if (!t) return std::nullopt;
  // Every inverting element lies in C(g) t.
  const PermGroup cent = centralizer_of_element(group, g);
  std::optional<Permutation> best;
  budget::require(cent.order(), "inverting_involution: centralizer elements");
  cent.for_each_element([&](const Permutation& c) {
    const Permutation s = c * *t;
    if (s.order() == 2 && s.is_fixed_point_free() && (!best || s < *best)) best = s;
    return true;
  });
  return best;
}

bool in_defining_set(const BinaryCode& d, const HConfig& config) {
  if (d.length() != config.half()) return false;
  if (!is_self_dual(d)) return false;
  const Permutation p1h = config.pi1_h();
  if (!is_automorphism(d, p1h)) return false;
  const BinaryCode f3 = collapse_code(fixed_code(d, p1h), 2);
  return is_automorphism(f3, config.pi2_sigma());
}

OrbitRepSet lemma_repr(const BinaryCode& y, const HConfig& config, std::string source_class) {
  if (y.length() != config.half()) {
    throw InputError("lemma_repr: code length " + std::to_string(y.length()) + ", expected " +
                     std::to_string(config.half()));
  }
  if (!is_self_dual(y)) throw InputError("lemma_repr: code is not self-dual");
  OrbitRepSet out;
  out.source_class = std::move(source_class);
  const std::size_t n = config.half();
  const Permutation p1h = config.pi1_h();
  const Permutation s2 = config.pi2_sigma();

  const AutGroup aut = automorphism_group(y);
  for (const auto& h : fpf_element_classes(aut.group, 2)) {
    const Permutation tau = *conjugating_element(h, p1h);
    const BinaryCode di = act_on_code(y, tau);
    std::vector<Permutation> conj_gens;
    for (const auto& g : aut.group.generators()) conj_gens.push_back(conjugate(g, tau));
    const PermGroup aut_di(n, conj_gens);
    const PermGroup cent = centralizer_of_element(aut_di, p1h);
    std::vector<Permutation> acting_gens;
    for (const auto& c : cent.generators()) acting_gens.push_back(pi3_perm(c));
    const PermGroup acting(n / 2, acting_gens);
    const BinaryCode f3 = collapse_code(fixed_code(di, p1h), 2);
    const AutGroup aut_f3 = automorphism_group(f3);
    for (const auto& sigma : fpf_element_classes(aut_f3.group, s2.order(), &acting)) {
      const Permutation rho = *conjugating_element(sigma, s2);
      const Permutation rho_tilde = natural_lift(rho);
      out.reps.push_back({act_on_code(di, rho_tilde), tau, rho_tilde, h, sigma});
    }
  }
  check_rep_set(y, config, out);
  return out;
}

void check_rep_set(const BinaryCode& y, const HConfig& config, const OrbitRepSet& set) {
  const Permutation p1h = config.pi1_h();
  const Permutation s2 = config.pi2_sigma();
  for (const auto& r : set.reps) {
    if (act_on_code(act_on_code(y, r.tau), r.rho_tilde) != r.code) {
      throw InvariantError("orbit rep: witness equation fails");
    }
    if (conjugate(r.h, r.tau) != p1h) throw InvariantError("orbit rep: tau does not carry h to pi1(h)");
    if (r.rho_tilde * p1h != p1h * r.rho_tilde) throw InvariantError("orbit rep: lift does not commute with pi1(h)");
    if (conjugate(r.sigma, pi3_perm(r.rho_tilde)) != s2) {
      throw InvariantError("orbit rep: rho does not carry sigma to pi2(sigma)");
    }
    if (!in_defining_set(r.code, config)) throw InvariantError("orbit rep: code outside the defining set");
  }
}

namespace {

// (rep index, transversal index) of each fused code.
std::vector<std::pair<std::size_t, std::size_t>> fuse_indices(const std::vector<BinaryCode>& reps,
                                                              const PermGroup& group,
                                                              const std::vector<Permutation>& transversal) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<BinaryCode> kept;
  std::vector<std::map<int, std::uint64_t>> profiles;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (std::size_t t = 0; t < transversal.size(); ++t) {
      BinaryCode z = act_on_code(reps[r], transversal[t]);
      auto prof = weight_profile(z).counts;
      bool fresh = true;
      for (std::size_t i = 0; i < kept.size() && fresh; ++i) {
        if (profiles[i] != prof) continue;
        if (kept[i] == z || same_orbit(kept[i], z, group)) fresh = false;
      }
      if (fresh) {
        kept.push_back(std::move(z));
        profiles.push_back(std::move(prof));
        out.emplace_back(r, t);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BinaryCode> orbit_fuse(const std::vector<BinaryCode>& reps, const PermGroup& group,
                                   const std::vector<Permutation>& transversal) {
  std::vector<BinaryCode> out;
  for (const auto& [r, t] : fuse_indices(reps, group, transversal)) out.push_back(act_on_code(reps[r], transversal[t]));
  return out;
}

OrbitRepSet orbit_fuse(const OrbitRepSet& set, const PermGroup& group, const std::vector<Permutation>& transversal) {
  std::vector<BinaryCode> codes;
  for (const auto& r : set.reps) codes.push_back(r.code);
  OrbitRepSet out;
  out.source_class = set.source_class;
  for (const auto& [r, t] : fuse_indices(codes, group, transversal)) {
    OrbitRep rep = set.reps[r];
    rep.code = act_on_code(rep.code, transversal[t]);
    rep.rho_tilde = rep.rho_tilde * transversal[t];
    out.reps.push_back(std::move(rep));
  }
  return out;
}

Order3Reduction order3_reduction(const BinaryCode& code, std::uint64_t seed) {
  const PermGroup aut = automorphism_group(code).group;
  std::mt19937_64 rng(seed);
  const auto g = random_fpf_element(aut, 3, rng);
  if (!g) throw InputError("order3_reduction: no fixed-point-free element of order 3 found");
  const auto sigma = inverting_involution(aut, *g);
  if (!sigma) throw InputError("order3_reduction: no fixed-point-free involution inverts g");
  Order3Reduction out;
  out.relabel = sigma_alignment(*g, *sigma);
  out.code = act_on_code(code, out.relabel);
  out.g = conjugate(*g, out.relabel);
  out.sigma = conjugate(*sigma, out.relabel);
  out.fixed = fixed_code(out.code, out.g);
  out.even = even_subcode(out.code, out.g);
  out.f4 = map_E_to_F4(out.even, out.g);
  out.additive = pi_project(out.f4);
  return out;
}

}  // namespace sdsearch
