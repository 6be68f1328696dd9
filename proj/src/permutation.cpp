#include "sdsearch/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sdsearch/errors.hpp"

namespace sdsearch {

namespace {

void check_degree(std::size_t degree) {
  if (degree > 256) throw InputError("permutation degree above 256");
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  check_degree(degree);
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  check_degree(images.size());
  Permutation p;
  p.images_.resize(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int x = images[i];
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[static_cast<std::size_t>(x)]) {
      throw InputError("from_images: not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
    p.images_[i] = static_cast<std::uint8_t>(x);
  }
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const int a = c[j], b = c[(j + 1) % c.size()];
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > degree ||
          static_cast<std::size_t>(b) > degree) {
        throw InputError("cycle point out of range 1.." + std::to_string(degree));
      }
      if (used[static_cast<std::size_t>(a - 1)]) throw InputError("cycles are not disjoint");
      used[static_cast<std::size_t>(a - 1)] = true;
      p.images_[static_cast<std::size_t>(a - 1)] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("permutation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw InputError("permutation: expected a point in \"" + std::string(text) + "\"");
      cycle.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (i >= text.size()) throw InputError("permutation: missing ')'");
    ++i;
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw InputError("permutation degree mismatch");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = o.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation acc(degree());
  while (k) {
    if (k & 1U) acc = acc * base;
    base = base * base;
    k >>= 1U;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

bool Permutation::is_fixed_point_free() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::all_cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  auto all = all_cycles();
  std::erase_if(all, [](const auto& c) { return c.size() < 2; });
  return all;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : all_cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(c[j] + 1);
    }
    s += ')';
  }
  return s;
}

BitVec Permutation::apply(const BitVec& v) const {
  BitVec r;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (v.test(i)) r.set(images_[i]);
  }
  return r;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : images_) h = (h ^ x) * 1099511628211ULL;
  return h;
}

Permutation conjugate(const Permutation& a, const Permutation& t) { return t.inverse() * a * t; }

std::optional<Permutation> conjugating_element(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) return std::nullopt;
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  auto ca = a.all_cycles();
  auto cb = b.all_cycles();
  // Stable by length keeps the smallest-point-first order within each length.
  auto by_len = [](const auto& x, const auto& y) { return x.size() < y.size(); };
  std::stable_sort(ca.begin(), ca.end(), by_len);
  std::stable_sort(cb.begin(), cb.end(), by_len);
  std::vector<int> img(a.degree());
  for (std::size_t c = 0; c < ca.size(); ++c) {
    for (std::size_t j = 0; j < ca[c].size(); ++j) {
      img[static_cast<std::size_t>(ca[c][j])] = cb[c][j];
    }
  }
  return Permutation::from_images(img);
}

Permutation natural_lift(const Permutation& rho) {
  const std::size_t m = rho.degree();
  std::vector<int> img(2 * m);
  for (std::size_t a = 0; a < m; ++a) {
    img[2 * a] = 2 * rho[a];
    img[2 * a + 1] = 2 * rho[a] + 1;
  }
  return Permutation::from_images(img);
}

BinaryCode act_on_code(const BinaryCode& code, const Permutation& p) {
  if (p.degree() != code.length()) throw InputError("act_on_code: degree mismatch");
  std::vector<BitVec> rows;
  rows.reserve(code.dimension());
  for (const auto& r : code.rows()) rows.push_back(p.apply(r));
  return BinaryCode(code.length(), rows);
}

bool is_automorphism(const BinaryCode& code, const Permutation& p) {
  if (p.degree() != code.length()) return false;
  for (const auto& r : code.rows()) {
    if (!code.contains(p.apply(r))) return false;
  }
  return true;
}

}  // namespace sdsearch
