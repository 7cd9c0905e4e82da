#include "abideal/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace abideal {

bool affine_less(const AffineVector& a, const AffineVector& b) {
  if (a.level != b.level) return a.level < b.level;
  return root_less(a.finite, b.finite);
}

WeylWord WeylWord::prepended(int letter) const {
  WeylWord w;
  w.letters.reserve(letters.size() + 1);
  w.letters.push_back(letter);
  w.letters.insert(w.letters.end(), letters.begin(), letters.end());
  return w;
}

WeylWord WeylWord::appended(int letter) const {
  WeylWord w = *this;
  w.letters.push_back(letter);
  return w;
}

WeylWord WeylWord::inverse() const {
  WeylWord w = *this;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

WeylWord WeylWord::concat(const WeylWord& right) const {
  WeylWord w = *this;
  w.letters.insert(w.letters.end(), right.letters.begin(), right.letters.end());
  return w;
}

std::string WeylWord::str() const {
  std::string s;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ' ';
    s += 's';
    s += std::to_string(letters[k]);
  }
  return s;
}

AffineVector affine_simple_root(const RootSystem& rs, int i) {
  if (i == 0) return AffineVector{-rs.highest_root(), 1};
  return AffineVector{rs.simple_root(i), 0};
}

Rat affine_inner(const RootSystem& rs, const AffineVector& a, const AffineVector& b) {
  return rs.inner(a.finite, b.finite);
}

bool affine_positive(const RootSystem& rs, const AffineVector& v) {
  if (v.level != 0) return v.level > 0;
  if (rs.is_positive_root(v.finite)) return true;
  if (rs.is_positive_root(-v.finite)) return false;
  throw std::invalid_argument("affine_positive: finite part is not a root");
}

AffineVector affine_reflect(const RootSystem& rs, int i, const AffineVector& v) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("reflection index out of range");
  if (i > 0) return AffineVector{rs.simple_reflection(i, v.finite), v.level};
  // s_0: pairing with alpha_0^vee = (delta - theta)^vee is -(x, theta^vee).
  const int m = rs.theta_coroot_pairing(v.finite);
  Root f = v.finite;
  const Root& theta = rs.highest_root();
  for (int k = 0; k < rs.rank(); ++k) f.c[k] -= m * theta.c[k];
  return AffineVector{f, v.level + m};
}

AffineVector apply(const RootSystem& rs, const WeylWord& w, AffineVector v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = affine_reflect(rs, *it, v);
  return v;
}

Root apply_finite(const RootSystem& rs, const WeylWord& w, Root x) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it == 0) throw std::invalid_argument("apply_finite: affine letter in word");
    x = rs.simple_reflection(*it, x);
  }
  return x;
}

std::vector<AffineVector> canonical_element(const RootSystem& rs, const WeylWord& w) {
  std::vector<AffineVector> key;
  key.reserve(rs.rank() + 1);
  for (int i = 0; i <= rs.rank(); ++i) key.push_back(apply(rs, w, affine_simple_root(rs, i)));
  return key;
}

InversionScan scan_inversions(const RootSystem& rs, const WeylWord& w) {
  InversionScan scan;
  for (const Root& g : rs.positive_roots()) {
    const AffineVector img = apply(rs, w, AffineVector{g, 0});
    if (!affine_positive(rs, img)) scan.finite_negated.push_back(g);
    // delta - g maps to delta - img, and 2delta - g to 2delta - img.
    const AffineVector d1{-img.finite, 1 - img.level};
    const AffineVector d2{-img.finite, 2 - img.level};
    if (!affine_positive(rs, d1)) scan.level_one.push_back(g);
    if (!affine_positive(rs, d2)) scan.deep = true;
  }
  return scan;
}

std::vector<AffineVector> inversion_set(const RootSystem& rs, const WeylWord& w) {
  const InversionScan scan = scan_inversions(rs, w);
  if (scan.deep)
    throw std::invalid_argument("inversion_set: word has inversions of level >= 2");
  std::vector<AffineVector> out;
  for (const Root& g : scan.finite_negated) out.push_back(AffineVector{g, 0});
  for (const Root& g : scan.level_one) out.push_back(AffineVector{-g, 1});
  return out;
}

std::optional<std::vector<Root>> minuscule_roots(const RootSystem& rs, const WeylWord& w) {
  const InversionScan scan = scan_inversions(rs, w);
  if (scan.deep || !scan.finite_negated.empty()) return std::nullopt;
  return scan.level_one;
}

}  // namespace abideal
