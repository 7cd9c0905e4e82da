#pragma once

#include "abideal/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abideal {

/// x + k*delta with x in the root lattice. Real affine roots have x in Delta;
/// the lambda-coordinate of the full affine space is never needed here.
struct AffineVector {
  Root finite;
  int level = 0;

  bool operator==(const AffineVector&) const = default;
};

bool affine_less(const AffineVector& a, const AffineVector& b);

/// Word in the simple reflections s_0,...,s_p of the affine Weyl group.
/// Letters act right-to-left: the last letter is applied first.
struct WeylWord {
  std::vector<int> letters;

  size_t size() const { return letters.size(); }
  WeylWord prepended(int letter) const;
  WeylWord appended(int letter) const;
  /// Letters reversed; simple reflections are involutions, so this is w^{-1}.
  WeylWord inverse() const;
  WeylWord concat(const WeylWord& right) const;
  std::string str() const;  // "s2 s3 s4 s0"

  bool operator==(const WeylWord&) const = default;
};

AffineVector affine_simple_root(const RootSystem& rs, int i);  // i = 0..rank

/// delta is isotropic and orthogonal to the finite part.
Rat affine_inner(const RootSystem& rs, const AffineVector& a, const AffineVector& b);

/// Positivity of a real affine root: level >= 1, or level 0 and finite positive.
bool affine_positive(const RootSystem& rs, const AffineVector& v);

AffineVector affine_reflect(const RootSystem& rs, int i, const AffineVector& v);

AffineVector apply(const RootSystem& rs, const WeylWord& w, AffineVector v);

/// Finite-letter words acting on the root lattice.
Root apply_finite(const RootSystem& rs, const WeylWord& w, Root x);

/// Images of alpha_0,...,alpha_p; equal keys iff equal group elements.
std::vector<AffineVector> canonical_element(const RootSystem& rs, const WeylWord& w);

/// Inversion data over the test set Delta+ ∪ {delta-g} ∪ {2delta-g}.
/// For any word this is enough to decide minusculity: an inversion at level
/// k >= 3 forces one at level 2, and finite inversions are scanned directly.
struct InversionScan {
  std::vector<Root> level_one;        // g with delta-g sent negative, sorted
  std::vector<Root> finite_negated;   // positive g sent negative
  bool deep = false;                  // some 2delta-g sent negative
};

InversionScan scan_inversions(const RootSystem& rs, const WeylWord& w);

/// N^(w) for words without deep inversions: finite inversions plus level-one
/// vectors delta-g.
std::vector<AffineVector> inversion_set(const RootSystem& rs, const WeylWord& w);

/// The roots I_w = {g : delta-g in N^(w)} when w is minuscule, else nullopt.
std::optional<std::vector<Root>> minuscule_roots(const RootSystem& rs, const WeylWord& w);

}  // namespace abideal
