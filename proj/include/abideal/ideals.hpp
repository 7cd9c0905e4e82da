#pragma once

#include "abideal/affine.hpp"
#include "abideal/root_system.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace abideal {

/// Combinatorial Abelian ideal: a set of positive roots closed under adding
/// positive roots, no two members summing to a root. Carries the minuscule
/// word realizing it and, when nonempty, its rootlet w(alpha_0)+delta.
struct AbelianIdeal {
  std::vector<Root> roots;  // sorted by root_less
  WeylWord word;
  std::optional<Root> rootlet;

  size_t size() const { return roots.size(); }
  bool contains(const Root& g) const;
  bool subset_of(const AbelianIdeal& other) const;
};

bool ideal_roots_less(const std::vector<Root>& a, const std::vector<Root>& b);

/// Condition (a): mu + nu is never a root for mu, nu in the set.
bool is_abelian_subalgebra(const RootSystem& rs, const std::vector<Root>& roots);
/// Conditions (a) and (b); throws if some element is not a positive root.
bool is_abelian_ideal(const RootSystem& rs, const std::vector<Root>& roots);

/// Generators by the combinatorial definition (g - a never in I for positive
/// a), cross-checked against the word criterion w(delta-g) in -Pi^.
std::vector<Root> generators(const RootSystem& rs, const AbelianIdeal& ideal);
/// The two routes separately, for the verification suite.
std::vector<Root> generators_definitional(const RootSystem& rs, const std::vector<Root>& roots);
std::vector<Root> generators_by_word(const RootSystem& rs, const AbelianIdeal& ideal);

struct Extension {
  Root gamma;   // root being added
  int letter;   // i with w(delta-gamma) = alpha_i
};

/// All one-root Abelian extensions, sorted by gamma.
std::vector<Extension> elementary_extensions(const RootSystem& rs, const AbelianIdeal& ideal);

AbelianIdeal extend(const RootSystem& rs, const AbelianIdeal& ideal, const Extension& ext);

/// Validates a word as minuscule and packages its ideal.
std::optional<AbelianIdeal> ideal_from_word(const RootSystem& rs, const WeylWord& w);

struct CoverEdge {
  int from = -1;  // smaller ideal
  int to = -1;    // larger ideal
  int letter = -1;
  Root added;
};

/// All Abelian ideals of the Borel subalgebra, as a ranked poset.
struct IdealPoset {
  std::vector<AbelianIdeal> ideals;  // sorted by (cardinality, root-set key)
  std::vector<CoverEdge> edges;

  int index_of(const std::vector<Root>& roots) const;  // -1 if absent
  std::vector<int> covers_of(int index) const;         // indices of elementary extensions
  bool contains_roots(const std::vector<Root>& roots) const { return index_of(roots) >= 0; }

  std::map<std::vector<std::vector<int>>, int> index_;
};

/// Breadth-first closure from the empty ideal under elementary extensions.
/// Throws std::logic_error when the count differs from 2^rank.
IdealPoset enumerate_ideals(const RootSystem& rs);

/// Exhaustive subset filter; ground truth for enumerate_ideals.
/// Requires |Delta+| <= max_positive (default 16).
std::set<std::vector<std::vector<int>>> brute_force_enumerate(const RootSystem& rs,
                                                              size_t max_positive = 16);

struct HasseNode {
  int index;
  int cardinality;
  std::vector<Root> generator_set;
  std::optional<Root> rootlet;
};

struct HasseDiagram {
  std::vector<HasseNode> nodes;                 // ordered by (cardinality, key)
  std::vector<std::pair<int, int>> edges;       // cover pairs, bottom-up
};

HasseDiagram hasse(const RootSystem& rs, const IdealPoset& poset);

}  // namespace abideal
