#pragma once

#include "abideal/ideals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abideal {

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing
};

bool all_pass(const std::vector<NamedCheck>& checks);

/// The rootlet tau(I_w) = w(alpha_0) + delta, a long positive root.
Root rootlet(const RootSystem& rs, const AbelianIdeal& ideal);

/// The shortest finite-letter word with w(theta) = mu; its length is
/// (rho, theta^vee - mu^vee). Built by breadth-first descent from theta
/// along reflections that lower (rho, .^vee) by exactly one.
WeylWord shortest_to(const RootSystem& rs, const Root& mu);

/// The mu-minimal ideal, realized by the word w_mu s_0.
AbelianIdeal min_ideal(const RootSystem& rs, const Root& mu);

/// Generators of the mu-minimal ideal: w_mu^{-1}(alpha + mu) over simple
/// alpha with (alpha, mu^vee) = -1. For mu = theta the sole generator is theta.
std::vector<Root> min_ideal_generators(const RootSystem& rs, const Root& mu);

/// H = {g in Delta+ : (g, theta) > 0}; #H = 2(rho,theta^vee) - 1.
std::vector<Root> heisenberg_roots(const RootSystem& rs);

/// Component of the -theta node in the extended Dynkin diagram after removing
/// all nodes whose roots are not orthogonal to mu, together with
/// M_mu = {theta - sum c_i alpha_i | c_i >= 0, i usual node} ∩ Delta.
struct GammaSubdiagram {
  bool has_theta_node = false;   // false exactly when (mu, theta) != 0
  std::vector<int> usual_nodes;  // simple indices in the component, sorted
  std::vector<Root> m_mu;        // sorted by root_less
};

GammaSubdiagram gamma_subdiagram(const RootSystem& rs, const Root& mu);

struct FiberReport {
  Root mu;
  std::vector<int> ideals;  // poset indices, ascending (cardinality, key)
  int min_index = -1;
  int max_index = -1;
  WeylWord w_mu;
  std::optional<Root> gamma_first;  // w_mu^{-1}(theta)
  GammaSubdiagram gamma;
  std::vector<NamedCheck> checks;

  bool all_ok() const { return all_pass(checks); }
};

/// Fibers of the rootlet map over all long positive roots, with every
/// structural property checked and recorded per fiber.
struct FiberAnalysis {
  std::vector<FiberReport> reports;   // ordered by root_less on mu
  std::vector<NamedCheck> global;     // partition / surjectivity checks

  const FiberReport* find(const Root& mu) const;
  bool all_ok() const;
};

FiberAnalysis analyze_fibers(const RootSystem& rs, const IdealPoset& poset);

/// Size-criteria checks for one fiber: #fiber > 1 iff (mu,theta) = 0, the
/// predicted second ideal and its word, the >2 criterion with its third
/// ideals, and the simple-chain lower bounds.
std::vector<NamedCheck> fiber_cardinality_criteria(const RootSystem& rs, const IdealPoset& poset,
                                                   const FiberReport& report);

/// The order-ideal description of a fiber: the maximal ideal equals
/// min ∪ w_mu^{-1}(M_mu), and I -> w_mu(I \ min) is an order isomorphism onto
/// the up-closed subsets of M_mu. Verified computationally; a failure is a
/// finding about the description, not necessarily a bug.
bool max_ideal_conjecture_check(const RootSystem& rs, const IdealPoset& poset,
                                const FiberReport& report);

/// Three-way equivalence on every nontrivial ideal: being a mu-minimal ideal,
/// lying inside H, and having a word of the form (finite) * s_0.
std::vector<NamedCheck> classify_min_ideals(const RootSystem& rs, const IdealPoset& poset);

/// I(mu)_min ⊆ I(nu)_min iff nu <= mu, over all long positive pairs.
bool min_ideal_order_check(const RootSystem& rs);

/// Maximality facts: non-simple rootlet implies extendable; in simply-laced
/// types at least two maximal ideals above; maximal ideals biject with the
/// long simple roots through the rootlet.
std::vector<NamedCheck> not_max_checks(const RootSystem& rs, const IdealPoset& poset);

/// Every cover edge reflects the rootlet by its letter (s_0 fixes it), and
/// inclusion reverses the rootlet order.
std::vector<NamedCheck> elem_ext_rootlet_law(const RootSystem& rs, const IdealPoset& poset);

/// Interaction of two elementary extensions of one ideal: either the union is
/// an ideal and the letters commute, or the added roots sum to theta and the
/// three rootlets collapse to a pair of long simple roots.
std::vector<NamedCheck> compose_law_checks(const RootSystem& rs, const IdealPoset& poset);

}  // namespace abideal
