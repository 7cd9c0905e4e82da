#pragma once

#include <boost/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abideal {

/// Exact scalar type; every pairing this library uses stays rational.
using Rat = boost::rational<long long>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family;
  int rank;

  static LieType parse(std::string_view name);  // "A5", "E8", ...
  std::string name() const;
  bool operator==(const LieType&) const = default;
};

/// Element of the root lattice, written over the simple roots.
struct Root {
  std::vector<int> c;

  Root() = default;
  explicit Root(std::vector<int> coeffs) : c(std::move(coeffs)) {}

  int height() const;
  bool is_zero() const;
  bool nonnegative() const;  // all coordinates >= 0

  bool operator==(const Root&) const = default;
  Root operator+(const Root&) const;
  Root operator-(const Root&) const;
  Root operator-() const;
};

/// Deterministic order: height first, then coordinates lexicographically.
bool root_less(const Root& a, const Root& b);

struct RootLess {
  bool operator()(const Root& a, const Root& b) const { return root_less(a, b); }
};

/// Finite root system with exact integer/rational arithmetic.
///
/// Immutable after construction; all queries are const and safe to share
/// between threads. Simple roots are indexed 1..rank. The numbering is the
/// Vinberg-Onishchik one for E6, E7, E8 and F4; Bourbaki labels are exposed
/// through bourbaki_label() for interoperability.
class RootSystem {
public:
  static RootSystem build(LieType type);

  LieType lie_type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan()[i-1][j-1] = (alpha_i, alpha_j^vee)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return theta_; }
  Root simple_root(int i) const;  // 1-based
  Root zero() const { return Root(std::vector<int>(rank(), 0)); }

  bool is_positive_root(const Root& x) const;
  bool is_root(const Root& x) const;
  /// Index into positive_roots(), or -1.
  int positive_index(const Root& x) const;

  std::vector<Root> long_positive_roots() const;

  /// (x, alpha_i^vee); integer for any lattice element.
  int simple_coroot_pairing(const Root& x, int i) const;
  /// s_i(x) = x - (x, alpha_i^vee) alpha_i
  Root simple_reflection(int i, const Root& x) const;

  Rat inner(const Root& x, const Root& y) const;
  /// (x, mu^vee) = 2(x,mu)/(mu,mu); requires mu in Delta.
  Rat coroot_pairing(const Root& x, const Root& mu) const;
  /// (rho, mu^vee); requires mu in Delta.
  Rat rho_pairing(const Root& mu) const;
  /// (x, theta^vee); integer on the root lattice.
  int theta_coroot_pairing(const Root& x) const;

  bool is_long(const Root& x) const;  // requires x in Delta
  /// mu <= nu iff nu - mu has nonnegative coordinates.
  bool leq(const Root& mu, const Root& nu) const;

  /// Bourbaki index of internal simple root i.
  int bourbaki_label(int i) const;
  /// Internal index of Bourbaki simple root i.
  int from_bourbaki(int i) const;

  /// Orthogonal coordinates for classical types (length rank for B/C/D,
  /// rank+1 for A); empty for E/F/G.
  std::vector<int> epsilon_coords(const Root& x) const;
  /// For type A only: the pair (i,j) with x = e_i - e_j, 1 <= i < j <= rank+1.
  std::optional<std::pair<int, int>> type_a_pair(const Root& x) const;

private:
  RootSystem() = default;
  void generate_positive_roots();
  void finish_tables();

  LieType type_{Family::A, 1};
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> half_norm_;  // (alpha_i, alpha_i)/2, normalized so (theta,theta)=2
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> positive_index_;
  Root theta_;
  Root two_rho_;
  std::vector<int> theta_coroot_row_;  // (alpha_i, theta^vee)
  std::vector<int> bourbaki_;
};

/// Throws std::logic_error when r is not an exact integer.
long long as_integer(const Rat& r);

int binomial(int n, int k);

}  // namespace abideal
