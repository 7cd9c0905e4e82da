#include "abideal/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace abideal {

namespace {

int classical_positive_count(LieType t) {
  switch (t.family) {
    case Family::A: return t.rank * (t.rank + 1) / 2;
    case Family::B:
    case Family::C: return t.rank * t.rank;
    case Family::D: return t.rank * (t.rank - 1);
    case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw std::logic_error("bad family");
}

void check_rank(LieType t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n == 6 || n == 7 || n == 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank for family " + t.name());
}

}  // namespace

LieType LieType::parse(std::string_view name) {
  if (name.size() < 2)
    throw std::invalid_argument("cannot parse Lie type '" + std::string(name) + "'");
  const char f = static_cast<char>(std::toupper(name[0]));
  if (f < 'A' || f > 'G')
    throw std::invalid_argument("unknown family in '" + std::string(name) + "'");
  int rank = 0;
  for (size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k])))
      throw std::invalid_argument("cannot parse rank in '" + std::string(name) + "'");
    rank = rank * 10 + (name[k] - '0');
  }
  LieType t{static_cast<Family>(f), rank};
  check_rank(t);
  return t;
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

bool Root::nonnegative() const {
  return std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (size_t k = 0; k < c.size(); ++k) r.c[k] += o.c[k];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (size_t k = 0; k < c.size(); ++k) r.c[k] -= o.c[k];
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& v : r.c) v = -v;
  return r;
}

bool root_less(const Root& a, const Root& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.c < b.c;
}

long long as_integer(const Rat& r) {
  if (r.denominator() != 1)
    throw std::logic_error("pairing expected to be an integer");
  return r.numerator();
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

RootSystem RootSystem::build(LieType type) {
  check_rank(type);
  RootSystem rs;
  rs.type_ = type;
  const int n = type.rank;

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rs.cartan_[i][i] = 2;
  rs.half_norm_.assign(n, Rat(1));
  rs.bourbaki_.resize(n);
  for (int i = 0; i < n; ++i) rs.bourbaki_[i] = i + 1;

  // 0-based bond helper: single edge between equal-length roots.
  auto bond = [&rs](int i, int j) { rs.cartan_[i][j] = rs.cartan_[j][i] = -1; };

  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      rs.cartan_[n - 2][n - 1] = -2;
      rs.cartan_[n - 1][n - 2] = -1;
      rs.half_norm_[n - 1] = Rat(1, 2);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      rs.cartan_[n - 2][n - 1] = -1;
      rs.cartan_[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) rs.half_norm_[i] = Rat(1, 2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      // branch node: attached to the middle of the chain
      bond(n == 6 ? 2 : n == 7 ? 3 : 4, n - 1);
      break;
    case Family::F:
      bond(0, 1);
      rs.cartan_[1][2] = -1;  // alpha_2 short, alpha_3 long
      rs.cartan_[2][1] = -2;
      bond(2, 3);
      rs.half_norm_[0] = rs.half_norm_[1] = Rat(1, 2);
      // Bourbaki order is the reverse of this one.
      for (int i = 0; i < 4; ++i) rs.bourbaki_[i] = 4 - i;
      break;
    case Family::G:
      rs.cartan_[0][1] = -1;  // alpha_1 short, alpha_2 long
      rs.cartan_[1][0] = -3;
      rs.half_norm_[0] = Rat(1, 3);
      break;
  }
  if (type.family == Family::E) {
    // Vinberg-Onishchik <-> Bourbaki label maps.
    if (n == 6) rs.bourbaki_ = {1, 3, 4, 5, 6, 2};
    if (n == 7) rs.bourbaki_ = {7, 6, 5, 4, 3, 1, 2};
    if (n == 8) rs.bourbaki_ = {8, 7, 6, 5, 4, 3, 1, 2};
  }

  // Form symmetry sanity: a_ij d_j = a_ji d_i.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan_[i][j] * rs.half_norm_[j] != rs.cartan_[j][i] * rs.half_norm_[i])
        throw std::logic_error("Cartan data inconsistent with root lengths");

  rs.generate_positive_roots();
  rs.finish_tables();
  return rs;
}

/*
  Positive roots by closure from the simple ones. For x of height h and a
  simple alpha_i, the alpha_i-string through x gives
      q = p - (x, alpha_i^vee),
  where p is the number of backward steps staying in Delta; x + alpha_i is a
  root iff q >= 1. Backward steps have smaller height, so they are already in
  the table.
*/
void RootSystem::generate_positive_roots() {
  const int n = rank();
  std::vector<Root> current;
  for (int i = 1; i <= n; ++i) {
    Root a = zero();
    a.c[i - 1] = 1;
    current.push_back(a);
    positive_.push_back(a);
    positive_index_[a.c] = 0;  // repaired after sorting
  }
  while (!current.empty()) {
    std::vector<Root> next;
    for (const Root& x : current) {
      for (int i = 1; i <= n; ++i) {
        int p = 0;
        Root y = x;
        for (;;) {
          y.c[i - 1] -= 1;
          if (y.c[i - 1] < 0 || !positive_index_.count(y.c)) break;
          ++p;
        }
        const int q = p - simple_coroot_pairing(x, i);
        if (q < 1) continue;
        Root cand = x;
        cand.c[i - 1] += 1;
        if (!positive_index_.count(cand.c)) {
          positive_index_[cand.c] = 0;
          positive_.push_back(cand);
          next.push_back(cand);
        }
      }
    }
    current = std::move(next);
  }

  std::sort(positive_.begin(), positive_.end(), root_less);
  for (size_t k = 0; k < positive_.size(); ++k) positive_index_[positive_[k].c] = static_cast<int>(k);

  if (static_cast<int>(positive_.size()) != classical_positive_count(type_))
    throw std::logic_error("positive root count mismatch for " + type_.name());
}

void RootSystem::finish_tables() {
  theta_ = positive_.back();  // maximal height comes last in the sorted list
  for (const Root& g : positive_)
    if (!leq(g, theta_))
      throw std::logic_error("highest root is not the maximum of the root poset");
  if (inner(theta_, theta_) != Rat(2))
    throw std::logic_error("normalization (theta,theta)=2 violated");

  two_rho_ = zero();
  for (const Root& g : positive_) two_rho_ = two_rho_ + g;

  theta_coroot_row_.resize(rank());
  for (int i = 1; i <= rank(); ++i) {
    Root a = simple_root(i);
    theta_coroot_row_[i - 1] = static_cast<int>(as_integer(coroot_pairing(a, theta_)));
  }
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple root index out of range");
  Root a = zero();
  a.c[i - 1] = 1;
  return a;
}

bool RootSystem::is_positive_root(const Root& x) const { return positive_index_.count(x.c) > 0; }

bool RootSystem::is_root(const Root& x) const {
  if (is_positive_root(x)) return true;
  return is_positive_root(-x);
}

int RootSystem::positive_index(const Root& x) const {
  auto it = positive_index_.find(x.c);
  return it == positive_index_.end() ? -1 : it->second;
}

std::vector<Root> RootSystem::long_positive_roots() const {
  std::vector<Root> out;
  for (const Root& g : positive_)
    if (is_long(g)) out.push_back(g);
  return out;
}

int RootSystem::simple_coroot_pairing(const Root& x, int i) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += x.c[k] * cartan_[k][i - 1];
  return s;
}

Root RootSystem::simple_reflection(int i, const Root& x) const {
  const int m = simple_coroot_pairing(x, i);
  Root r = x;
  r.c[i - 1] -= m;
  return r;
}

Rat RootSystem::inner(const Root& x, const Root& y) const {
  Rat s(0);
  for (int i = 0; i < rank(); ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (y.c[j] == 0) continue;
      s += Rat(x.c[i] * y.c[j] * cartan_[i][j]) * half_norm_[j];
    }
  }
  return s;
}

Rat RootSystem::coroot_pairing(const Root& x, const Root& mu) const {
  if (!is_root(mu)) throw std::invalid_argument("coroot_pairing: mu is not a root");
  return Rat(2) * inner(x, mu) / inner(mu, mu);
}

Rat RootSystem::rho_pairing(const Root& mu) const {
  if (!is_root(mu)) throw std::invalid_argument("rho_pairing: mu is not a root");
  return coroot_pairing(two_rho_, mu) / Rat(2);
}

int RootSystem::theta_coroot_pairing(const Root& x) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += x.c[k] * theta_coroot_row_[k];
  return s;
}

bool RootSystem::is_long(const Root& x) const {
  if (!is_root(x)) throw std::invalid_argument("is_long: not a root");
  return inner(x, x) == Rat(2);
}

bool RootSystem::leq(const Root& mu, const Root& nu) const {
  for (int k = 0; k < rank(); ++k)
    if (nu.c[k] - mu.c[k] < 0) return false;
  return true;
}

int RootSystem::bourbaki_label(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple root index out of range");
  return bourbaki_[i - 1];
}

int RootSystem::from_bourbaki(int i) const {
  for (int k = 1; k <= rank(); ++k)
    if (bourbaki_[k - 1] == i) return k;
  throw std::invalid_argument("bad Bourbaki index");
}

std::vector<int> RootSystem::epsilon_coords(const Root& x) const {
  const int n = rank();
  std::vector<int> e;
  switch (type_.family) {
    case Family::A: {
      // alpha_i = e_i - e_{i+1} over n+1 coordinates
      e.assign(n + 1, 0);
      for (int i = 0; i < n; ++i) {
        e[i] += x.c[i];
        e[i + 1] -= x.c[i];
      }
      break;
    }
    case Family::B: {
      e.assign(n, 0);
      for (int i = 0; i + 1 < n; ++i) {
        e[i] += x.c[i];
        e[i + 1] -= x.c[i];
      }
      e[n - 1] += x.c[n - 1];
      break;
    }
    case Family::C: {
      e.assign(n, 0);
      for (int i = 0; i + 1 < n; ++i) {
        e[i] += x.c[i];
        e[i + 1] -= x.c[i];
      }
      e[n - 1] += 2 * x.c[n - 1];
      break;
    }
    case Family::D: {
      e.assign(n, 0);
      for (int i = 0; i + 1 < n; ++i) {
        e[i] += x.c[i];
        e[i + 1] -= x.c[i];
      }
      e[n - 2] += x.c[n - 1];
      e[n - 1] += x.c[n - 1];
      break;
    }
    default: break;
  }
  return e;
}

std::optional<std::pair<int, int>> RootSystem::type_a_pair(const Root& x) const {
  if (type_.family != Family::A) return std::nullopt;
  auto e = epsilon_coords(x);
  int i = -1, j = -1;
  for (int k = 0; k < static_cast<int>(e.size()); ++k) {
    if (e[k] == 1 && i < 0) i = k + 1;
    else if (e[k] == -1 && j < 0) j = k + 1;
    else if (e[k] != 0) return std::nullopt;
  }
  if (i < 0 || j < 0 || i >= j) return std::nullopt;
  return std::make_pair(i, j);
}

}  // namespace abideal
