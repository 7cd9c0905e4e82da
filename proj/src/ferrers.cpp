#include "abideal/ferrers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abideal {

namespace {

void require_type_a(const RootSystem& rs) {
  if (rs.lie_type().family != Family::A)
    throw std::invalid_argument("Ferrers diagrams require type A");
}

Root cell_root(int rank, int p, int q) {
  // cell (p,q) <-> e_p - e_q = alpha_p + ... + alpha_{q-1}
  Root g(std::vector<int>(rank, 0));
  for (int k = p; k < q; ++k) g.c[k - 1] = 1;
  return g;
}

}  // namespace

int FerrersIdeal::cell_count() const {
  int total = 0;
  for (int j : row_starts) total += n - j + 1;
  return total;
}

bool FerrersIdeal::has_cell(int p, int q) const {
  if (p < 1 || p > rows() || q > n) return false;
  return q >= row_starts[p - 1];
}

bool valid_ferrers(const FerrersIdeal& f) {
  if (f.n < 2) return false;
  int prev = 0;
  for (int p = 1; p <= f.rows(); ++p) {
    const int j = f.row_starts[p - 1];
    if (j <= p || j > f.n) return false;  // cells sit strictly above the diagonal
    if (j < prev) return false;           // nested rows
    prev = j;
  }
  return f.rows() + f.columns() <= f.n;
}

FerrersIdeal from_ideal(const RootSystem& rs, const AbelianIdeal& ideal) {
  require_type_a(rs);
  FerrersIdeal f;
  f.n = rs.rank() + 1;
  std::map<int, int> start;  // row -> leftmost column
  for (const Root& g : ideal.roots) {
    const auto pq = rs.type_a_pair(g);
    if (!pq) throw std::logic_error("ideal member is not a type A root");
    auto [p, q] = *pq;
    auto it = start.find(p);
    if (it == start.end() || q < it->second) start[p] = q;
  }
  for (int p = 1; p <= static_cast<int>(start.size()); ++p) {
    if (!start.count(p)) throw std::logic_error("ideal rows are not consecutive");
    f.row_starts.push_back(start.at(p));
  }
  if (!valid_ferrers(f) && !ideal.roots.empty())
    throw std::logic_error("ideal does not form a right-aligned nested diagram");
  // Right-alignment: every cell east of a member must be a member.
  for (int p = 1; p <= f.rows(); ++p)
    for (int q = f.row_starts[p - 1]; q <= f.n; ++q)
      if (!ideal.contains(cell_root(rs.rank(), p, q)))
        throw std::logic_error("ideal is not right-aligned");
  return f;
}

AbelianIdeal to_ideal(const RootSystem& rs, const FerrersIdeal& f) {
  require_type_a(rs);
  if (f.n != rs.rank() + 1) throw std::invalid_argument("diagram size does not match the rank");
  if (!f.row_starts.empty() && !valid_ferrers(f))
    throw std::invalid_argument("invalid Ferrers diagram");

  std::vector<Root> roots;
  for (int p = 1; p <= f.rows(); ++p)
    for (int q = f.row_starts[p - 1]; q <= f.n; ++q) roots.push_back(cell_root(rs.rank(), p, q));
  std::sort(roots.begin(), roots.end(), root_less);

  const WeylWord w = fill_word(f);
  auto ideal = ideal_from_word(rs, w);
  if (!ideal || ideal->roots != roots)
    throw std::logic_error("hook filling word does not realize the diagram");
  return *ideal;
}

std::vector<Hook> hook_decompose(const FerrersIdeal& f) {
  std::vector<Hook> hooks;
  std::vector<std::pair<int, int>> live;  // (row, start)
  for (int p = 1; p <= f.rows(); ++p) live.emplace_back(p, f.row_starts[p - 1]);
  int last_col = f.n;
  while (true) {
    while (!live.empty() && live.back().second > last_col) live.pop_back();
    if (live.empty()) break;
    const auto [top, start] = live.front();
    hooks.push_back(Hook{top, live.back().first, start, last_col});
    live.erase(live.begin());
    --last_col;
  }
  std::reverse(hooks.begin(), hooks.end());
  return hooks;
}

WeylWord fill_word(const FerrersIdeal& f) {
  WeylWord w;
  for (const Hook& h : hook_decompose(f)) {
    // Translate the hook so its corner sits at (1, n).
    const int i = h.row_hi - h.row_lo + 1;
    const int j = h.col_lo + (f.n - h.col_hi);
    for (int k = i - 1; k >= 1; --k) w.letters.push_back(k);
    for (int k = j; k <= f.n - 1; ++k) w.letters.push_back(k);
    w.letters.push_back(0);
  }
  return w;
}

int fiber_size_formula(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("fiber_size_formula requires 1 <= i < j <= n");
  return binomial(n + i - j - 1, i - 1);
}

std::string render_filled(const FerrersIdeal& f) {
  std::vector<std::vector<std::string>> label(f.rows() + 1,
                                              std::vector<std::string>(f.n + 1));
  for (const Hook& h : hook_decompose(f)) {
    const int shift = f.n - h.col_hi;
    label[h.row_lo][h.col_hi] = "s0";
    for (int q = h.col_lo; q < h.col_hi; ++q)
      label[h.row_lo][q] = "s" + std::to_string(q + shift);
    for (int p = h.row_lo + 1; p <= h.row_hi; ++p)
      label[p][h.col_hi] = "s" + std::to_string(p - h.row_lo);
  }
  size_t width = 1;
  for (const auto& row : label)
    for (const auto& s : row) width = std::max(width, s.size());
  std::string out;
  for (int p = 1; p <= f.rows(); ++p) {
    std::string line;
    for (int q = 1; q <= f.n; ++q) {
      std::string cell = f.has_cell(p, q) ? label[p][q] : ".";
      cell.resize(width, ' ');
      line += cell;
      if (q < f.n) line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace abideal
