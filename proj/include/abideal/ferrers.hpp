#pragma once

#include "abideal/ideals.hpp"

#include <string>
#include <vector>

namespace abideal {

/// Abelian ideal of sl_n as a right-aligned Ferrers diagram. Row p occupies
/// the cells (p, q) for row_starts[p-1] <= q <= n; cell (p, q) is the root
/// e_p - e_q. Rows nest (row_starts weakly increasing) and the number of rows
/// plus the number of columns is at most n.
struct FerrersIdeal {
  int n = 0;
  std::vector<int> row_starts;

  int rows() const { return static_cast<int>(row_starts.size()); }
  int columns() const { return row_starts.empty() ? 0 : n - row_starts.front() + 1; }
  int cell_count() const;
  bool has_cell(int p, int q) const;

  bool operator==(const FerrersIdeal&) const = default;
};

/// Checks the diagram shape conditions above.
bool valid_ferrers(const FerrersIdeal& f);

/// Requires rs of type A with rank n-1.
FerrersIdeal from_ideal(const RootSystem& rs, const AbelianIdeal& ideal);

/// Inverse of from_ideal; the word comes from fill_word.
AbelianIdeal to_ideal(const RootSystem& rs, const FerrersIdeal& f);

/// A north-east hook: rows row_lo..row_hi, columns col_lo..col_hi, made of
/// the full top row plus the cells of the last column below it.
struct Hook {
  int row_lo, row_hi, col_lo, col_hi;

  int size() const { return (col_hi - col_lo + 1) + (row_hi - row_lo); }
  bool operator==(const Hook&) const = default;
};

/// Peels the diagram into hooks (top row + last column, repeatedly);
/// returned innermost (smallest) first. Hook cell sets partition the diagram.
std::vector<Hook> hook_decompose(const FerrersIdeal& f);

/// Minuscule word of the diagram: concatenation of one block per hook,
/// innermost hook leftmost. A hook translated so its corner sits at (1, n)
/// is the hook of a minimal ideal, whose block is
/// (s_{i-1} ... s_1)(s_j ... s_{n-1}) s_0.
WeylWord fill_word(const FerrersIdeal& f);

/// #Ab_{(i,j)} = binomial(n+i-j-1, i-1) for sl_n, 1 <= i < j <= n.
int fiber_size_formula(int n, int i, int j);

/// Text rendering of the filled diagram, one row per line, with the
/// per-cell reflection labels of the hook filling.
std::string render_filled(const FerrersIdeal& f);

}  // namespace abideal
