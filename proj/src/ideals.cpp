#include "abideal/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace abideal {

namespace {

Root rootlet_of_word(const RootSystem& rs, const WeylWord& w) {
  AffineVector v = apply(rs, w, affine_simple_root(rs, 0));
  v.level += 1;
  if (v.level != 0 || !rs.is_positive_root(v.finite) || !rs.is_long(v.finite))
    throw std::logic_error("rootlet is not a long positive root");
  return v.finite;
}

std::vector<std::vector<int>> roots_key(const std::vector<Root>& roots) {
  std::vector<std::vector<int>> key;
  key.reserve(roots.size());
  for (const Root& g : roots) key.push_back(g.c);
  return key;
}

}  // namespace

bool AbelianIdeal::contains(const Root& g) const {
  return std::find(roots.begin(), roots.end(), g) != roots.end();
}

bool AbelianIdeal::subset_of(const AbelianIdeal& other) const {
  return std::all_of(roots.begin(), roots.end(),
                     [&other](const Root& g) { return other.contains(g); });
}

bool ideal_roots_less(const std::vector<Root>& a, const std::vector<Root>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), root_less);
}

bool is_abelian_subalgebra(const RootSystem& rs, const std::vector<Root>& roots) {
  for (const Root& g : roots)
    if (!rs.is_positive_root(g))
      throw std::invalid_argument("ideal member is not a positive root");
  for (size_t a = 0; a < roots.size(); ++a)
    for (size_t b = a; b < roots.size(); ++b)
      if (rs.is_root(roots[a] + roots[b])) return false;
  return true;
}

bool is_abelian_ideal(const RootSystem& rs, const std::vector<Root>& roots) {
  if (!is_abelian_subalgebra(rs, roots)) return false;
  auto member = [&roots](const Root& g) {
    return std::find(roots.begin(), roots.end(), g) != roots.end();
  };
  for (const Root& g : roots)
    for (const Root& nu : rs.positive_roots()) {
      const Root sum = g + nu;
      if (rs.is_root(sum) && !member(sum)) return false;
    }
  return true;
}

std::vector<Root> generators_definitional(const RootSystem& rs, const std::vector<Root>& roots) {
  auto member = [&roots](const Root& g) {
    return std::find(roots.begin(), roots.end(), g) != roots.end();
  };
  std::vector<Root> gens;
  for (const Root& g : roots) {
    bool minimal = true;
    for (const Root& a : rs.positive_roots())
      if (member(g - a)) {
        minimal = false;
        break;
      }
    if (minimal) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end(), root_less);
  return gens;
}

std::vector<Root> generators_by_word(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<Root> gens;
  for (const Root& g : ideal.roots) {
    const AffineVector img = apply(rs, ideal.word, AffineVector{-g, 1});
    // w(delta-g) in -Pi^ means -alpha_i for some i = 0..rank.
    const AffineVector neg{-img.finite, -img.level};
    bool simple = false;
    for (int i = 0; i <= rs.rank() && !simple; ++i)
      simple = neg == affine_simple_root(rs, i);
    if (simple) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end(), root_less);
  return gens;
}

std::vector<Root> generators(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<Root> gens = generators_definitional(rs, ideal.roots);
  if (gens != generators_by_word(rs, ideal))
    throw std::logic_error("generator word criterion disagrees with the definition");
  return gens;
}

std::vector<Extension> elementary_extensions(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<Extension> exts;
  for (const Root& g : rs.positive_roots()) {
    if (ideal.contains(g)) continue;
    const AffineVector img = apply(rs, ideal.word, AffineVector{-g, 1});
    for (int i = 0; i <= rs.rank(); ++i)
      if (img == affine_simple_root(rs, i)) {
        exts.push_back(Extension{g, i});
        break;
      }
  }
  // positive_roots() is already sorted by root_less, so exts is too.
  return exts;
}

AbelianIdeal extend(const RootSystem& rs, const AbelianIdeal& ideal, const Extension& ext) {
  AbelianIdeal out;
  out.roots = ideal.roots;
  out.roots.insert(std::upper_bound(out.roots.begin(), out.roots.end(), ext.gamma, root_less),
                   ext.gamma);
  out.word = ideal.word.prepended(ext.letter);
  out.rootlet = rootlet_of_word(rs, out.word);
  return out;
}

std::optional<AbelianIdeal> ideal_from_word(const RootSystem& rs, const WeylWord& w) {
  auto roots = minuscule_roots(rs, w);
  if (!roots) return std::nullopt;
  if (!is_abelian_ideal(rs, *roots))
    throw std::logic_error("minuscule inversion set is not an Abelian ideal");
  AbelianIdeal ideal;
  ideal.roots = *roots;
  std::sort(ideal.roots.begin(), ideal.roots.end(), root_less);
  ideal.word = w;
  if (!ideal.roots.empty()) ideal.rootlet = rootlet_of_word(rs, w);
  return ideal;
}

int IdealPoset::index_of(const std::vector<Root>& roots) const {
  std::vector<Root> sorted = roots;
  std::sort(sorted.begin(), sorted.end(), root_less);
  auto it = index_.find(roots_key(sorted));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> IdealPoset::covers_of(int index) const {
  std::vector<int> out;
  for (const CoverEdge& e : edges)
    if (e.from == index) out.push_back(e.to);
  return out;
}

IdealPoset enumerate_ideals(const RootSystem& rs) {
  IdealPoset poset;

  AbelianIdeal empty;
  poset.ideals.push_back(empty);
  poset.index_[{}] = 0;

  struct PendingEdge {
    int from;
    size_t to_pending;
    int letter;
    Root added;
  };

  std::vector<int> level{0};
  while (!level.empty()) {
    std::vector<AbelianIdeal> found;
    std::map<std::vector<std::vector<int>>, size_t> found_index;
    std::vector<PendingEdge> pending;

    for (int idx : level) {
      const AbelianIdeal ideal = poset.ideals[idx];  // copy: vector may reallocate
      for (const Extension& ext : elementary_extensions(rs, ideal)) {
        AbelianIdeal next = extend(rs, ideal, ext);
        const auto key = roots_key(next.roots);
        auto it = found_index.find(key);
        size_t pos;
        if (it == found_index.end()) {
          pos = found.size();
          found_index[key] = pos;
          found.push_back(std::move(next));
        } else {
          pos = it->second;
          // Same root set reached along two words: they must agree in the group.
          if (canonical_element(rs, found[pos].word) != canonical_element(rs, next.word))
            throw std::logic_error("duplicate ideal with distinct group elements");
        }
        pending.push_back(PendingEdge{idx, pos, ext.letter, ext.gamma});
      }
    }

    // Deterministic indices: key order within the level.
    std::vector<size_t> order(found.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&found](size_t a, size_t b) {
      return ideal_roots_less(found[a].roots, found[b].roots);
    });
    std::vector<int> new_level;
    std::vector<int> final_index(found.size());
    for (size_t k = 0; k < order.size(); ++k) {
      const int idx = static_cast<int>(poset.ideals.size());
      final_index[order[k]] = idx;
      poset.index_[roots_key(found[order[k]].roots)] = idx;
      poset.ideals.push_back(found[order[k]]);
      new_level.push_back(idx);
    }
    for (const PendingEdge& e : pending)
      poset.edges.push_back(CoverEdge{e.from, final_index[e.to_pending], e.letter, e.added});
    level = std::move(new_level);
  }

  std::sort(poset.edges.begin(), poset.edges.end(), [](const CoverEdge& a, const CoverEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });

  const size_t expected = size_t{1} << rs.rank();
  if (poset.ideals.size() != expected)
    throw std::logic_error("Abelian ideal count differs from 2^rank for " + rs.lie_type().name());
  return poset;
}

std::set<std::vector<std::vector<int>>> brute_force_enumerate(const RootSystem& rs,
                                                              size_t max_positive) {
  const size_t m = rs.positive_roots().size();
  if (m > max_positive)
    throw std::invalid_argument("system too large for exhaustive search");

  const auto& pos = rs.positive_roots();
  // sum_index[a][b]: index of pos[a]+pos[b] among positive roots, or -1.
  std::vector<std::vector<int>> sum_index(m, std::vector<int>(m, -1));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) sum_index[a][b] = rs.positive_index(pos[a] + pos[b]);

  std::set<std::vector<std::vector<int>>> out;
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    bool ok = true;
    for (size_t a = 0; a < m && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (size_t b = a; b < m && ok; ++b)
        if ((mask >> b & 1) && sum_index[a][b] >= 0) ok = false;  // condition (a)
      for (size_t b = 0; b < m && ok; ++b) {
        const int s = sum_index[a][b];
        if (s >= 0 && !(mask >> s & 1)) ok = false;  // condition (b)
      }
    }
    if (!ok) continue;
    std::vector<Root> roots;
    for (size_t a = 0; a < m; ++a)
      if (mask >> a & 1) roots.push_back(pos[a]);
    out.insert(roots_key(roots));
  }
  return out;
}

HasseDiagram hasse(const RootSystem& rs, const IdealPoset& poset) {
  HasseDiagram d;
  for (size_t k = 0; k < poset.ideals.size(); ++k) {
    const AbelianIdeal& ideal = poset.ideals[k];
    HasseNode node;
    node.index = static_cast<int>(k);
    node.cardinality = static_cast<int>(ideal.size());
    if (!ideal.roots.empty()) node.generator_set = generators(rs, ideal);
    node.rootlet = ideal.rootlet;
    d.nodes.push_back(std::move(node));
  }
  for (const CoverEdge& e : poset.edges) d.edges.emplace_back(e.from, e.to);
  return d;
}

}  // namespace abideal
