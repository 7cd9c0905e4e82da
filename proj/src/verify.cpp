#include "abideal/verify.hpp"

#include "abideal/ferrers.hpp"
#include "abideal/io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace abideal {

namespace {

bool subset(const std::vector<Root>& small, const std::vector<Root>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(), root_less);
}

int long_positive_count_classical(LieType t) {
  switch (t.family) {
    case Family::A: return t.rank * (t.rank + 1) / 2;
    case Family::B: return t.rank * (t.rank - 1);
    case Family::C: return t.rank;
    case Family::D: return t.rank * (t.rank - 1);
    case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case Family::F: return 12;
    case Family::G: return 3;
  }
  return -1;
}

// --- reference data -------------------------------------------------------

struct GoldenRow {
  std::vector<std::string> roots;  // the full root set of the ideal
  std::string rootlet;
  std::vector<std::string> words;  // all printed forms; must agree as elements
};

const std::vector<GoldenRow>& f4_golden() {
  auto chain4 = [](std::vector<std::string> extra) {
    std::vector<std::string> v = {"2432", "2431", "2421", "2321"};
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  };
  static const std::vector<GoldenRow> rows = {
      {{"2432"}, "2432", {"s0"}},
      {{"2432", "2431"}, "2431", {"s4 s0"}},
      {{"2432", "2431", "2421"}, "2421", {"s3 s4 s0"}},
      {chain4({}), "2221", {"s2 s3 s4 s0"}},
      {chain4({"2221"}), "2211", {"s3 s2 s3 s4 s0"}},  // I'5
      {chain4({"1321"}), "0221", {"s1 s2 s3 s4 s0"}},  // I''5
      {chain4({"2221", "2211"}), "2210", {"s4 s3 s2 s3 s4 s0"}},  // I'6
      {chain4({"2221", "1321"}), "0211", {"s1 s3 s2 s3 s4 s0"}},  // I''6
      {chain4({"2221", "2211", "2210"}), "2210", {"s0 s4 s3 s2 s3 s4 s0"}},  // I'7
      {chain4({"2221", "2211", "1321"}),
       "0210",
       {"s1 s4 s3 s2 s3 s4 s0", "s4 s1 s3 s2 s3 s4 s0"}},  // I''7
      {chain4({"2221", "1321", "1221"}), "0011", {"s2 s1 s3 s2 s3 s4 s0"}},  // I'''7
      {chain4({"2221", "2211", "2210", "1321"}),
       "0210",
       {"s1 s0 s4 s3 s2 s3 s4 s0", "s0 s1 s4 s3 s2 s3 s4 s0"}},  // I'8
      {chain4({"2221", "2211", "1321", "1221"}),
       "0010",
       {"s2 s1 s4 s3 s2 s3 s4 s0", "s4 s2 s1 s3 s2 s3 s4 s0"}},  // I''8
      {chain4({"2221", "1321", "1221", "0221"}), "0001", {"s3 s2 s1 s3 s2 s3 s4 s0"}},  // I'''8
      {chain4({"2221", "2211", "2210", "1321", "1221"}),
       "0010",
       {"s2 s1 s0 s4 s3 s2 s3 s4 s0", "s0 s2 s1 s4 s3 s2 s3 s4 s0"}},  // I9
  };
  return rows;
}

const std::vector<GoldenRow>& g2_golden() {
  static const std::vector<GoldenRow> rows = {
      {{"32"}, "32", {"s0"}},
      {{"32", "31"}, "31", {"s2 s0"}},
      {{"32", "31", "21"}, "01", {"s1 s2 s0"}},
  };
  return rows;
}

std::map<size_t, size_t> e_histogram_expected(int rank) {
  if (rank == 6) return {{1, 21}, {2, 9}, {3, 4}, {6, 2}};
  if (rank == 7) return {{1, 33}, {2, 15}, {3, 8}, {4, 4}, {6, 2}, {12, 1}};
  return {{1, 57}, {2, 27}, {3, 16}, {4, 10}, {5, 6}, {6, 3}, {8, 1}};
}

// Class membership of a positive root by fiber size, E series.
std::vector<size_t> e_predicted_classes(const RootSystem& rs, const Root& mu) {
  const auto& c = mu.c;  // 0-based
  const int n = rs.rank();
  auto is = [&](std::initializer_list<std::vector<int>> set) {
    for (const auto& v : set)
      if (v == c) return true;
    return false;
  };
  std::vector<size_t> classes;
  auto simple_sum = [&](std::initializer_list<int> idx) {
    std::vector<int> v(n, 0);
    for (int i : idx) v[i - 1] = 1;
    return v;
  };
  if (n == 6) {
    if (c[5] > 0) classes.push_back(1);
    if (c[5] == 0 && c[2] > 0) classes.push_back(2);
    if (is({simple_sum({1, 2}), simple_sum({2}), simple_sum({4, 5}), simple_sum({4})}))
      classes.push_back(3);
    if (is({simple_sum({1}), simple_sum({5})})) classes.push_back(6);
  } else if (n == 7) {
    if (c[5] > 0) classes.push_back(1);
    if (c[5] == 0 && c[4] > 0) classes.push_back(2);
    if (c[5] == 0 && c[4] == 0 && c[3] > 0) classes.push_back(3);
    if (c[5] == 0 && c[4] == 0 && c[3] == 0 && (c[6] > 0 || c[2] > 0)) classes.push_back(4);
    if (is({simple_sum({2}), simple_sum({1, 2})})) classes.push_back(6);
    if (is({simple_sum({1})})) classes.push_back(12);
  } else {
    if (c[0] > 0) classes.push_back(1);
    if (c[0] == 0 && c[1] > 0) classes.push_back(2);
    if (c[0] == 0 && c[1] == 0 && c[2] > 0) classes.push_back(3);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] > 0) classes.push_back(4);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0 && c[4] > 0) classes.push_back(5);
    if (is({simple_sum({8}), simple_sum({6}), simple_sum({6, 7})})) classes.push_back(6);
    if (is({simple_sum({7})})) classes.push_back(8);
  }
  return classes;
}

// --- battery pieces -------------------------------------------------------

class Battery {
 public:
  explicit Battery(LieType type) : type_(type) {}

  TypeVerification run() {
    TypeVerification tv;
    tv.type = type_;
    try {
      rs_ = RootSystem::build(type_);
    } catch (const std::exception& e) {
      tv.checks.push_back({"build", false, e.what()});
      return tv;
    }
    tv.checks.push_back({"build", true, ""});

    add(tv, "long_root_count", [&] {
      return static_cast<int>(rs_->long_positive_roots().size()) ==
             long_positive_count_classical(type_);
    });
    add(tv, "reflection_closure", [&] {
      for (const Root& g : rs_->positive_roots())
        for (int i = 1; i <= rs_->rank(); ++i)
          if (!rs_->is_root(rs_->simple_reflection(i, g))) return false;
      return true;
    });
    add(tv, "coroot_pairing_bound", [&] {
      for (const Root& mu : rs_->long_positive_roots())
        for (const Root& nu : rs_->positive_roots()) {
          const long long p = as_integer(rs_->coroot_pairing(nu, mu));
          if (p > 2 || p < -2) return false;
          if ((p == 2 || p == -2) && !(nu == mu)) return false;
        }
      return true;
    });
    add(tv, "theta_poset_maximum", [&] {
      for (const Root& g : rs_->positive_roots())
        if (!rs_->leq(g, rs_->highest_root())) return false;
      return true;
    });
    add(tv, "heisenberg_count", [&] {
      heisenberg_roots(*rs_);  // throws when the counting identity fails
      return true;
    });

    try {
      poset_ = enumerate_ideals(*rs_);
      tv.checks.push_back({"peterson_count", true, ""});
    } catch (const std::exception& e) {
      tv.checks.push_back({"peterson_count", false, e.what()});
      return tv;
    }

    if (rs_->positive_roots().size() <= 16) run_oracle(tv);

    run_poset_checks(tv);
    run_fiber_checks(tv);
    run_family_checks(tv);
    return tv;
  }

 private:
  void add(TypeVerification& tv, const std::string& name, const std::function<bool()>& f) {
    bool pass = false;
    std::string detail;
    try {
      pass = f();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    tv.checks.push_back({name, pass, pass ? "" : detail});
  }

  void run_oracle(TypeVerification& tv) {
    std::set<std::vector<std::vector<int>>> oracle;
    try {
      oracle = brute_force_enumerate(*rs_);
    } catch (const std::exception& e) {
      tv.checks.push_back({"oracle_equivalence", false, e.what()});
      return;
    }
    std::set<std::vector<std::vector<int>>> enumerated;
    for (const AbelianIdeal& ideal : poset_->ideals) {
      std::vector<std::vector<int>> key;
      for (const Root& g : ideal.roots) key.push_back(g.c);
      enumerated.insert(key);
    }
    tv.checks.push_back({"oracle_equivalence", oracle == enumerated, ""});

    // Independent saturation: a maximal element of Delta+ \ I that stays
    // Abelian against I extends I to another member of the oracle set.
    add(tv, "oracle_saturation", [&] {
      for (const auto& key : oracle) {
        std::vector<Root> roots;
        for (const auto& c : key) roots.push_back(Root(c));
        auto member = [&roots](const Root& g) {
          return std::find(roots.begin(), roots.end(), g) != roots.end();
        };
        for (const Root& kappa : rs_->positive_roots()) {
          if (member(kappa)) continue;
          bool maximal = true;
          for (const Root& nu : rs_->positive_roots())
            if (rs_->is_root(kappa + nu) && !member(kappa + nu)) maximal = false;
          if (!maximal) continue;
          bool abelian = true;
          for (const Root& g : roots)
            if (rs_->is_root(kappa + g)) abelian = false;
          if (!abelian) continue;
          auto extended = key;
          extended.push_back(kappa.c);
          std::sort(extended.begin(), extended.end(),
                    [](const std::vector<int>& a, const std::vector<int>& b) {
                      return root_less(Root(a), Root(b));
                    });
          if (!oracle.count(extended)) return false;
        }
      }
      return true;
    });
  }

  void run_poset_checks(TypeVerification& tv) {
    const IdealPoset& poset = *poset_;

    add(tv, "word_consistency", [&] {
      for (const AbelianIdeal& ideal : poset.ideals) {
        const auto roots = minuscule_roots(*rs_, ideal.word);
        if (!roots) return false;
        auto sorted = *roots;
        std::sort(sorted.begin(), sorted.end(), root_less);
        if (sorted != ideal.roots) return false;
        if (ideal.word.size() != ideal.roots.size()) return false;  // reduced words
      }
      return true;
    });
    add(tv, "minuscule_simple_images", [&] {
      for (const AbelianIdeal& ideal : poset.ideals)
        for (int i = 1; i <= rs_->rank(); ++i)
          if (!affine_positive(*rs_, apply(*rs_, ideal.word, affine_simple_root(*rs_, i))))
            return false;
      return true;
    });
    add(tv, "generator_word_criterion", [&] {
      for (const AbelianIdeal& ideal : poset.ideals)
        if (!ideal.roots.empty() &&
            generators_definitional(*rs_, ideal.roots) != generators_by_word(*rs_, ideal))
          return false;
      return true;
    });
    add(tv, "generator_duality", [&] {
      for (const AbelianIdeal& ideal : poset.ideals) {
        if (ideal.roots.empty()) continue;
        const auto gens = generators_definitional(*rs_, ideal.roots);
        for (const Root& g : ideal.roots) {
          std::vector<Root> removed;
          for (const Root& x : ideal.roots)
            if (!(x == g)) removed.push_back(x);
          const bool still = is_abelian_ideal(*rs_, removed);
          const bool is_gen = std::find(gens.begin(), gens.end(), g) != gens.end();
          if (still != is_gen) return false;
        }
      }
      return true;
    });
    add(tv, "ranked_saturation", [&] {
      for (size_t a = 0; a < poset.ideals.size(); ++a)
        for (size_t b = 0; b < poset.ideals.size(); ++b) {
          if (a == b || poset.ideals[a].size() + 1 > poset.ideals[b].size()) continue;
          if (!subset(poset.ideals[a].roots, poset.ideals[b].roots)) continue;
          bool step = false;
          for (const Root& g : poset.ideals[b].roots) {
            if (poset.ideals[a].contains(g)) continue;
            auto extended = poset.ideals[a].roots;
            extended.insert(
                std::upper_bound(extended.begin(), extended.end(), g, root_less), g);
            if (poset.contains_roots(extended)) {
              step = true;
              break;
            }
          }
          if (!step) return false;
        }
      return true;
    });
    add(tv, "intersection_closed", [&] {
      for (size_t a = 0; a < poset.ideals.size(); ++a)
        for (size_t b = a + 1; b < poset.ideals.size(); ++b) {
          std::vector<Root> meet;
          for (const Root& g : poset.ideals[a].roots)
            if (poset.ideals[b].contains(g)) meet.push_back(g);
          if (!poset.contains_roots(meet)) return false;
        }
      return true;
    });

    for (const NamedCheck& c : classify_min_ideals(*rs_, poset)) tv.checks.push_back(c);
    add(tv, "min_poset_antiisomorphic", [&] { return min_ideal_order_check(*rs_); });
    for (const NamedCheck& c : not_max_checks(*rs_, poset)) tv.checks.push_back(c);
    for (const NamedCheck& c : elem_ext_rootlet_law(*rs_, poset)) tv.checks.push_back(c);
    for (const NamedCheck& c : compose_law_checks(*rs_, poset)) tv.checks.push_back(c);
  }

  void run_fiber_checks(TypeVerification& tv) {
    fa_ = analyze_fibers(*rs_, *poset_);
    for (const NamedCheck& c : fa_->global) tv.checks.push_back(c);
    // Conjunction of each per-fiber check across all fibers.
    std::map<std::string, NamedCheck> merged;
    for (const FiberReport& r : fa_->reports)
      for (const NamedCheck& c : r.checks) {
        auto it = merged.find(c.name);
        if (it == merged.end())
          merged[c.name] = c;
        else if (it->second.pass && !c.pass)
          it->second = c;
      }
    for (const auto& [name, check] : merged) tv.checks.push_back(check);
  }

  void run_family_checks(TypeVerification& tv) {
    switch (type_.family) {
      case Family::A: run_type_a(tv); break;
      case Family::B:
      case Family::D: run_type_bd(tv); break;
      case Family::C: run_type_c(tv); break;
      case Family::E: run_type_e(tv); break;
      case Family::F: run_golden(tv, "f4_table", f4_golden()); run_f4_extras(tv); break;
      case Family::G: run_golden(tv, "g2_table", g2_golden()); break;
    }
  }

  void run_type_a(TypeVerification& tv) {
    const int n = rs_->rank() + 1;  // sl_n
    add(tv, "a_fiber_binomial", [&] {
      for (const FiberReport& r : fa_->reports) {
        const auto pq = rs_->type_a_pair(r.mu);
        if (!pq) return false;
        if (static_cast<int>(r.ideals.size()) != fiber_size_formula(n, pq->first, pq->second))
          return false;
      }
      return true;
    });
    add(tv, "a_roundtrip", [&] {
      for (const AbelianIdeal& ideal : poset_->ideals) {
        if (ideal.roots.empty()) continue;
        const FerrersIdeal f = from_ideal(*rs_, ideal);
        if (to_ideal(*rs_, f).roots != ideal.roots) return false;
      }
      return true;
    });
    add(tv, "a_fill_word_agreement", [&] {
      for (const AbelianIdeal& ideal : poset_->ideals) {
        if (ideal.roots.empty()) continue;
        const WeylWord w = fill_word(from_ideal(*rs_, ideal));
        if (canonical_element(*rs_, w) != canonical_element(*rs_, ideal.word)) return false;
      }
      return true;
    });
    add(tv, "a_sw_corners", [&] {
      for (const AbelianIdeal& ideal : poset_->ideals) {
        if (ideal.roots.empty()) continue;
        const FerrersIdeal f = from_ideal(*rs_, ideal);
        std::vector<Root> corners;
        for (int p = 1; p <= f.rows(); ++p) {
          if (p < f.rows() && f.row_starts[p] == f.row_starts[p - 1]) continue;
          Root g = rs_->zero();
          for (int k = p; k < f.row_starts[p - 1]; ++k) g.c[k - 1] = 1;
          corners.push_back(g);
        }
        std::sort(corners.begin(), corners.end(), root_less);
        if (corners != generators_definitional(*rs_, ideal.roots)) return false;
      }
      return true;
    });
  }

  void run_type_bd(TypeVerification& tv) {
    const int n = rs_->rank();
    add(tv, "bd_fiber_sizes", [&] {
      for (const FiberReport& r : fa_->reports) {
        const auto e = rs_->epsilon_coords(r.mu);
        int i = 0, j = 0;
        for (int k = 1; k <= n; ++k)
          if (e[k - 1] != 0) {
            if (i == 0) i = k;
            else j = k;
          }
        if (i == 0 || j == 0) return false;  // long roots are e_i ± e_j
        size_t expected;
        if (r.mu == rs_->highest_root()) expected = 1;
        else if (i <= 2 && j >= 3) expected = 1;
        else if (i == 1 && j == 2) expected = 2;  // e1 - e2
        else expected = size_t{1} << (i - 2);
        if (r.ideals.size() != expected) return false;
      }
      return true;
    });
    add(tv, "bd_heisenberg_long", [&] {
      for (const Root& mu : rs_->long_positive_roots()) {
        const auto e = rs_->epsilon_coords(mu);
        int i = 0, j = 0;
        for (int k = 1; k <= n; ++k)
          if (e[k - 1] != 0) {
            if (i == 0) i = k;
            else j = k;
          }
        const bool in_h = rs_->inner(mu, rs_->highest_root()) > Rat(0);
        const bool expected = mu == rs_->highest_root() || (i <= 2 && j >= 3);
        if (in_h != expected) return false;
      }
      return true;
    });
    if (type_.family == Family::D && n >= 6) {
      add(tv, "d_max_dimension", [&] {
        const Root mu = rs_->simple_root(n - 2);
        const FiberReport* r = fa_->find(mu);
        if (!r) return false;
        return static_cast<int>(poset_->ideals[r->max_index].size()) ==
               (n * n - 3 * n + 6) / 2;
      });
    }
  }

  void run_type_c(TypeVerification& tv) {
    const int n = rs_->rank();
    add(tv, "c_fiber_sizes", [&] {
      for (int i = 1; i <= n; ++i) {
        std::vector<int> e(n, 0);
        e[i - 1] = 2;  // mu = 2 e_i
        std::optional<Root> mu;
        for (const Root& g : rs_->long_positive_roots())
          if (rs_->epsilon_coords(g) == e) mu = g;
        if (!mu) return false;
        const FiberReport* r = fa_->find(*mu);
        if (!r || r->ideals.size() != (size_t{1} << (i - 1))) return false;
      }
      return true;
    });
    add(tv, "c_min_ideal_form", [&] {
      for (int i = 1; i <= n; ++i) {
        std::vector<int> e(n, 0);
        e[i - 1] = 2;
        Root mu;
        for (const Root& g : rs_->long_positive_roots())
          if (rs_->epsilon_coords(g) == e) mu = g;
        // expected roots: 2e1 and e1 + e_k for 2 <= k <= i
        std::vector<std::vector<int>> expected;
        {
          std::vector<int> t(n, 0);
          t[0] = 2;
          expected.push_back(t);
        }
        for (int k = 2; k <= i; ++k) {
          std::vector<int> t(n, 0);
          t[0] = 1;
          t[k - 1] = 1;
          expected.push_back(t);
        }
        const AbelianIdeal ideal = min_ideal(*rs_, mu);
        std::set<std::vector<int>> got;
        for (const Root& g : ideal.roots) got.insert(rs_->epsilon_coords(g));
        if (got != std::set<std::vector<int>>(expected.begin(), expected.end())) return false;
        // word s_{i-1} ... s_1 s_0
        WeylWord w;
        for (int k = i - 1; k >= 1; --k) w.letters.push_back(k);
        w.letters.push_back(0);
        if (canonical_element(*rs_, w) != canonical_element(*rs_, ideal.word)) return false;
      }
      return true;
    });
  }

  void run_type_e(TypeVerification& tv) {
    add(tv, "e_histogram", [&] {
      std::map<size_t, size_t> histogram;
      for (const FiberReport& r : fa_->reports) ++histogram[r.ideals.size()];
      return histogram == e_histogram_expected(rs_->rank());
    });
    add(tv, "e_membership", [&] {
      for (const FiberReport& r : fa_->reports) {
        const auto classes = e_predicted_classes(*rs_, r.mu);
        if (classes.size() != 1 || classes.front() != r.ideals.size()) return false;
      }
      return true;
    });
    add(tv, "e_control_sum", [&] {
      size_t sum = 0;
      for (const FiberReport& r : fa_->reports) sum += r.ideals.size();
      return sum == (size_t{1} << rs_->rank()) - 1;
    });
  }

  void run_f4_extras(TypeVerification& tv) {
    add(tv, "f4_heisenberg_long_count", [&] {
      size_t count = 0;
      for (const Root& g : heisenberg_roots(*rs_))
        if (rs_->is_long(g)) ++count;
      return count == 9;
    });
  }

  /*
    Each golden row pins an ideal by its full root set, its rootlet, and one
    or more reference words: the enumerated poset must contain the set, carry
    the rootlet, and every reference word must equal the enumerated word as a
    group element. The rows must exhaust the nontrivial ideals.
  */
  void run_golden(TypeVerification& tv, const std::string& name,
                  const std::vector<GoldenRow>& rows) {
    add(tv, name, [&] {
      if (rows.size() + 1 != poset_->ideals.size()) return false;
      for (const GoldenRow& row : rows) {
        std::vector<Root> roots;
        for (const std::string& s : row.roots)
          roots.push_back(parse_root(*rs_, s, RootParse::Coords));
        std::sort(roots.begin(), roots.end(), root_less);
        const int idx = poset_->index_of(roots);
        if (idx < 0) return false;
        const AbelianIdeal& ideal = poset_->ideals[idx];
        if (!ideal.rootlet ||
            !(*ideal.rootlet == parse_root(*rs_, row.rootlet, RootParse::Coords)))
          return false;
        for (const std::string& ws : row.words)
          if (canonical_element(*rs_, parse_word(ws)) != canonical_element(*rs_, ideal.word))
            return false;
      }
      return true;
    });
  }

  LieType type_;
  std::optional<RootSystem> rs_;
  std::optional<IdealPoset> poset_;
  std::optional<FiberAnalysis> fa_;
};

}  // namespace

const NamedCheck* TypeVerification::find(const std::string& name) const {
  for (const NamedCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

TypeVerification verify_type(LieType type) { return Battery(type).run(); }

std::vector<LieType> standard_battery() {
  std::vector<LieType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 4; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 4; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= 6; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

bool is_conjecture_check(const std::string& name) { return name == "max_conjecture"; }

}  // namespace abideal
