#include "abideal/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace abideal {

std::string coord_string(const RootSystem& rs, const Root& x) {
  const bool compact = rs.rank() <= 9 &&
                       std::all_of(x.c.begin(), x.c.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string s;
  if (compact) {
    for (int v : x.c) s += static_cast<char>('0' + v);
    return s;
  }
  s = "(";
  for (size_t k = 0; k < x.c.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(x.c[k]);
  }
  return s + ")";
}

std::string root_label(const RootSystem& rs, const Root& x) {
  const Family fam = rs.lie_type().family;
  if (fam == Family::A) {
    if (auto pq = rs.type_a_pair(x))
      return "(" + std::to_string(pq->first) + "," + std::to_string(pq->second) + ")";
    return coord_string(rs, x);
  }
  if (fam == Family::B || fam == Family::C || fam == Family::D) {
    const auto e = rs.epsilon_coords(x);
    std::string s;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!s.empty()) s += e[k] > 0 ? "+" : "-";
      else if (e[k] < 0) s += "-";
      const int a = std::abs(e[k]);
      if (a != 1) s += std::to_string(a);
      s += "e" + std::to_string(k + 1);
    }
    return s.empty() ? coord_string(rs, x) : s;
  }
  return coord_string(rs, x);
}

namespace {

std::optional<Root> try_parse_coords(const RootSystem& rs, const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::vector<int> vals;
  if (body.find(',') != std::string::npos || body.find(' ') != std::string::npos ||
      body.find('-') != std::string::npos) {
    for (char& ch : body)
      if (ch == ',') ch = ' ';
    std::istringstream in(body);
    int v;
    while (in >> v) vals.push_back(v);
    if (!in.eof()) return std::nullopt;
  } else {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
      vals.push_back(ch - '0');
    }
  }
  if (static_cast<int>(vals.size()) != rs.rank()) return std::nullopt;
  return Root(vals);
}

std::optional<Root> try_parse_label(const RootSystem& rs, const std::string& text) {
  const Family fam = rs.lie_type().family;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;

  if (fam == Family::A) {
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') return std::nullopt;
    const auto comma = s.find(',');
    if (comma == std::string::npos) return std::nullopt;
    int i = 0, j = 0;
    try {
      i = std::stoi(s.substr(1, comma - 1));
      j = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
    } catch (...) {
      return std::nullopt;
    }
    if (!(1 <= i && i < j && j <= rs.rank() + 1)) return std::nullopt;
    Root g = rs.zero();
    for (int k = i; k < j; ++k) g.c[k - 1] = 1;
    return g;
  }

  if (fam != Family::B && fam != Family::C && fam != Family::D) return std::nullopt;
  // Forms: e1, 2e3, e1-e2, e1+e2 (also -e2+e1 rejected: positive roots only).
  std::vector<std::pair<int, int>> terms;  // (coefficient, index)
  size_t pos = 0;
  int sign = 1;
  while (pos < s.size()) {
    if (s[pos] == '+') { sign = 1; ++pos; continue; }
    if (s[pos] == '-') { sign = -1; ++pos; continue; }
    int coeff = 0;
    bool has_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = coeff * 10 + (s[pos] - '0');
      has_digit = true;
      ++pos;
    }
    if (pos >= s.size() || s[pos] != 'e') return std::nullopt;
    ++pos;
    int idx = 0;
    bool has_idx = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      idx = idx * 10 + (s[pos] - '0');
      has_idx = true;
      ++pos;
    }
    if (!has_idx || idx < 1 || idx > rs.rank()) return std::nullopt;
    terms.emplace_back(sign * (has_digit ? coeff : 1), idx);
    sign = 1;
  }
  if (terms.empty()) return std::nullopt;
  std::vector<int> e(rs.rank(), 0);
  for (auto [coeff, idx] : terms) e[idx - 1] += coeff;
  // Invert the epsilon map by scanning positive roots.
  for (const Root& g : rs.positive_roots())
    if (rs.epsilon_coords(g) == e) return g;
  return std::nullopt;
}

}  // namespace

Root parse_root(const RootSystem& rs, const std::string& text, RootParse mode) {
  const auto coords = mode == RootParse::Label ? std::nullopt : try_parse_coords(rs, text);
  const auto label = mode == RootParse::Coords ? std::nullopt : try_parse_label(rs, text);
  if (coords && label && !(*coords == *label))
    throw std::invalid_argument("ambiguous root '" + text +
                                "'; pass --coords or --label to disambiguate");
  if (coords) return *coords;
  if (label) return *label;
  throw std::invalid_argument("cannot parse root '" + text + "'");
}

WeylWord parse_word(const std::string& text) {
  WeylWord w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 's')
      throw std::invalid_argument("bad word token '" + token + "'");
    w.letters.push_back(std::stoi(token.substr(1)));
  }
  return w;
}

namespace {

json ideal_json(const RootSystem& rs, const AbelianIdeal& ideal) {
  json j;
  j["roots"] = json::array();
  for (const Root& g : ideal.roots) j["roots"].push_back(coord_string(rs, g));
  j["word"] = ideal.word.str();
  j["rootlet"] = ideal.rootlet ? json(coord_string(rs, *ideal.rootlet)) : json(nullptr);
  j["generators"] = json::array();
  if (!ideal.roots.empty())
    for (const Root& g : generators(rs, ideal)) j["generators"].push_back(coord_string(rs, g));
  j["cardinality"] = ideal.size();
  return j;
}

}  // namespace

json poset_json(const RootSystem& rs, const IdealPoset& poset) {
  json j;
  j["type"] = rs.lie_type().name();
  j["count"] = poset.ideals.size();
  j["ideals"] = json::array();
  for (const AbelianIdeal& ideal : poset.ideals) j["ideals"].push_back(ideal_json(rs, ideal));
  j["edges"] = json::array();
  for (const CoverEdge& e : poset.edges) j["edges"].push_back(json::array({e.from, e.to}));
  return j;
}

IdealPoset poset_from_json(const RootSystem& rs, const json& j) {
  if (j.at("type").get<std::string>() != rs.lie_type().name())
    throw std::invalid_argument("poset JSON is for type " + j.at("type").get<std::string>());
  IdealPoset poset;
  for (const json& ji : j.at("ideals")) {
    AbelianIdeal ideal;
    for (const json& jr : ji.at("roots"))
      ideal.roots.push_back(parse_root(rs, jr.get<std::string>(), RootParse::Coords));
    std::sort(ideal.roots.begin(), ideal.roots.end(), root_less);
    ideal.word = parse_word(ji.at("word").get<std::string>());
    if (!ji.at("rootlet").is_null())
      ideal.rootlet = parse_root(rs, ji.at("rootlet").get<std::string>(), RootParse::Coords);
    if (ji.at("cardinality").get<size_t>() != ideal.size())
      throw std::invalid_argument("poset JSON cardinality mismatch");
    std::vector<std::vector<int>> key;
    for (const Root& g : ideal.roots) key.push_back(g.c);
    poset.index_[key] = static_cast<int>(poset.ideals.size());
    poset.ideals.push_back(std::move(ideal));
  }
  for (const json& je : j.at("edges"))
    poset.edges.push_back(CoverEdge{je.at(0).get<int>(), je.at(1).get<int>(), -1, Root{}});
  return poset;
}

json fiber_json(const RootSystem& rs, const IdealPoset& poset, const FiberReport& report) {
  json j;
  j["mu"] = coord_string(rs, report.mu);
  j["label"] = root_label(rs, report.mu);
  j["size"] = report.ideals.size();
  j["min"] = ideal_json(rs, poset.ideals[report.min_index]);
  j["max"] = ideal_json(rs, poset.ideals[report.max_index]);
  j["w_mu"] = report.w_mu.str();
  j["gamma_nodes"] = report.gamma.usual_nodes;
  j["M_mu"] = json::array();
  for (const Root& m : report.gamma.m_mu) j["M_mu"].push_back(coord_string(rs, m));
  j["checks"] = json::object();
  for (const NamedCheck& c : report.checks) j["checks"][c.name] = c.pass;
  return j;
}

std::string poset_dot(const RootSystem& rs, const IdealPoset& poset) {
  std::ostringstream out;
  out << "digraph abelian_ideals {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t k = 0; k < poset.ideals.size(); ++k) {
    const AbelianIdeal& ideal = poset.ideals[k];
    out << "  n" << k << " [label=\"" << ideal.size() << "|"
        << (ideal.rootlet ? coord_string(rs, *ideal.rootlet) : "-") << "\"];\n";
  }
  for (const CoverEdge& e : poset.edges) out << "  n" << e.from << " -> n" << e.to << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

std::string roots_braced(const RootSystem& rs, const std::vector<Root>& roots) {
  std::string s = "{";
  for (size_t k = 0; k < roots.size(); ++k) {
    if (k) s += ",";
    s += coord_string(rs, roots[k]);
  }
  return s + "}";
}

}  // namespace

std::string enumerate_text(const RootSystem& rs, const IdealPoset& poset) {
  std::ostringstream out;
  out << rs.lie_type().name() << ": " << poset.ideals.size() << " Abelian ideals (2^"
      << rs.rank() << ")\n";
  for (size_t k = 0; k < poset.ideals.size(); ++k) {
    const AbelianIdeal& ideal = poset.ideals[k];
    out << "#" << k << "  dim " << ideal.size() << "  " << roots_braced(rs, ideal.roots);
    out << "  word: " << (ideal.word.letters.empty() ? "e" : ideal.word.str());
    out << "  rootlet: " << (ideal.rootlet ? coord_string(rs, *ideal.rootlet) : "-");
    if (!ideal.roots.empty()) {
      out << "  generators: " << roots_braced(rs, generators(rs, ideal));
    }
    out << "\n";
  }
  return out.str();
}

std::string fiber_text(const RootSystem& rs, const IdealPoset& poset, const FiberReport& report) {
  std::ostringstream out;
  out << "fiber of " << coord_string(rs, report.mu) << " (" << root_label(rs, report.mu)
      << ") in " << rs.lie_type().name() << "\n";
  out << "size: " << report.ideals.size() << "\n";
  out << "members:\n";
  for (int idx : report.ideals)
    out << "  dim " << poset.ideals[idx].size() << "  "
        << roots_braced(rs, poset.ideals[idx].roots) << "\n";
  out << "min: " << roots_braced(rs, poset.ideals[report.min_index].roots) << "\n";
  out << "max: " << roots_braced(rs, poset.ideals[report.max_index].roots) << "\n";
  out << "w_mu: " << (report.w_mu.letters.empty() ? "e" : report.w_mu.str()) << "\n";
  out << "gamma nodes:";
  if (report.gamma.has_theta_node) {
    out << " [-theta]";
    for (int i : report.gamma.usual_nodes) out << " a" << i;
  } else {
    out << " (empty)";
  }
  out << "\nM_mu: " << roots_braced(rs, report.gamma.m_mu) << "\n";
  out << "checks:\n";
  for (const NamedCheck& c : report.checks)
    out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name
        << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  return out.str();
}

std::string hasse_text(const RootSystem& rs, const IdealPoset& poset) {
  std::ostringstream out;
  const HasseDiagram d = hasse(rs, poset);
  for (const HasseNode& node : d.nodes) {
    out << "#" << node.index << "  dim " << node.cardinality << "  rootlet "
        << (node.rootlet ? coord_string(rs, *node.rootlet) : "-") << "  generators "
        << roots_braced(rs, node.generator_set) << "  covers:";
    bool any = false;
    for (const auto& [from, to] : d.edges)
      if (from == node.index) {
        out << " #" << to;
        any = true;
      }
    if (!any) out << " (maximal)";
    out << "\n";
  }
  return out.str();
}

std::string tables_text(const RootSystem& rs, const IdealPoset& poset, const FiberAnalysis& fa) {
  std::ostringstream out;
  const Family fam = rs.lie_type().family;
  const int n = rs.rank();

  if (fam == Family::F) {
    out << "Abelian ideals of F4 (theta = " << coord_string(rs, rs.highest_root()) << ")\n";
    out << "No. | dim | I | word | rootlet\n";
    int row = 1;
    for (size_t k = 1; k < poset.ideals.size(); ++k, ++row) {
      const AbelianIdeal& ideal = poset.ideals[k];
      out << row << " | " << ideal.size() << " | " << roots_braced(rs, ideal.roots) << " | "
          << ideal.word.str() << " | " << coord_string(rs, *ideal.rootlet) << "\n";
    }
    return out.str();
  }

  if (fam == Family::E) {
    std::map<size_t, size_t> histogram;
    for (const FiberReport& r : fa.reports) ++histogram[r.ideals.size()];
    out << "fiber-size histogram for " << rs.lie_type().name() << "\n";
    size_t control = 0;
    for (const auto& [size, count] : histogram) {
      out << "m_" << size << " = " << count << "\n";
      control += size * count;
    }
    out << "control sum = " << control << " (2^" << n << "-1 = " << ((1u << n) - 1) << ")\n";
    out << "classes:\n";
    for (const auto& [size, count] : histogram) {
      out << "size " << size << ":";
      for (const FiberReport& r : fa.reports)
        if (r.ideals.size() == size) out << " " << coord_string(rs, r.mu);
      out << "\n";
    }
    return out.str();
  }

  if (fam == Family::A) {
    out << "fiber sizes for " << rs.lie_type().name() << " (rows i, columns j)\n";
    for (int i = 1; i <= n; ++i) {
      out << "i=" << i << ":";
      for (int j = i + 1; j <= n + 1; ++j) {
        Root g = rs.zero();
        for (int k = i; k < j; ++k) g.c[k - 1] = 1;
        const FiberReport* r = fa.find(g);
        out << " " << (r ? r->ideals.size() : 0);
      }
      out << "\n";
    }
    return out.str();
  }

  if (fam == Family::G) {
    out << "Abelian ideals of G2 (alpha short = s1, beta long = s2)\n";
    for (size_t k = 1; k < poset.ideals.size(); ++k) {
      const AbelianIdeal& ideal = poset.ideals[k];
      out << "I" << ideal.size() << " = " << roots_braced(rs, ideal.roots)
          << "  word: " << ideal.word.str() << "  rootlet: " << coord_string(rs, *ideal.rootlet)
          << "\n";
    }
    return out.str();
  }

  // B, C, D: fiber sizes by label.
  out << "fiber sizes for " << rs.lie_type().name() << "\n";
  for (const FiberReport& r : fa.reports)
    out << root_label(rs, r.mu) << " : " << r.ideals.size() << "\n";
  return out.str();
}

}  // namespace abideal
