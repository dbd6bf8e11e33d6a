#pragma once

// Exhaustive sweep over connected one-matching semi-Cayley graphs with
// |R|, |L| <= 2, comparing the computed normality verdict against the
// exceptional-family classifier.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semicayley/abelian_group.hpp"
#include "semicayley/graph.hpp"
#include "semicayley/sc_theory.hpp"

namespace semicayley {

enum class OutputFormat { json, csv, text };

struct SweepConfig {
  int min_group_order = 2;
  int max_group_order = 24;
  bool include_disconnected = false;
  bool dedupe = true;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::text;
  bool dump_graphs = false;

  void validate() const {
    if (max_group_order < 2) throw InvalidArgumentError("max_group_order must be >= 2");
    if (min_group_order < 2 || min_group_order > max_group_order) {
      throw InvalidArgumentError("min_group_order must lie in [2, max_group_order]");
    }
    if (workers == 0) throw InvalidArgumentError("workers must be >= 1");
  }
};

/// Inverse-closed subsets of G \ {0} with at most two elements: the empty set,
/// {s} for involutions s, {s, -s} for o(s) > 2, and {s, t} for involutions s < t.
inline std::vector<std::vector<Element>> small_connection_sets(const AbelianGroup& g) {
  std::vector<std::vector<Element>> out{{}};
  const auto elems = g.elements();
  std::vector<Element> involutions;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (g.order_of(elems[i]) == 2) {
      involutions.push_back(elems[i]);
      out.push_back({elems[i]});
    }
  }
  for (std::size_t i = 1; i < elems.size(); ++i) {
    const Element inv = g.neg(elems[i]);
    if (elems[i] < inv) out.push_back({elems[i], inv});
  }
  for (std::size_t i = 0; i < involutions.size(); ++i) {
    for (std::size_t j = i + 1; j < involutions.size(); ++j) out.push_back({involutions[i], involutions[j]});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

/// Specs over one group. With dedupe, only the first member (in enumeration
/// order) of each orbit of (R, L) under Aut(G) and R <-> L is emitted.
inline std::vector<ConnectionSpec> enumerate_group_instances(const AbelianGroup& g, const SweepConfig& cfg) {
  const auto sets = small_connection_sets(g);
  const std::size_t m = sets.size();
  std::vector<ConnectionSpec> out;

  // image[s][c] = index of sigma_s(sets[c])
  std::vector<std::vector<std::size_t>> image;
  if (cfg.dedupe) {
    std::map<std::vector<Element>, std::size_t> lookup;
    for (std::size_t c = 0; c < m; ++c) lookup[sets[c]] = c;
    for (const auto& sigma : enumerate_automorphisms(g)) {
      std::vector<std::size_t> row(m);
      for (std::size_t c = 0; c < m; ++c) {
        std::vector<Element> img;
        for (const auto& e : sets[c]) img.push_back(sigma.apply(g, e));
        std::sort(img.begin(), img.end());
        row[c] = lookup.at(img);
      }
      image.push_back(std::move(row));
    }
  }

  std::vector<char> seen(m * m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t l = 0; l < m; ++l) {
      if (sets[r].empty() && sets[l].empty()) continue;
      if (seen[r * m + l]) continue;
      ConnectionSpec spec(g, sets[r], sets[l]);
      if (!cfg.include_disconnected && !spec.is_connected()) continue;
      out.push_back(std::move(spec));
      if (cfg.dedupe) {
        for (const auto& row : image) {
          seen[row[r] * m + row[l]] = 1;
          seen[row[l] * m + row[r]] = 1;
        }
      }
    }
  }
  return out;
}

inline std::vector<ConnectionSpec> enumerate_instances(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<ConnectionSpec> out;
  for (int n = cfg.min_group_order; n <= cfg.max_group_order; ++n) {
    for (const auto& g : enumerate_abelian_groups(n)) {
      auto part = enumerate_group_instances(g, cfg);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return out;
}

struct SweepRow {
  ConnectionSpec spec;
  std::optional<Verdict> verdict;
  std::string error;
};

/// A row that broke one of the structural checks.
struct Violation {
  std::size_t row = 0;
  std::string check;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t errors = 0;
  std::size_t normal = 0;
  std::size_t non_normal = 0;
  std::size_t transitive = 0;
  /// family (0 = none) -> {normal count, non-normal count}
  std::map<int, std::pair<std::size_t, std::size_t>> by_case;
  /// exceptional families seen (6 counted per (n,k))
  std::set<std::string> families_seen;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  SweepSummary summary;
  std::vector<std::size_t> discrepancies;  // rows where (case == none) != normal
  std::vector<Violation> violations;

  bool verified() const { return discrepancies.empty() && violations.empty() && summary.errors == 0; }
};

namespace detail {

inline std::string family_key(const CaseMatch& m) {
  if (m.family == 6) return "6:(" + std::to_string(m.n) + "," + std::to_string(m.k) + ")";
  return std::to_string(m.family);
}

/// Structural identities every connected instance must satisfy.
inline std::vector<std::string> structural_checks(const Verdict& v) {
  std::vector<std::string> bad;
  if (!v.lifts_in_aut) bad.push_back("X u Y not contained in Aut");
  if (v.aut_grl_order != v.x_size + v.y_size) bad.push_back("|<X u Y>| != |X| + |Y|");
  if (!v.order_identity) bad.push_back("normal != (|A| == |G||Aut(G;R,L)|)");
  if (v.y_size > 0 && !v.vertex_transitive) bad.push_back("Y nonempty but intransitive");
  if (v.normal && !v.stabilizer_is_x) bad.push_back("normal but vertex stabilizer != X");
  if (v.normal && v.y_size == 0 && v.vertex_transitive) bad.push_back("normal with Y empty but transitive");
  if (v.edge_transitive && v.normal) bad.push_back("edge-transitive but normal");
  if (v.arc_transitive && !v.edge_transitive) bad.push_back("arc-transitive but not edge-transitive");
  if (v.theorem_case() != 0 && !v.vertex_transitive) bad.push_back("exceptional family but intransitive");
  if (!v.vertex_transitive && !v.normal) bad.push_back("intransitive but non-normal");
  if (v.normalizer_order && *v.normalizer_order != BigInt(v.vertices / 2) * (v.x_size + v.y_size)) {
    bad.push_back("|N_A(R_G)| != |G||Aut(G;R,L)|");
  }
  if (v.normalizer_stabilizer_is_x && !*v.normalizer_stabilizer_is_x) bad.push_back("A_(1,1) n N_A(R_G) != X");
  if (v.color_preserving && !*v.color_preserving) bad.push_back("induced map not colour-preserving");
  return bad;
}

}  // namespace detail

/// Evaluates every instance. Row order is the enumeration order, whatever the worker count.
inline SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepReport report;
  report.config = cfg;
  for (auto& spec : enumerate_instances(cfg)) report.rows.push_back(SweepRow{std::move(spec), std::nullopt, {}});

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < report.rows.size(); i = next++) {
      auto& row = report.rows[i];
      try {
        if (!row.spec.is_connected()) throw PreconditionError("disconnected instance");
        row.verdict = evaluate(row.spec);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const unsigned threads = std::min<unsigned>(cfg.workers, static_cast<unsigned>(std::max<std::size_t>(1, report.rows.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  auto& s = report.summary;
  s.instances = report.rows.size();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    if (!row.verdict) {
      ++s.errors;
      continue;
    }
    const Verdict& v = *row.verdict;
    (v.normal ? s.normal : s.non_normal)++;
    if (v.vertex_transitive) ++s.transitive;
    auto& bucket = s.by_case[v.theorem_case()];
    (v.normal ? bucket.first : bucket.second)++;
    for (const auto& m : v.classification.matches) s.families_seen.insert(detail::family_key(m));
    if ((v.theorem_case() == 0) != v.normal) report.discrepancies.push_back(i);
    for (auto& what : detail::structural_checks(v)) report.violations.push_back({i, std::move(what)});
  }
  return report;
}

// -- report writers -------------------------------------------------------------

inline nlohmann::ordered_json to_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json inst = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    if (row.verdict) {
      o = to_json(*row.verdict);
    } else {
      o["group"] = row.spec.group().to_string();
      o["R"] = format_element_set(row.spec.right());
      o["L"] = format_element_set(row.spec.left());
      o["error"] = row.error;
    }
    if (r.config.dump_graphs) o["graph"] = build_sc_graph(row.spec).to_json();
    inst.push_back(std::move(o));
  }
  j["instances"] = std::move(inst);

  const auto& s = r.summary;
  nlohmann::ordered_json sum;
  sum["max_group_order"] = r.config.max_group_order;
  sum["instances"] = s.instances;
  sum["errors"] = s.errors;
  sum["normal"] = s.normal;
  sum["non_normal"] = s.non_normal;
  sum["transitive"] = s.transitive;
  nlohmann::ordered_json cases = nlohmann::ordered_json::object();
  for (const auto& [c, counts] : s.by_case) {
    cases[c == 0 ? std::string("none") : "case" + std::to_string(c)] = {{"normal", counts.first},
                                                                         {"non_normal", counts.second}};
  }
  sum["by_case"] = std::move(cases);
  sum["families_seen"] = s.families_seen;
  sum["discrepancies"] = r.discrepancies.size();
  sum["violations"] = r.violations.size();
  sum["verified"] = r.verified();
  j["summary"] = std::move(sum);

  nlohmann::ordered_json disc = nlohmann::ordered_json::array();
  for (std::size_t i : r.discrepancies) disc.push_back(r.rows[i].spec.to_string());
  j["discrepancies"] = std::move(disc);
  nlohmann::ordered_json viol = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) viol.push_back({{"instance", r.rows[v.row].spec.to_string()}, {"check", v.check}});
  j["violations"] = std::move(viol);
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Columns: group, R, L, aut_order, normal, vt, et, at, case, x_size, y_size.
inline std::string to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "group,R,L,aut_order,normal,vt,et,at,case,x_size,y_size\n";
  for (const auto& row : r.rows) {
    os << csv_field(row.spec.group().to_string()) << ',' << csv_field(format_element_set(row.spec.right())) << ','
       << csv_field(format_element_set(row.spec.left())) << ',';
    if (!row.verdict) {
      os << "error,,,,,,,\n";
      continue;
    }
    const Verdict& v = *row.verdict;
    os << v.aut_order << ',' << v.normal << ',' << v.vertex_transitive << ',' << v.edge_transitive << ','
       << v.arc_transitive << ',' << v.theorem_case() << ',' << v.x_size << ',' << v.y_size << '\n';
  }
  return os.str();
}

inline std::string to_text(const SweepReport& r) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << row.spec.to_string() << ": ";
    if (!row.verdict) {
      os << "error: " << row.error << '\n';
      continue;
    }
    const Verdict& v = *row.verdict;
    os << "|Aut|=" << v.aut_order << (v.normal ? " normal" : " non-normal")
       << (v.arc_transitive ? " arc-transitive" : v.vertex_transitive ? " vertex-transitive" : " intransitive");
    if (v.theorem_case()) os << " case" << v.theorem_case();
    os << '\n';
    if (r.config.dump_graphs) os << build_sc_graph(row.spec).to_edge_list();
  }
  const auto& s = r.summary;
  os << "instances: " << s.instances << "  normal: " << s.normal << "  non-normal: " << s.non_normal
     << "  errors: " << s.errors << '\n';
  for (const auto& [c, counts] : s.by_case) {
    os << (c == 0 ? std::string("none") : "case" + std::to_string(c)) << ": normal " << counts.first
       << ", non-normal " << counts.second << '\n';
  }
  os << "discrepancies: " << r.discrepancies.size() << '\n';
  for (std::size_t i : r.discrepancies) os << "  " << r.rows[i].spec.to_string() << '\n';
  os << "violations: " << r.violations.size() << '\n';
  for (const auto& v : r.violations) os << "  " << r.rows[v.row].spec.to_string() << ": " << v.check << '\n';
  return os.str();
}

inline std::string render(const SweepReport& r) {
  switch (r.config.format) {
    case OutputFormat::json:
      return to_json(r).dump(2) + "\n";
    case OutputFormat::csv:
      return to_csv(r);
    case OutputFormat::text:
      break;
  }
  return to_text(r);
}

}  // namespace semicayley
