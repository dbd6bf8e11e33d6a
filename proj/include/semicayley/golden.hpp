#pragma once

// Named instances with known automorphism-group orders and verdicts.

#include <optional>
#include <string>
#include <vector>

#include "semicayley/abelian_group.hpp"
#include "semicayley/graph.hpp"
#include "semicayley/sc_theory.hpp"

namespace semicayley {

struct GoldenCase {
  std::string name;
  ConnectionSpec spec;
  std::optional<BigInt> aut_order;
  bool normal = true;
  std::optional<bool> vertex_transitive;
  std::optional<bool> arc_transitive;
};

struct GoldenResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Builds a spec from coordinate lists, e.g. make_spec({4,2}, {{1,0},{3,0}}, {{0,1}}).
inline ConnectionSpec make_spec(const std::vector<int>& factors, const std::vector<std::vector<int>>& right,
                                const std::vector<std::vector<int>>& left) {
  auto to_elems = [](const std::vector<std::vector<int>>& coords) {
    std::vector<Element> out;
    for (const auto& c : coords) out.push_back(Element{c});
    return out;
  };
  return ConnectionSpec(AbelianGroup(factors), to_elems(right), to_elems(left));
}

inline std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  auto add = [&](std::string name, ConnectionSpec spec, std::optional<long> order, bool normal,
                 std::optional<bool> vt, std::optional<bool> at = std::nullopt) {
    out.push_back(GoldenCase{std::move(name), std::move(spec),
                             order ? std::optional<BigInt>(BigInt(*order)) : std::nullopt, normal, vt, at});
  };

  add("path P4 (Z2, R={1}, L={})", make_spec({2}, {{1}}, {}), 2, true, false);
  add("4-cycle (Z2, R=L={1})", make_spec({2}, {{1}}, {{1}}), 8, false, true);
  add("8-cycle (Z2^2, R={a}, L={b})", make_spec({2, 2}, {{1, 0}}, {{0, 1}}), 16, false, true);
  for (int n = 3; n <= 12; ++n) {
    add("pendant cycle Z" + std::to_string(n) + " (L={})", make_spec({n}, {{1}, {n - 1}}, {}), 2L * n, true, false);
  }
  add("pendant cycle Z2^2 (R={a,b}, L={})", make_spec({2, 2}, {{1, 0}, {0, 1}}, {}), 8, true, false);
  add("Z4, R={±1}, L={2}", make_spec({4}, {{1}, {3}}, {{2}}), 8, true, false);
  add("Z4xZ2, R={±a}, L={b}", make_spec({4, 2}, {{1, 0}, {3, 0}}, {{0, 1}}), 16, true, false);
  add("Z6, R={±1}, L={3}", make_spec({6}, {{1}, {5}}, {{3}}), 12, true, false);
  add("Z2^4, R={a,b}, L={c,d}", make_spec({2, 2, 2, 2}, {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}),
      128, true, true);
  add("Z6xZ2, R={a,c^3}, L={±c}", make_spec({6, 2}, {{0, 1}, {3, 0}}, {{1, 0}, {5, 0}}), 24, true, false);
  add("Z6xZ2, R={a,ac^3}, L={±c}", make_spec({6, 2}, {{0, 1}, {3, 1}}, {{1, 0}, {5, 0}}), 24, true, false);
  for (int k : {3, 5, 6, 7, 8, 9, 10, 12}) {
    add("prism Z" + std::to_string(k) + " (R=L={±1})", make_spec({k}, {{1}, {k - 1}}, {{1}, {k - 1}}), 4L * k, true,
        true, false);
  }
  add("cube Z4 (R=L={±1})", make_spec({4}, {{1}, {3}}, {{1}, {3}}), 48, false, true, true);
  add("Z2^3, R={a,b}, L={ab,c}", make_spec({2, 2, 2}, {{1, 0, 0}, {0, 1, 0}}, {{1, 1, 0}, {0, 0, 1}}), std::nullopt,
      true, false);
  add("Z2^2, R={a,b}, L={ab,b}", make_spec({2, 2}, {{1, 0}, {0, 1}}, {{1, 1}, {0, 1}}), std::nullopt, false, true);
  add("Z2^3, R={a,b}, L={b,c}", make_spec({2, 2, 2}, {{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}), std::nullopt,
      false, true);
  add("Z2^2xZ4, R={a,b}, L={±c}", make_spec({2, 2, 4}, {{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {0, 0, 3}}),
      std::nullopt, false, true);
  add("Z4xZ2, R={±a}, L={b,ba^2}", make_spec({4, 2}, {{1, 0}, {3, 0}}, {{0, 1}, {2, 1}}), std::nullopt, false, true);
  add("Z4xZ2, R={±a}, L={ab,a^-1b}", make_spec({4, 2}, {{1, 0}, {3, 0}}, {{1, 1}, {3, 1}}), std::nullopt, false,
      true);
  for (auto [n, k] : kExceptionalGp) {
    add("GP(" + std::to_string(n) + "," + std::to_string(k) + ") over Z" + std::to_string(n),
        make_spec({n}, {{1}, {n - 1}}, {{k}, {n - k}}), std::nullopt, false, true, true);
  }
  add("Z10xZ2, R={±a}, L={a^3b,a^-3b}", make_spec({10, 2}, {{1, 0}, {9, 0}}, {{3, 1}, {7, 1}}), std::nullopt, false,
      true, true);
  add("Z10xZ2, R={±a}, L={a^2b,a^-2b}", make_spec({10, 2}, {{1, 0}, {9, 0}}, {{2, 1}, {8, 1}}), std::nullopt, false,
      true, true);
  return out;
}

inline GoldenResult check_golden(const GoldenCase& c) {
  GoldenResult r{c.name, true, {}};
  try {
    const Verdict v = evaluate(c.spec);
    auto fail = [&](const std::string& what) {
      r.passed = false;
      r.detail += (r.detail.empty() ? "" : "; ") + what;
    };
    if (c.aut_order && v.aut_order != *c.aut_order) {
      fail("|Aut|=" + v.aut_order.str() + ", expected " + c.aut_order->str());
    }
    if (v.normal != c.normal) fail(v.normal ? "normal, expected non-normal" : "non-normal, expected normal");
    if (c.vertex_transitive && v.vertex_transitive != *c.vertex_transitive) {
      fail(v.vertex_transitive ? "vertex-transitive, expected intransitive" : "intransitive, expected transitive");
    }
    if (c.arc_transitive && v.arc_transitive != *c.arc_transitive) {
      fail(v.arc_transitive ? "arc-transitive, expected not" : "not arc-transitive, expected arc-transitive");
    }
    if (r.passed) {
      r.detail = "|Aut|=" + v.aut_order.str() + (v.normal ? " normal" : " non-normal") +
                 (v.vertex_transitive ? " transitive" : " intransitive");
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

inline std::vector<GoldenResult> run_golden_suite() {
  std::vector<GoldenResult> out;
  for (const auto& c : golden_cases()) out.push_back(check_golden(c));
  return out;
}

}  // namespace semicayley
