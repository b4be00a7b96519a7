// Copyright 2026 The qfi-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFILAB_REPORT_HPP
#define QFILAB_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qfilab/channel.hpp"
#include "qfilab/fisher.hpp"
#include "qfilab/optimize.hpp"
#include "qfilab/parallel.hpp"
#include "qfilab/qstate.hpp"

namespace qfilab {

/// Inclusive linear grid start..stop with `steps` points.
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 101;

  double at(std::size_t i) const {
    if (steps == 1) return start;
    // Endpoints are reproduced exactly.
    if (i + 1 == steps) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }

  /// Parses "start:stop:steps".
  static Grid parse(std::string_view text) {
    const auto a = text.find(':');
    const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
    if (b == std::string_view::npos) throw DomainError("grid must look like start:stop:steps");
    Grid g;
    try {
      std::size_t used = 0;
      const std::string s0(text.substr(0, a)), s1(text.substr(a + 1, b - a - 1)), s2(text.substr(b + 1));
      g.start = std::stod(s0, &used);
      if (used != s0.size()) throw DomainError("bad grid start");
      g.stop = std::stod(s1, &used);
      if (used != s1.size()) throw DomainError("bad grid stop");
      const long steps = std::stol(s2, &used);
      if (used != s2.size() || steps < 2) throw DomainError("grid steps must be an integer >= 2");
      g.steps = static_cast<std::size_t>(steps);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const DomainError*>(&e)) throw;
      throw DomainError("grid must look like start:stop:steps");
    }
    return g;
  }
};

/// 12 significant digits; "inf"/"-inf"/"nan" for non-finite values.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// Column-named table of optional numbers; empty cells mark masked points.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) os << ',';
        if (r[c]) os << format_number(*r[c]);
      }
      os << '\n';
    }
    return os.str();
  }

  static Table from_csv(std::string_view text) {
    Table t;
    std::istringstream is{std::string(text)};
    std::string line;
    auto split = [](const std::string& l) {
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream ls(l);
      while (std::getline(ls, cell, ',')) cells.push_back(cell);
      if (!l.empty() && l.back() == ',') cells.emplace_back();
      return cells;
    };
    if (!std::getline(is, line)) return t;
    t.columns = split(line);
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      std::vector<std::optional<double>> row;
      for (const auto& c : split(line)) {
        if (c.empty()) row.emplace_back();
        else row.emplace_back(std::strtod(c.c_str(), nullptr));
      }
      row.resize(t.columns.size());
      t.rows.push_back(std::move(row));
    }
    return t;
  }
};

//=========================================================================
// Figure datasets
//=========================================================================

/// Per-η amplitude-damping single-probe curves.
inline std::vector<std::optional<double>> fig2a_row(double eta) {
  const auto ch = amplitude_damping(eta);
  const double single =
      qfi_scenario({ch, make_state(family::Single{}), Layout::probes_then_ancillas(1, 0), kPi / 2.0});
  const double half = qfi_scenario(
      {ch, make_state(family::MaxEntangled{}), Layout::probes_then_ancillas(1, 1), kPi / 2.0});
  const double opt =
      optimize_family(ch, FamilyShape::AncillaPair, kPi / 2.0, Layout::probes_then_ancillas(1, 1)).best_qfi;
  return {eta, single, half, opt};
}

inline Table fig2a(const Grid& grid = {0.0, 1.0, 101}) {
  Table t{{"eta", "qfi_single", "qfi_gamma_half", "qfi_gamma_opt"}, {}};
  t.rows.resize(grid.steps);
  parallel_for(grid.steps, [&](std::size_t i) { t.rows[i] = fig2a_row(grid.at(i)); });
  return t;
}

/// Per-η two-probe curves: NOON, optimized two-qubit state, four-qubit
/// NOON with two ancillas, and the ancilla-free upper bound.
inline std::vector<std::optional<double>> fig2b_row(double eta) {
  const auto ch = amplitude_damping(eta);
  const double noon2 =
      qfi_scenario({ch, make_state(family::Noon{2}), Layout::probes_then_ancillas(2, 0), kPi / 2.0});
  const double opt2 = optimize_two_probes(ch, kPi / 2.0).best_qfi;
  const double noon4 = qfi_scenario(noon4_scenario(eta, kPi / 2.0));
  const double bound = closed_form(closed::DurkinBound{2, eta});
  return {eta, noon2, opt2, noon4, bound};
}

inline Table fig2b(const Grid& grid = {0.0, 1.0, 101}) {
  Table t{{"eta", "qfi_noon2", "qfi_opt2", "qfi_noon4", "durkin_bound"}, {}};
  t.rows.resize(grid.steps);
  parallel_for(grid.steps, [&](std::size_t i) { t.rows[i] = fig2b_row(grid.at(i)); });
  return t;
}

/// Pauli channel with p1 = 0 over the (p2, p3) grid; infeasible points
/// (p2 + p3 > 1) keep empty cells.
inline std::vector<std::optional<double>> fig3_row(double p2, double p3, bool feasible) {
  if (!feasible) return {p2, p3, std::nullopt, std::nullopt};
  return {p2, p3, pauli_no_ancilla_max_alpha(0.0, p2, p3),
          closed_form(closed::PauliAncilla{0.0, p2, p3})};
}

inline Table fig3(const Grid& grid = {0.0, 1.0, 51}) {
  Table t{{"p2", "p3", "j_na_opt", "j_a"}, {}};
  const std::size_t n = grid.steps;
  t.rows.resize(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    const std::size_t i = idx / n, j = idx % n;
    const double p2 = grid.at(i), p3 = grid.at(j);
    // The p2 + p3 = 1 diagonal stays feasible despite rounding.
    t.rows[idx] = fig3_row(p2, p3, p2 + p3 <= 1.0 + 1e-12);
  });
  return t;
}

}  // namespace qfilab

#endif  // QFILAB_REPORT_HPP
