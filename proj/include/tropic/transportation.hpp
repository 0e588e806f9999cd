#pragma once

// Exact transportation problem: minimize Σ c_ij y_ij subject to y >= 0,
// row sums r_i and column sums s_j.  Solved by successive shortest paths on
// the bipartite flow network; instances here are tiny, so Bellman-Ford
// over rationals is fine.

#include "tropic/errors.hpp"
#include "tropic/rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tropic {

struct TransportationResult {
  Rational cost;
  std::vector<std::vector<long>> plan;  // rows x cols, integral
  bool unique = false;                  // no other optimal plan exists
};

namespace detail {

struct FlowArc {
  int to;
  long cap;
  Rational cost;
  int rev;
};

class FlowNetwork {
public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  int add_arc(int from, int to, long cap, const Rational& cost) {
    adj_[from].push_back({to, cap, cost, static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, 0, -cost, static_cast<int>(adj_[from].size()) - 1});
    return static_cast<int>(adj_[from].size()) - 1;
  }

  /// Pushes up to `amount` units from s to t along cheapest paths.
  long min_cost_flow(int s, int t, long amount) {
    long sent = 0;
    const int n = static_cast<int>(adj_.size());
    while (sent < amount) {
      std::vector<std::optional<Rational>> dist(n);
      std::vector<int> prev_node(n, -1), prev_arc(n, -1);
      dist[s] = Rational(0);
      for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          if (!dist[u]) continue;
          for (int k = 0; k < static_cast<int>(adj_[u].size()); ++k) {
            const auto& arc = adj_[u][k];
            if (arc.cap <= 0) continue;
            Rational cand = *dist[u] + arc.cost;
            if (!dist[arc.to] || cand < *dist[arc.to]) {
              dist[arc.to] = cand;
              prev_node[arc.to] = u;
              prev_arc[arc.to] = k;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (!dist[t]) break;
      long push = amount - sent;
      for (int v = t; v != s; v = prev_node[v]) push = std::min(push, adj_[prev_node[v]][prev_arc[v]].cap);
      for (int v = t; v != s; v = prev_node[v]) {
        auto& arc = adj_[prev_node[v]][prev_arc[v]];
        arc.cap -= push;
        adj_[v][arc.rev].cap += push;
      }
      sent += push;
    }
    return sent;
  }

  /// True iff the residual graph has a directed cycle of total cost zero,
  /// i.e. the current optimal flow is not the only optimum.
  [[nodiscard]] bool has_zero_cost_cycle() const {
    const int n = static_cast<int>(adj_.size());
    // Feasible potentials from a virtual source joined to every node.
    std::vector<Rational> pot(n, Rational(0));
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int u = 0; u < n; ++u)
        for (const auto& arc : adj_[u])
          if (arc.cap > 0 && pot[u] + arc.cost < pot[arc.to]) {
            pot[arc.to] = pot[u] + arc.cost;
            changed = true;
          }
      if (!changed) break;
    }
    // Simple cycles of length >= 3 among arcs with zero reduced cost.  An
    // arc together with its own reverse is not an alternative optimum, so
    // two-cycles are skipped.  Networks here are tiny; plain DFS suffices.
    std::vector<char> on_path(n, 0);
    auto visit = [&](auto&& self, int start, int u, int length) -> bool {
      on_path[u] = 1;
      for (const auto& arc : adj_[u]) {
        if (arc.cap <= 0 || pot[u] + arc.cost != pot[arc.to] || arc.to < start) continue;
        if (arc.to == start) {
          if (length >= 2) return true;
          continue;
        }
        if (!on_path[arc.to] && self(self, start, arc.to, length + 1)) return true;
      }
      on_path[u] = 0;
      return false;
    };
    for (int s = 0; s < n; ++s) {
      std::fill(on_path.begin(), on_path.end(), 0);
      if (visit(visit, s, s, 0)) return true;
    }
    return false;
  }

  [[nodiscard]] const FlowArc& arc(int from, int index) const { return adj_[from][index]; }

private:
  std::vector<std::vector<FlowArc>> adj_;
};

}  // namespace detail

/// Costs must be finite; supplies and demands must balance.
inline TransportationResult solve_transportation(const std::vector<std::vector<Rational>>& cost,
                                                 const std::vector<long>& row_sums,
                                                 const std::vector<long>& col_sums) {
  const int m = static_cast<int>(row_sums.size());
  const int n = static_cast<int>(col_sums.size());
  if (static_cast<int>(cost.size()) != m) throw PreconditionError("transportation: cost rows mismatch");
  const long supply = std::accumulate(row_sums.begin(), row_sums.end(), 0L);
  const long demand = std::accumulate(col_sums.begin(), col_sums.end(), 0L);
  if (supply != demand) throw PreconditionError("transportation: supplies and demands differ");

  const int source = m + n;
  const int sink = m + n + 1;
  detail::FlowNetwork net(m + n + 2);
  for (int i = 0; i < m; ++i) net.add_arc(source, i, row_sums[i], Rational(0));
  std::vector<std::vector<int>> arc_index(m, std::vector<int>(n));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(cost[i].size()) != n) throw PreconditionError("transportation: cost cols mismatch");
    for (int j = 0; j < n; ++j) arc_index[i][j] = net.add_arc(i, m + j, supply, cost[i][j]);
  }
  for (int j = 0; j < n; ++j) net.add_arc(m + j, sink, col_sums[j], Rational(0));

  if (net.min_cost_flow(source, sink, supply) != supply)
    throw std::logic_error("transportation: balanced problem must be feasible");

  TransportationResult out;
  out.plan.assign(m, std::vector<long>(n, 0));
  out.cost = Rational(0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      long flow = supply - net.arc(i, arc_index[i][j]).cap;
      out.plan[i][j] = flow;
      out.cost += cost[i][j] * Rational(flow);
    }
  out.unique = !net.has_zero_cost_cycle();
  return out;
}

}  // namespace tropic
