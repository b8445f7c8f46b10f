#include "rparea/rp_graph.h"

#include <algorithm>
#include <deque>

#include "rparea/errors.h"

namespace rparea {
namespace {

// Walks weak edges breadth-first; returns a vertex-distinct path from -> to.
std::vector<std::size_t> weak_path(const BoolMatrix& weak, std::size_t from,
                                   std::size_t to) {
  const std::size_t n = weak.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, kNone);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] == kNone) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && weak(v, u) && parent[u] == kNone) {
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

RpGraph build_graph(const Matrix& expenditure, double tol_edge) {
  const std::size_t n = expenditure.rows();
  RpGraph g{n, BoolMatrix(n), BoolMatrix(n), BoolMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double e = i == j ? 1.0 : expenditure(i, j);
      g.weak.set(i, j, e <= 1.0 + tol_edge);
      g.strict.set(i, j, e < 1.0 - tol_edge);
      g.closure.set(i, j, i == j || g.weak(i, j));
    }
  }
  // Warshall over all intermediate vertices.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!g.closure(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (g.closure(k, j)) g.closure.set(i, j, true);
      }
    }
  }
  return g;
}

GarpVerdict check_garp(const Matrix& expenditure, double tol_edge) {
  const RpGraph g = build_graph(expenditure, tol_edge);
  for (std::size_t i = 0; i < g.size; ++i) {
    for (std::size_t j = 0; j < g.size; ++j) {
      if (g.closure(i, j) && g.strict(j, i)) {
        std::vector<std::size_t> cycle = weak_path(g.weak, i, j);
        cycle.push_back(i);
        return {false, std::move(cycle)};
      }
    }
  }
  return {true, std::nullopt};
}

GarpVerdict check_garp(const Dataset& dataset, double tol_edge) {
  return check_garp(expenditure_matrix(dataset), tol_edge);
}

bool has_directed_cycle(const BoolMatrix& adjacency) {
  // Kahn's algorithm; self-loops are ignored.
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacency(i, j)) ++indegree[j];
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && adjacency(v, u) && --indegree[u] == 0) ready.push_back(u);
    }
  }
  return removed < n;
}

bool has_directed_cycle(const RpGraph& graph) { return has_directed_cycle(graph.weak); }

boost::multiprecision::cpp_int enumerate_cycles(std::size_t t) {
  using boost::multiprecision::cpp_int;
  if (t < 2) throw DomainError("cycle count needs T >= 2");
  // Term L is T! / ((T - L)! L); build T (T-1) ... (T-L+1) incrementally.
  cpp_int total = 0;
  cpp_int falling = t;
  for (std::size_t len = 2; len <= t; ++len) {
    falling *= (t - len + 1);
    total += falling / len;
  }
  return total;
}

bool GarpKernel::satisfied(const Matrix& expenditure, double tol_edge) {
  const std::size_t n = expenditure.rows();
  words_ = (n + 63) / 64;
  reach_.assign(n * words_, 0);
  const auto bit = [](std::size_t j) { return std::uint64_t{1} << (j % 64); };
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t* row = reach_.data() + i * words_;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || expenditure(i, j) <= 1.0 + tol_edge) row[j / 64] |= bit(j);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* via = reach_.data() + k * words_;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t* row = reach_.data() + i * words_;
      if (i == k || !(row[k / 64] & bit(k))) continue;
      for (std::size_t w = 0; w < words_; ++w) row[w] |= via[w];
    }
  }
  // Violation: i R j and j P0 i.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j && expenditure(j, i) < 1.0 - tol_edge &&
          (reach_[i * words_ + j / 64] & bit(j))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rparea
