#include "quasif/transversal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace quasif {

namespace {

struct Searcher {
  std::vector<std::uint64_t> edges;
  std::vector<std::uint64_t> out;

  // hit[e] = |edges[e] & chosen|.  A chosen vertex u stays justified while
  // some edge has u as its only chosen vertex.
  void rec(std::uint64_t chosen, std::uint64_t cand, std::vector<int> hit) {
    std::size_t first_unhit = edges.size();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (hit[e] == 0) {
        first_unhit = e;
        break;
      }
    }
    if (first_unhit == edges.size()) {
      out.push_back(chosen);
      return;
    }

    std::uint64_t branch = cand & edges[first_unhit];
    cand &= ~branch;
    while (branch) {
      std::uint64_t vbit = branch & (~branch + 1);
      branch &= branch - 1;

      std::uint64_t next = chosen | vbit;
      std::uint64_t critical = 0;  // vertices that are sole coverers of some edge
      for (std::size_t e = 0; e < edges.size(); ++e) {
        std::uint64_t inter = edges[e] & next;
        if (std::popcount(inter) == 1) critical |= inter;
      }
      if ((critical & chosen) == chosen) {
        std::vector<int> next_hit = hit;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (edges[e] & vbit) ++next_hit[e];
        }
        rec(next, cand, std::move(next_hit));
      }
      // Re-admit v for the remaining branches: sets containing both v and a
      // later vertex of this edge are enumerated under the later vertex.
      cand |= vbit;
    }
  }
};

}  // namespace

std::vector<Monomial> minimal_transversals(int n, std::span<const Monomial> edges) {
  check_var_count(n);
  if (edges.empty()) return {Monomial()};

  Searcher s;
  s.edges.reserve(edges.size());
  std::uint64_t vertex_pool = 0;
  for (const Monomial& e : edges) {
    if (e.empty()) return {};
    s.edges.push_back(e.mask());
    vertex_pool |= e.mask();
  }
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());

  s.rec(0, vertex_pool, std::vector<int>(s.edges.size(), 0));

  std::vector<Monomial> result;
  result.reserve(s.out.size());
  for (std::uint64_t m : s.out) result.push_back(Monomial::from_mask(m));
  std::sort(result.begin(), result.end());
  return result;
}

int min_transversal_size(int n, std::span<const Monomial> edges) {
  auto all = minimal_transversals(n, edges);
  if (all.empty()) return -1;
  int best = Monomial::kMaxVars + 1;
  for (const Monomial& t : all) best = std::min(best, t.degree());
  return best;
}

}  // namespace quasif
