#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chebyperm/integers.hpp"

namespace chebyperm {

using Permutation = std::vector<int>;  // images of 1..n, 1-based

inline void validate_permutation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) throw std::domain_error("permutation: empty");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : p) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::domain_error("permutation: not a bijection on 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

// max over positions of |p_i - q_i|.
inline int chebyshev_distance(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::domain_error("chebyshev distance: length mismatch");
  if (p.empty()) throw std::domain_error("chebyshev distance: empty input");
  int m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

inline constexpr int kBallMembersMaxN = 9;
inline constexpr int kGreedyCodeMaxN = 8;
inline constexpr int kExactCodeMaxN = 5;

// Every permutation within distance d of center, in lexicographic order.
// The count is independent of the center.
inline std::vector<Permutation> ball_members(int d, int n, const Permutation& center) {
  if (d < 0) throw std::domain_error("ball members: d must be non-negative");
  if (n < 1) throw std::domain_error("ball members: n must be positive");
  if (n > kBallMembersMaxN) throw CapacityError("ball members: n exceeds limit");
  if (static_cast<int>(center.size()) != n)
    throw std::domain_error("ball members: center length differs from n");
  validate_permutation(center);
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do {
    if (chebyshev_distance(p, center) <= d) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct Code {
  int n = 0;
  int min_distance = 0;
  std::vector<Permutation> words;

  friend bool operator==(const Code&, const Code&) = default;
};

enum class ScanOrder { lex, revlex };

// First-fit code: scan S_n in the given order and admit every word at
// distance >= min_dist from all words admitted so far.  The result depends
// on the scan order, which is why the order is an explicit argument.
inline Code greedy_code(int n, int min_dist, ScanOrder order = ScanOrder::lex) {
  if (n < 1) throw std::domain_error("greedy code: n must be positive");
  if (min_dist < 1 || min_dist > n)
    throw std::domain_error("greedy code: requires 1 <= min_dist <= n");
  if (n > kGreedyCodeMaxN) throw CapacityError("greedy code: n exceeds limit");
  Code code{n, min_dist, {}};
  Permutation p = identity_permutation(n);
  if (order == ScanOrder::revlex) std::reverse(p.begin(), p.end());
  do {
    bool far = true;
    // distinct permutations are always at distance >= 1
    if (min_dist > 1)
      for (const auto& w : code.words)
        if (chebyshev_distance(p, w) < min_dist) {
          far = false;
          break;
        }
    if (far) code.words.push_back(p);
  } while (order == ScanOrder::lex ? std::next_permutation(p.begin(), p.end())
                                   : std::prev_permutation(p.begin(), p.end()));
  return code;
}

// Maximum-size code by branch and bound over the compatibility graph
// (vertices all of S_n, edges between words at distance >= min_dist).
// Vertices are expanded in degeneracy order.  The bound greedily colors
// the candidate set: a clique takes at most one vertex per color class, so
// a branch dies when clique size plus the candidate's color number cannot
// beat the best code found.  Words of the returned code are sorted
// lexicographically.
inline Code exact_max_code(int n, int min_dist) {
  if (n < 1) throw std::domain_error("exact code: n must be positive");
  if (min_dist < 1 || min_dist > n)
    throw std::domain_error("exact code: requires 1 <= min_dist <= n");
  if (n > kExactCodeMaxN) throw CapacityError("exact code: n exceeds limit");

  std::vector<Permutation> verts;
  {
    Permutation p = identity_permutation(n);
    do {
      verts.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const std::size_t nv = verts.size();
  std::vector<boost::dynamic_bitset<>> adj(nv, boost::dynamic_bitset<>(nv));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      if (chebyshev_distance(verts[i], verts[j]) >= min_dist) {
        adj[i].set(j);
        adj[j].set(i);
      }

  // degeneracy order, smallest residual degree first, index as tie-break
  std::vector<std::size_t> order;
  order.reserve(nv);
  {
    std::vector<char> removed(nv, 0);
    std::vector<std::size_t> deg(nv);
    for (std::size_t v = 0; v < nv; ++v) deg[v] = adj[v].count();
    for (std::size_t step = 0; step < nv; ++step) {
      std::size_t pick = nv;
      for (std::size_t v = 0; v < nv; ++v)
        if (!removed[v] && (pick == nv || deg[v] < deg[pick])) pick = v;
      removed[pick] = 1;
      order.push_back(pick);
      for (std::size_t u = adj[pick].find_first(); u != boost::dynamic_bitset<>::npos;
           u = adj[pick].find_next(u))
        if (!removed[u]) --deg[u];
    }
  }

  // relabel so candidate sets index positions in the order
  std::vector<std::size_t> pos(nv);
  for (std::size_t i = 0; i < nv; ++i) pos[order[i]] = i;
  std::vector<boost::dynamic_bitset<>> radj(nv, boost::dynamic_bitset<>(nv));
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t u = adj[v].find_first(); u != boost::dynamic_bitset<>::npos;
         u = adj[v].find_next(u))
      radj[pos[v]].set(pos[u]);

  std::vector<std::size_t> cur, best;
  const auto expand = [&](auto&& self, boost::dynamic_bitset<> cand) -> void {
    if (cur.size() > best.size()) best = cur;
    if (!cand.any()) return;

    // Greedy coloring in position order; verts comes out sorted by color.
    std::vector<boost::dynamic_bitset<>> classes;
    for (std::size_t v = cand.find_first(); v != boost::dynamic_bitset<>::npos;
         v = cand.find_next(v)) {
      std::size_t k = 0;
      while (k < classes.size() && classes[k].intersects(radj[v])) ++k;
      if (k == classes.size()) classes.emplace_back(nv);
      classes[k].set(v);
    }
    std::vector<std::size_t> verts, colors;
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (std::size_t v = classes[k].find_first(); v != boost::dynamic_bitset<>::npos;
           v = classes[k].find_next(v)) {
        verts.push_back(v);
        colors.push_back(k + 1);
      }

    // Highest color first; colors only shrink leftward, so one prune ends
    // the whole branch.
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (cur.size() + colors[i] <= best.size()) return;
      const std::size_t v = verts[i];
      cur.push_back(v);
      self(self, cand & radj[v]);
      cur.pop_back();
      cand.reset(v);
    }
  };
  boost::dynamic_bitset<> all(nv);
  all.set();
  expand(expand, std::move(all));

  Code code{n, min_dist, {}};
  for (std::size_t i : best) code.words.push_back(verts[order[i]]);
  std::sort(code.words.begin(), code.words.end());
  return code;
}

}  // namespace chebyperm
