#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the graph container.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgi/candidates.hpp"
#include "sgi/graph.hpp"

namespace sgi::oracle {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// ---- matching ----------------------------------------------------------

// Every |V_q|-subset of g that admits an injective map from q respecting the
// summed per-pair multiplicity lower bounds.
inline std::set<std::vector<std::string>> matches(const Multigraph& g, const QueryGraph& q) {
  const Multigraph& p = *q.pattern;
  const std::size_t k = p.node_count(), n = g.node_count();
  std::vector<std::vector<std::uint32_t>> req(k, std::vector<std::uint32_t>(k, 0));
  for (EdgeIndex e = 0; e < p.edge_count(); ++e) {
    req[p.edge(e).u][p.edge(e).v] += q.min_multiplicity[e];
    req[p.edge(e).v][p.edge(e).u] += q.min_multiplicity[e];
  }
  std::vector<std::vector<std::uint32_t>> mult(n, std::vector<std::uint32_t>(n, 0));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    ++mult[g.edge(e).u][g.edge(e).v];
    ++mult[g.edge(e).v][g.edge(e).u];
  }
  std::set<std::vector<std::string>> out;
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<NodeIndex> subset;
    for (NodeIndex v = 0; v < n; ++v)
      if (pick[v]) subset.push_back(v);
    std::vector<NodeIndex> perm = subset;
    bool found = false;
    do {
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a)
        for (std::size_t b = a + 1; b < k && ok; ++b)
          if (req[a][b] > mult[perm[a]][perm[b]]) ok = false;
      found = ok;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    if (found) {
      std::vector<std::string> ids;
      for (NodeIndex v : subset) ids.push_back(g.node_id(v));
      std::sort(ids.begin(), ids.end());
      out.insert(ids);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// ---- maximum common connected edge subgraph ----------------------------

struct McsSize {
  std::size_t edges = 0;
  std::size_t nodes = 0;
  auto operator<=>(const McsSize&) const = default;
};

inline std::vector<std::vector<bool>> adjacency_matrix(const Subgraph& s) {
  const Multigraph& g = s.parent();
  std::vector<NodeIndex> nodes(s.nodes().begin(), s.nodes().end());
  auto local = [&](NodeIndex v) { return std::find(nodes.begin(), nodes.end(), v) - nodes.begin(); };
  std::vector<std::vector<bool>> adj(nodes.size(), std::vector<bool>(nodes.size(), false));
  for (EdgeIndex e : s.edges()) {
    const auto a = local(g.edge(e).u), b = local(g.edge(e).v);
    adj[a][b] = adj[b][a] = true;
  }
  return adj;
}

// Over every full injective map from the smaller operand into the larger,
// the best connected component of the common edge set. Any connected common
// subgraph extends to such a map without losing edges, so this is exact.
inline McsSize mcs_size(std::vector<std::vector<bool>> a, std::vector<std::vector<bool>> b) {
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t n = a.size(), m = b.size();
  McsSize best;
  std::vector<std::size_t> img(n);
  std::vector<bool> used(m, false);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) {
      std::vector<int> comp(n, -1);
      for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        McsSize here;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(s);
        std::size_t twice = 0;
        while (!stack.empty()) {
          const auto u = stack.back();
          stack.pop_back();
          ++here.nodes;
          for (std::size_t v = 0; v < n; ++v) {
            if (!(a[u][v] && b[img[u]][img[v]])) continue;
            ++twice;
            if (comp[v] < 0) {
              comp[v] = static_cast<int>(s);
              stack.push_back(v);
            }
          }
        }
        here.edges = twice / 2;
        if (here.edges > 0 && here > best) best = here;
      }
      return;
    }
    for (std::size_t w = 0; w < m; ++w) {
      if (used[w]) continue;
      used[w] = true;
      img[x] = w;
      rec(x + 1);
      used[w] = false;
    }
  };
  rec(0);
  return best;
}

// ---- evaluation --------------------------------------------------------

// Exact value of a finite double.
inline Rational exact(double x) {
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  BigInt num(scaled);
  exp -= 53;
  if (exp >= 0) return Rational(num << exp);
  BigInt den = BigInt(1) << (-exp);
  return Rational(num, den);
}

using Group = std::set<std::string>;

// gamma = +inf is treated as "always below".
inline bool below(std::size_t a, std::size_t b, double gamma) {
  if (std::isinf(gamma)) return true;
  return Rational(static_cast<long long>(a), static_cast<long long>(b)) < exact(gamma);
}

inline bool match(const Group& pred, const Group& truth, double gx, double gm, double gs) {
  std::vector<std::string> extra, missing;
  std::set_difference(pred.begin(), pred.end(), truth.begin(), truth.end(), std::back_inserter(extra));
  std::set_difference(truth.begin(), truth.end(), pred.begin(), pred.end(), std::back_inserter(missing));
  const std::size_t n = truth.size();
  const std::size_t diff = pred.size() > n ? pred.size() - n : n - pred.size();
  return below(extra.size(), n, gx) && below(missing.size(), n, gm) && below(diff, n, gs);
}

struct Scores {
  Rational precision;
  Rational recall;
};

// Enumerates every (prediction, truth) pair; empty preds score 0.
inline Scores score(const std::vector<Group>& preds, const std::vector<Group>& truth, double gx, double gm,
                    double gs) {
  long long p_hits = 0, r_hits = 0;
  for (const auto& p : preds) {
    bool any = false;
    for (const auto& t : truth) any = any || match(p, t, gx, gm, gs);
    p_hits += any;
  }
  for (const auto& t : truth) {
    bool any = false;
    for (const auto& p : preds) any = any || match(p, t, gx, gm, gs);
    r_hits += any;
  }
  Scores s;
  s.precision = preds.empty() ? Rational(0) : Rational(p_hits, static_cast<long long>(preds.size()));
  s.recall = truth.empty() ? Rational(0) : Rational(r_hits, static_cast<long long>(truth.size()));
  return s;
}

// ---- features ----------------------------------------------------------

// Simple-projection adjacency and multi-degrees of a subgraph.
struct Local {
  std::size_t n = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> degree;
};

inline Local local_view(const Subgraph& s) {
  const Multigraph& g = s.parent();
  std::vector<NodeIndex> nodes(s.nodes().begin(), s.nodes().end());
  auto local = [&](NodeIndex v) { return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), v) - nodes.begin()); };
  Local l;
  l.n = nodes.size();
  l.mult.assign(l.n, std::vector<int>(l.n, 0));
  l.degree.assign(l.n, 0);
  for (EdgeIndex e : s.edges()) {
    const auto a = local(g.edge(e).u), b = local(g.edge(e).v);
    ++l.mult[a][b];
    ++l.mult[b][a];
    ++l.degree[a];
    ++l.degree[b];
  }
  return l;
}

// 3 * triangles / connected triples, by explicit triple enumeration.
inline double transitivity(const Local& l) {
  long long triangles = 0, triples = 0;
  for (std::size_t a = 0; a < l.n; ++a)
    for (std::size_t b = a + 1; b < l.n; ++b)
      for (std::size_t c = b + 1; c < l.n; ++c) {
        const int ab = l.mult[a][b] > 0, bc = l.mult[b][c] > 0, ac = l.mult[a][c] > 0;
        const int k = ab + bc + ac;
        if (k == 3) {
          ++triangles;
          triples += 3;
        } else if (k == 2) {
          ++triples;
        }
      }
  return triples == 0 ? 0.0 : 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

// Floyd-Warshall hop distances; mean over connected pairs.
inline double mean_path(const Local& l) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(l.n, std::vector<int>(l.n, inf));
  for (std::size_t a = 0; a < l.n; ++a) {
    d[a][a] = 0;
    for (std::size_t b = 0; b < l.n; ++b)
      if (l.mult[a][b] > 0) d[a][b] = 1;
  }
  for (std::size_t k = 0; k < l.n; ++k)
    for (std::size_t a = 0; a < l.n; ++a)
      for (std::size_t b = 0; b < l.n; ++b) d[a][b] = std::min(d[a][b], d[a][k] + d[k][b]);
  double sum = 0;
  long long pairs = 0;
  for (std::size_t a = 0; a < l.n; ++a)
    for (std::size_t b = a + 1; b < l.n; ++b)
      if (d[a][b] < inf) {
        sum += d[a][b];
        ++pairs;
      }
  return pairs == 0 ? 0.0 : sum / static_cast<double>(pairs);
}

// Pearson correlation of multi-degrees over both orientations of every
// edge copy.
inline double assortativity(const Local& l) {
  std::vector<double> x, y;
  for (std::size_t a = 0; a < l.n; ++a)
    for (std::size_t b = 0; b < l.n; ++b)
      for (int k = 0; k < l.mult[a][b]; ++k) {
        x.push_back(l.degree[a]);
        y.push_back(l.degree[b]);
      }
  if (x.empty()) return 0.0;
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 1e-12 || syy <= 1e-12) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

// Local clustering on the simple projection; 0 below degree 2.
inline double clustering(const Local& l, std::size_t v) {
  std::vector<std::size_t> nb;
  for (std::size_t u = 0; u < l.n; ++u)
    if (l.mult[v][u] > 0) nb.push_back(u);
  if (nb.size() < 2) return 0.0;
  long long links = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) links += l.mult[nb[i]][nb[j]] > 0;
  const double k = static_cast<double>(nb.size());
  return 2.0 * static_cast<double>(links) / (k * (k - 1));
}

}  // namespace sgi::oracle
