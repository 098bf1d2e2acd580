#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "legkh/error.hpp"

#ifndef LEGKH_CORPUS_DIR
#error "LEGKH_CORPUS_DIR must point at tests/data/corpus"
#endif

namespace oracle {

using legkh::EdgeLabel;
using legkh::EdgeSet;
using legkh::LaurentPoly;
using legkh::TaitGraph;

namespace {

std::int64_t bareiss_det(std::vector<std::vector<std::int64_t>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_tree(const TaitGraph& g, const EdgeSet& edges) {
  if (static_cast<int>(edges.size()) != g.vertex_count() - 1) return false;
  std::vector<int> comp(g.vertex_count());
  std::iota(comp.begin(), comp.end(), 0);
  for (int e : edges) {
    const int a = comp[g.edge(e).tail];
    const int b = comp[g.edge(e).head];
    if (a == b) return false;
    for (int& c : comp) {
      if (c == b) c = a;
    }
  }
  return true;
}

}  // namespace

std::int64_t kirchhoff_tree_count(const TaitGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::int64_t>> lap(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.tail == e.head) continue;
    lap[e.tail][e.tail] += 1;
    lap[e.head][e.head] += 1;
    lap[e.tail][e.head] -= 1;
    lap[e.head][e.tail] -= 1;
  }
  std::vector<std::vector<std::int64_t>> minor(n - 1, std::vector<std::int64_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
  }
  return bareiss_det(minor);
}

bool exchangeable(const TaitGraph& g, const EdgeSet& tree, int e, int f) {
  EdgeSet swapped;
  for (int x : tree) {
    if (x != e) swapped.push_back(x);
  }
  swapped.push_back(f);
  return is_tree(g, swapped);
}

std::vector<EdgeLabel> exchange_labels(const TaitGraph& g, const EdgeSet& tree) {
  std::vector<EdgeLabel> labels(g.edge_count());
  const auto in_tree = [&](int e) { return std::find(tree.begin(), tree.end(), e) != tree.end(); };
  for (int e = 0; e < g.edge_count(); ++e) {
    const bool negative = g.edge(e).sign < 0;
    bool active = true;
    for (int f = 0; f < g.edge_count(); ++f) {
      if (f == e || in_tree(f) == in_tree(e) || g.edge(f).order > g.edge(e).order) continue;
      // A lower edge on the other side that can replace e makes e inactive.
      if (in_tree(e) ? exchangeable(g, tree, e, f) : exchangeable(g, tree, f, e)) active = false;
    }
    int code = (in_tree(e) ? 0 : 4) + (active ? 0 : 2) + (negative ? 1 : 0);
    labels[e] = static_cast<EdgeLabel>(code);
  }
  return labels;
}

std::vector<EdgeSet> brute_force_trees(const TaitGraph& g) {
  std::vector<EdgeSet> out;
  const int m = g.edge_count();
  const int need = g.vertex_count() - 1;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (__builtin_popcount(mask) != need) continue;
    EdgeSet edges;
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1U) edges.push_back(e);
    }
    if (is_tree(g, edges)) out.push_back(edges);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly pd_bracket_jones(const std::vector<std::array<int, 4>>& pd, int writhe) {
  const int n = static_cast<int>(pd.size());
  if (n == 0) return LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  int labels = 0;
  for (const auto& x : pd) labels = std::max({labels, x[0], x[1], x[2], x[3]});
  LaurentPoly sum;
  const LaurentPoly loop = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  for (std::uint32_t state = 0; state < (1U << n); ++state) {
    std::map<int, std::vector<int>> link;
    for (int c = 0; c < n; ++c) {
      const auto& x = pd[c];
      const bool b = (state >> c) & 1U;
      const int p = b ? x[1] : x[0], q = b ? x[2] : x[1];
      const int r = b ? x[3] : x[2], s = b ? x[0] : x[3];
      link[p].push_back(q);
      link[q].push_back(p);
      link[r].push_back(s);
      link[s].push_back(r);
    }
    std::vector<bool> seen(labels + 1, false);
    int circles = 0;
    for (const auto& [start, _] : link) {
      if (seen[start]) continue;
      ++circles;
      std::vector<int> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (int next : link[at]) {
          if (!seen[next]) {
            seen[next] = true;
            stack.push_back(next);
          }
        }
      }
    }
    LaurentPoly term = LaurentPoly::monomial(__builtin_popcount(state), __builtin_popcount(state) % 2 ? -1 : 1);
    for (int k = 0; k < circles; ++k) term = term * loop;
    sum += term;
  }
  const int n_plus = (n + writhe) / 2;
  const int n_minus = (n - writhe) / 2;
  return LaurentPoly::monomial(n_plus - 2 * n_minus, n_minus % 2 ? -1 : 1) * sum;
}

LaurentPoly torus_knot_jones(int p, int q) {
  // V(t) = t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)
  const int top = p + q;
  std::vector<std::int64_t> num(top + 1, 0);
  num[0] += 1;
  num[p + 1] -= 1;
  num[q + 1] -= 1;
  num[p + q] += 1;
  std::vector<std::int64_t> quot(top + 1, 0);
  for (int k = 0; k <= top; ++k) quot[k] = num[k] + (k >= 2 ? quot[k - 2] : 0);
  LaurentPoly v;
  const int shift = (p - 1) * (q - 1) / 2;
  for (int k = 0; k <= top - 2; ++k) v.add(2 * (k + shift), quot[k]);
  return (LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)) * v;
}

std::vector<int> match_by_edge_ids(const TaitGraph& g, const TaitGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return {};
  if (g.edge_count() == 0) return {0};
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).sign != h.edge(e).sign || g.edge(e).order != h.edge(e).order) return {};
  }
  for (int start : {h.edge(0).tail, h.edge(0).head}) {
    std::vector<int> map(g.vertex_count(), -1);
    map[g.edge(0).tail] = start;
    bool ok = true;
    bool grew = true;
    while (ok && grew) {
      grew = false;
      for (int e = 0; e < g.edge_count() && ok; ++e) {
        const auto& a = g.edge(e);
        const auto& b = h.edge(e);
        auto force = [&](int known, int other) {
          const int image = map[known];
          if (image != b.tail && image != b.head) {
            ok = false;
          } else if (map[other] == -1) {
            map[other] = image == b.tail ? b.head : b.tail;
            grew = true;
          }
        };
        if (map[a.tail] != -1) force(a.tail, a.head);
        else if (map[a.head] != -1) force(a.head, a.tail);
      }
    }
    if (!ok || std::count(map.begin(), map.end(), -1) > 0) continue;
    bool all = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      const int x = map[g.edge(e).tail], y = map[g.edge(e).head];
      const auto& b = h.edge(e);
      if (!((x == b.tail && y == b.head) || (x == b.head && y == b.tail))) all = false;
    }
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (sorted[v] != v) all = false;
    }
    if (all) return map;
  }
  return {};
}

legkh::SmithResult minors_smith(const std::vector<std::vector<std::int64_t>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  legkh::SmithResult out;
  std::int64_t previous = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    // Iterate over all k-subsets of rows and columns.
    std::vector<bool> rs(rows, false), cs(cols, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        std::vector<std::vector<std::int64_t>> sub;
        for (int i = 0; i < rows; ++i) {
          if (!rs[i]) continue;
          auto& row = sub.emplace_back();
          for (int j = 0; j < cols; ++j) {
            if (cs[j]) row.push_back(m[i][j]);
          }
        }
        g = std::gcd(g, bareiss_det(sub));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    out.rank = k;
    if (g / previous > 1) out.torsion.push_back(g / previous);
    previous = g;
  }
  return out;
}

std::string random_front_word(std::mt19937& rng, int cusp_pairs, int crossings) {
  int left = cusp_pairs, right = cusp_pairs, cross = crossings, strands = 0;
  std::ostringstream word;
  while (left + right + cross > 0) {
    std::vector<char> options;
    if (left > 0) options.push_back('L');
    if (right > 0 && strands >= 2 && !(cross > 0 && left == 0 && strands == 2)) options.push_back('R');
    if (cross > 0 && strands >= 2) options.push_back('X');
    const char c = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    int p = 1;
    if (c == 'L') {
      p = std::uniform_int_distribution<int>(1, strands + 1)(rng);
      strands += 2;
      --left;
    } else {
      p = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      if (c == 'R') {
        strands -= 2;
        --right;
      } else {
        --cross;
      }
    }
    word << c << p << ' ';
  }
  return word.str();
}

legkh::FrontDiagram random_front(std::mt19937& rng, int cusp_pairs, int crossings) {
  for (;;) {
    try {
      return legkh::parse_front(random_front_word(rng, cusp_pairs, crossings));
    } catch (const legkh::Error& e) {
      if (e.kind() != legkh::ErrorKind::Disconnected) throw;
    }
  }
}

std::filesystem::path corpus_dir() { return LEGKH_CORPUS_DIR; }

namespace {
std::string read_front_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string text, line;
  while (std::getline(in, line)) text += line.substr(0, line.find('#')) + "\n";
  return text;
}
}  // namespace

std::vector<CorpusEntry> load_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
    if (entry.path().extension() == ".front") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back({f.stem().string(), legkh::parse_front(read_front_file(f))});
  return out;
}

legkh::FrontDiagram corpus_front(const std::string& name) {
  return legkh::parse_front(read_front_file(corpus_dir() / (name + ".front")));
}

}  // namespace oracle
