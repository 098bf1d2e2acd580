#include "legkh/khovanov.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "legkh/error.hpp"
#include "legkh/smith.hpp"

namespace legkh {
namespace {

void check_size(const LinkDiagram& d, int max_crossings) {
  if (d.crossing_count() > max_crossings) {
    throw Error(ErrorKind::TooLarge, std::to_string(d.crossing_count()) + " crossings exceed the bound of " +
                                         std::to_string(max_crossings));
  }
}

// Circles of one complete resolution. Circles through crossings come first,
// numbered by their least arc; free loops follow.
struct Resolution {
  std::vector<int> arc_circle;
  std::vector<int> representative;  // an arc on each non-free circle
  int arc_circles = 0;
  int circles = 0;
};

Resolution resolve(const LinkDiagram& d, unsigned state) {
  std::vector<int> parent(d.arc_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < d.crossing_count(); ++c) {
    int a[4];
    for (int k = 0; k < 4; ++k) a[k] = d.arc_at({c, k});
    if ((state >> c) & 1U) {
      parent[find(a[1])] = find(a[2]);
      parent[find(a[3])] = find(a[0]);
    } else {
      parent[find(a[0])] = find(a[1]);
      parent[find(a[2])] = find(a[3]);
    }
  }
  Resolution res;
  std::vector<int> id_of_root(d.arc_count(), -1);
  res.arc_circle.resize(d.arc_count());
  for (int arc = 0; arc < d.arc_count(); ++arc) {
    int& id = id_of_root[find(arc)];
    if (id == -1) {
      id = res.arc_circles++;
      res.representative.push_back(arc);
    }
    res.arc_circle[arc] = id;
  }
  res.circles = res.arc_circles + d.free_loops();
  return res;
}

// Generators are (state, label) with label bit b set when circle b carries
// v_-; internal quantum degree q = deg + r with deg = circles - 2|label|.
class Cube {
 public:
  explicit Cube(const LinkDiagram& d) : d_(d), n_(d.crossing_count()), by_state_(1U << n_) {
    buckets_.resize(n_ + 1);
    index_.resize(by_state_.size());
    for (unsigned s = 0; s < by_state_.size(); ++s) {
      by_state_[s] = resolve(d, s);
      const int r = std::popcount(s);
      const int k = by_state_[s].circles;
      auto& index = index_[s];
      index.resize(std::size_t{1} << k);
      for (unsigned label = 0; label < index.size(); ++label) {
        index[label] = buckets_[r][q_of(r, k, label)]++;
      }
    }
  }

  int crossings() const { return n_; }
  const std::map<int, int>& sizes(int r) const { return buckets_[r]; }

  // Differential out of homological degree r, one block per q.
  std::map<int, SparseMatrix> differential(int r) const {
    std::map<int, SparseMatrix> blocks;
    if (r >= n_) return blocks;
    for (const auto& [q, size] : buckets_[r]) {
      auto it = buckets_[r + 1].find(q);
      blocks.emplace(q, SparseMatrix(size, it == buckets_[r + 1].end() ? 0 : it->second));
    }
    for (unsigned s = 0; s < by_state_.size(); ++s) {
      if (std::popcount(s) != r) continue;
      for (int c = 0; c < n_; ++c) {
        if ((s >> c) & 1U) continue;
        add_edge(blocks, r, s, c);
      }
    }
    return blocks;
  }

 private:
  static int q_of(int r, int k, unsigned label) { return k - 2 * std::popcount(label) + r; }

  void add_edge(std::map<int, SparseMatrix>& blocks, int r, unsigned s, int c) const {
    const unsigned t = s | (1U << c);
    const Resolution& from = by_state_[s];
    const Resolution& to = by_state_[t];
    const std::int64_t sign = std::popcount(s & ((1U << c) - 1U)) % 2 == 0 ? 1 : -1;
    const int a0 = d_.arc_at({c, 0});
    const int a1 = d_.arc_at({c, 1});
    const int a2 = d_.arc_at({c, 2});
    const int ca = from.arc_circle[a0];
    const int cb = from.arc_circle[a2];

    std::vector<int> image(from.circles);
    for (int x = 0; x < from.circles; ++x) {
      image[x] = x < from.arc_circles ? to.arc_circle[from.representative[x]] : to.arc_circles + (x - from.arc_circles);
    }
    auto carry = [&](unsigned label, int skip1, int skip2) {
      unsigned out = 0;
      for (int x = 0; x < from.circles; ++x) {
        if (x == skip1 || x == skip2) continue;
        if ((label >> x) & 1U) out |= 1U << image[x];
      }
      return out;
    };

    const auto& src_index = index_[s];
    const auto& dst_index = index_[t];
    for (unsigned label = 0; label < src_index.size(); ++label) {
      const int q = q_of(r, from.circles, label);
      SparseMatrix& block = blocks.at(q);
      const int row = src_index[label];
      const unsigned la = (label >> ca) & 1U;
      if (ca != cb) {
        const unsigned lb = (label >> cb) & 1U;
        if (la && lb) continue;
        const unsigned out = carry(label, ca, cb) | ((la | lb) << to.arc_circle[a0]);
        block.add(row, dst_index[out], sign);
      } else {
        const int x = to.arc_circle[a1];
        const int y = to.arc_circle[a0];
        const unsigned rest = carry(label, ca, -1);
        if (la) {
          block.add(row, dst_index[rest | (1U << x) | (1U << y)], sign);
        } else {
          block.add(row, dst_index[rest | (1U << y)], sign);
          block.add(row, dst_index[rest | (1U << x)], sign);
        }
      }
    }
  }

  const LinkDiagram& d_;
  int n_;
  std::vector<Resolution> by_state_;
  std::vector<std::vector<int>> index_;       // [state][label] -> row within its bucket
  std::vector<std::map<int, int>> buckets_;  // [r][q] -> generator count
};

template <class Job>
void run_parallel(std::size_t jobs, int threads, const Job& job) {
  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&]() {
    for (std::size_t k; (k = next++) < jobs;) {
      try {
        job(k);
      } catch (...) {
        std::lock_guard guard(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

bool differentials_compose_to_zero(const std::vector<std::map<int, SparseMatrix>>& diff) {
  for (std::size_t r = 0; r + 1 < diff.size(); ++r) {
    for (const auto& [q, m] : diff[r]) {
      auto next = diff[r + 1].find(q);
      if (next == diff[r + 1].end()) continue;
      if (!m.multiply(next->second).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

HomologyGroup BigradedTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? HomologyGroup{} : it->second;
}

void BigradedTable::set(int i, int j, HomologyGroup group) {
  if (group.is_zero()) {
    entries.erase({i, j});
  } else {
    entries[{i, j}] = std::move(group);
  }
}

BigradedTable khovanov_homology(const LinkDiagram& diagram, const KhovanovOptions& options) {
  check_size(diagram, options.max_crossings);
  const Cube cube(diagram);
  const int n = cube.crossings();
  std::vector<std::map<int, SparseMatrix>> diff(n + 1);
  for (int r = 0; r < n; ++r) diff[r] = cube.differential(r);
  if (options.check_d_squared && !differentials_compose_to_zero(diff)) {
    throw Error(ErrorKind::ConventionError, "cube differential does not square to zero");
  }

  struct Job {
    int r;
    int q;
    const SparseMatrix* matrix;
    SmithResult result;
  };
  std::vector<Job> jobs;
  for (int r = 0; r < n; ++r) {
    for (const auto& [q, m] : diff[r]) jobs.push_back({r, q, &m, {}});
  }
  // Biggest blocks first so the pool drains evenly.
  std::sort(jobs.begin(), jobs.end(),
            [](const Job& a, const Job& b) { return a.matrix->nonzeros() > b.matrix->nonzeros(); });
  run_parallel(jobs.size(), options.threads, [&](std::size_t k) { jobs[k].result = smith_normal_form(*jobs[k].matrix); });

  std::map<std::pair<int, int>, const SmithResult*> smith;
  for (const Job& job : jobs) smith[{job.r, job.q}] = &job.result;

  const int n_plus = diagram.positive_crossings();
  const int n_minus = diagram.negative_crossings();
  BigradedTable table;
  for (int r = 0; r <= n; ++r) {
    for (const auto& [q, dim] : cube.sizes(r)) {
      HomologyGroup h;
      h.free_rank = dim;
      if (auto out = smith.find({r, q}); out != smith.end()) h.free_rank -= out->second->rank;
      if (auto in = smith.find({r - 1, q}); in != smith.end()) {
        h.free_rank -= in->second->rank;
        h.torsion = in->second->torsion;
      }
      table.set(r - n_minus, q + n_plus - 2 * n_minus, std::move(h));
    }
  }
  return table;
}

BigradedTable chain_group_ranks(const LinkDiagram& diagram, int max_crossings) {
  check_size(diagram, max_crossings);
  const Cube cube(diagram);
  const int n_plus = diagram.positive_crossings();
  const int n_minus = diagram.negative_crossings();
  BigradedTable table;
  for (int r = 0; r <= cube.crossings(); ++r) {
    for (const auto& [q, dim] : cube.sizes(r)) table.set(r - n_minus, q + n_plus - 2 * n_minus, {dim, {}});
  }
  return table;
}

bool cube_differential_squares_to_zero(const LinkDiagram& diagram, int max_crossings) {
  check_size(diagram, max_crossings);
  const Cube cube(diagram);
  std::vector<std::map<int, SparseMatrix>> diff(cube.crossings() + 1);
  for (int r = 0; r < cube.crossings(); ++r) diff[r] = cube.differential(r);
  return differentials_compose_to_zero(diff);
}

int min_delta(const BigradedTable& table) {
  if (table.empty()) throw Error(ErrorKind::EmptyTable, "homology table has no nonzero group");
  int best = table.entries.begin()->first.second - table.entries.begin()->first.first;
  for (const auto& [ij, group] : table.entries) best = std::min(best, ij.second - ij.first);
  return best;
}

LaurentPoly graded_euler_characteristic(const BigradedTable& table) {
  LaurentPoly chi;
  for (const auto& [ij, group] : table.entries) chi.add(ij.second, (ij.first % 2 == 0 ? 1 : -1) * group.free_rank);
  return chi;
}

LaurentPoly kauffman_jones(const LinkDiagram& diagram, int max_crossings) {
  check_size(diagram, max_crossings);
  const int n = diagram.crossing_count();
  const LaurentPoly loop = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  std::vector<LaurentPoly> loop_power{LaurentPoly::monomial(0)};
  LaurentPoly sum;
  for (unsigned s = 0; s < (1U << n); ++s) {
    const int k = resolve(diagram, s).circles;
    while (static_cast<int>(loop_power.size()) <= k) loop_power.push_back(loop_power.back() * loop);
    const int r = std::popcount(s);
    sum += LaurentPoly::monomial(r, r % 2 == 0 ? 1 : -1) * loop_power[k];
  }
  const int n_plus = diagram.positive_crossings();
  const int n_minus = diagram.negative_crossings();
  return LaurentPoly::monomial(n_plus - 2 * n_minus, n_minus % 2 == 0 ? 1 : -1) * sum;
}

}  // namespace legkh
