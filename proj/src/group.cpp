#include "rbhopf/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>
#include <utility>

namespace rbhopf {

Report validate_group_table(const std::vector<std::vector<int>>& cayley) {
  Report rep{"group-table", {}};
  const int n = static_cast<int>(cayley.size());
  auto bad = [&rep](std::vector<std::string> labels, std::string what) {
    rep.violations.push_back({std::move(labels), {{std::move(what), "1"}}, {}});
  };
  if (n == 0) {
    bad({}, "empty table");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cayley[i].size()) != n) {
      bad({std::to_string(i)}, "row length mismatch");
      return rep;
    }
    for (int j = 0; j < n; ++j)
      if (cayley[i][j] < 0 || cayley[i][j] >= n) {
        bad({std::to_string(i), std::to_string(j)}, "entry out of range");
        return rep;
      }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[cayley[i][j]]) bad({std::to_string(i)}, "row is not a permutation");
      row[cayley[i][j]] = true;
      if (col[cayley[j][i]]) bad({std::to_string(i)}, "column is not a permutation");
      col[cayley[j][i]] = true;
    }
  }
  if (!rep.ok()) return rep;
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool is_id = true;
    for (int g = 0; g < n; ++g)
      if (cayley[e][g] != g || cayley[g][e] != g) {
        is_id = false;
        break;
      }
    if (is_id) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    bad({}, "no identity element");
    return rep;
  }
  for (int g = 0; g < n; ++g) {
    bool has_inv = false;
    for (int h = 0; h < n; ++h)
      if (cayley[g][h] == identity && cayley[h][g] == identity) has_inv = true;
    if (!has_inv) bad({std::to_string(g)}, "no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          rep.violations.push_back({{std::to_string(a), std::to_string(b), std::to_string(c)},
                                    {{"associativity", "violated"}},
                                    {}});
  return rep;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> names)
    : cayley_(std::move(cayley)), names_(std::move(names)) {
  Report rep = validate_group_table(cayley_);
  if (!rep.ok()) throw std::invalid_argument("FiniteGroup: table is not a group");
  const int n = order();
  if (static_cast<int>(names_.size()) != n)
    throw std::invalid_argument("FiniteGroup: names/order mismatch");
  std::set<std::string> uniq(names_.begin(), names_.end());
  if (static_cast<int>(uniq.size()) != n)
    throw std::invalid_argument("FiniteGroup: duplicate element names");
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool is_id = true;
    for (int g = 0; g < n; ++g)
      if (cayley_[e][g] != g || cayley_[g][e] != g) is_id = false;
    if (is_id) identity_ = e;
  }
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (cayley_[g][h] == identity_ && cayley_[h][g] == identity_) inverse_[g] = h;
}

void FiniteGroup::check_index(int i) const {
  if (i < 0 || i >= order()) throw std::out_of_range("FiniteGroup: element index out of range");
}

int FiniteGroup::mul(int a, int b) const {
  check_index(a);
  check_index(b);
  return cayley_[a][b];
}

int FiniteGroup::inv(int a) const {
  check_index(a);
  return inverse_[a];
}

const std::string& FiniteGroup::name(int i) const {
  check_index(i);
  return names_[static_cast<std::size_t>(i)];
}

bool FiniteGroup::is_subgroup(const std::vector<int>& subset) const {
  std::set<int> s(subset.begin(), subset.end());
  if (s.size() != subset.size()) return false;
  if (!s.count(identity_)) return false;
  for (int a : s) {
    if (a < 0 || a >= order()) return false;
    if (!s.count(inv(a))) return false;
    for (int b : s)
      if (!s.count(mul(a, b))) return false;
  }
  return true;
}

static void check_map(const FiniteGroup& g, const GroupMap& b) {
  if (static_cast<int>(b.image.size()) != g.order())
    throw std::invalid_argument("GroupMap: image length must equal group order");
  for (int v : b.image)
    if (v < 0 || v >= g.order()) throw std::out_of_range("GroupMap: image out of range");
}

Report check_rb_group(const FiniteGroup& g, const GroupMap& b) {
  check_map(g, b);
  Report rep{"rb-group", {}};
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int lhs = g.mul(b.image[x], b.image[y]);
      int arg = g.mul(g.mul(x, b.image[x]), g.mul(y, g.inv(b.image[x])));
      int rhs = b.image[arg];
      if (lhs != rhs)
        rep.violations.push_back({{g.name(x), g.name(y)},
                                  {{g.name(lhs), "1"}},
                                  {{g.name(rhs), "1"}}});
    }
  return rep;
}

namespace {

// DFS over image arrays in increasing value order. A pair (x,y) is checkable
// once B(x), B(y) and B(arg(x,y)) are all assigned; on assigning position p
// we check exactly the pairs that become checkable then, so every full array
// reaching the bottom has passed the identity on all pairs.
class RbSearch {
 public:
  RbSearch(const FiniteGroup& g, int fixed_pos, int fixed_val)
      : g_(g), fixed_pos_(fixed_pos), fixed_val_(fixed_val), image_(g.order(), -1) {}

  std::vector<GroupMap> run() {
    dfs(0);
    return std::move(found_);
  }

 private:
  int arg_of(int x, int y) const {
    int bx = image_[x];
    return g_.mul(g_.mul(x, bx), g_.mul(y, g_.inv(bx)));
  }

  bool pair_ok(int x, int y) const {
    int a = arg_of(x, y);
    if (image_[a] < 0) return true;  // deferred until B(a) is assigned
    return g_.mul(image_[x], image_[y]) == image_[a];
  }

  bool consistent_after(int p) {
    for (int h = 0; h <= p; ++h) {
      if (!pair_ok(p, h)) return false;
      if (!pair_ok(h, p)) return false;
    }
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        if (arg_of(x, y) == p && g_.mul(image_[x], image_[y]) != image_[p]) return false;
    return true;
  }

  void dfs(int p) {
    const int n = g_.order();
    if (p == n) {
      found_.push_back(GroupMap{image_});
      return;
    }
    int lo = 0, hi = n - 1;
    if (p == fixed_pos_) lo = hi = fixed_val_;
    for (int v = lo; v <= hi; ++v) {
      image_[p] = v;
      if (consistent_after(p)) dfs(p + 1);
    }
    image_[p] = -1;
  }

  const FiniteGroup& g_;
  int fixed_pos_, fixed_val_;
  std::vector<int> image_;
  std::vector<GroupMap> found_;
};

int worker_count(int requested, int slices) {
  int w = requested;
  if (w <= 0) {
    if (const char* env = std::getenv("RBHOPF_THREADS")) w = std::atoi(env);
  }
  if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
  if (w <= 0) w = 1;
  return std::min(w, slices);
}

}  // namespace

std::vector<GroupMap> enumerate_rb_group(const FiniteGroup& g, int cap, int workers) {
  const int n = g.order();
  if (n > cap)
    throw BudgetExceeded("enumerate_rb_group: order " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
  // Partition by the image of the first non-identity element; each slice is
  // an independent DFS and results are concatenated in slice order.
  int part = (g.identity() == 0 && n > 1) ? 1 : 0;
  std::vector<std::vector<GroupMap>> slices(static_cast<std::size_t>(n));
  const int w = worker_count(workers, n);
  std::vector<std::thread> pool;
  int next = 0;
  std::mutex mtx;
  auto body = [&]() {
    for (;;) {
      int v;
      {
        std::lock_guard<std::mutex> lk(mtx);
        if (next >= n) return;
        v = next++;
      }
      slices[static_cast<std::size_t>(v)] = RbSearch(g, part, v).run();
    }
  };
  if (w <= 1) {
    body();
  } else {
    for (int t = 0; t < w; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  std::vector<GroupMap> out;
  for (auto& s : slices) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupMap tilde_group(const FiniteGroup& g, const GroupMap& b) {
  check_map(g, b);
  GroupMap out;
  out.image.resize(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    out.image[static_cast<std::size_t>(x)] = g.mul(g.inv(x), b.image[static_cast<std::size_t>(g.inv(x))]);
  return out;
}

GroupMap split_rb_group(const FiniteGroup& g, const std::vector<int>& g1,
                        const std::vector<int>& g2) {
  if (!g.is_subgroup(g1)) throw std::domain_error("split_rb_group: first subset is not a subgroup");
  if (!g.is_subgroup(g2)) throw std::domain_error("split_rb_group: second subset is not a subgroup");
  if (static_cast<int>(g1.size() * g2.size()) != g.order())
    throw std::domain_error("split_rb_group: |G1|*|G2| != |G|");
  std::vector<std::pair<int, int>> factor(static_cast<std::size_t>(g.order()), {-1, -1});
  for (int a : g1)
    for (int b : g2) {
      int p = g.mul(a, b);
      if (factor[static_cast<std::size_t>(p)].first >= 0)
        throw std::domain_error("split_rb_group: factorization is not unique");
      factor[static_cast<std::size_t>(p)] = {a, b};
    }
  GroupMap out;
  out.image.resize(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    out.image[static_cast<std::size_t>(x)] = g.inv(factor[static_cast<std::size_t>(x)].second);
  return out;
}

FiniteGroup descendent_group(const FiniteGroup& g, const GroupMap& b) {
  check_map(g, b);
  const int n = g.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          g.mul(g.mul(x, b.image[static_cast<std::size_t>(x)]),
                g.mul(y, g.inv(b.image[static_cast<std::size_t>(x)])));
  FiniteGroup out(std::move(table), g.names());  // constructor re-validates the table
  for (int x = 0; x < n; ++x) {
    int expected = g.mul(g.mul(g.inv(b.image[static_cast<std::size_t>(x)]), g.inv(x)),
                         b.image[static_cast<std::size_t>(x)]);
    if (out.inv(x) != expected)
      throw std::logic_error("descendent_group: inverse does not match B(g)^{-1} g^{-1} B(g)");
  }
  return out;
}

}  // namespace rbhopf
