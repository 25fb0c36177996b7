#include "bullchrome/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>

#include "bullchrome/canonical.hpp"
#include "bullchrome/errors.hpp"
#include "bullchrome/parallel.hpp"

namespace bullchrome {

namespace {

constexpr int kHardCap = 11;

// Upper-triangle bit (i, j), i < j, sits at j(j-1)/2 + i.
constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint64_t edge_key(const Graph& g) {
  std::uint64_t key = 0;
  for (auto [u, v] : g.edges()) key |= std::uint64_t{1} << pair_bit(u, v);
  return key;
}

Graph decode(int n, std::uint64_t key) {
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((key >> pair_bit(i, j)) & 1) b.add_edge(i, j);
  return b.build();
}

std::vector<std::uint64_t> extend(int n, const std::vector<std::uint64_t>& parents, const GraphPredicate& filter,
                                  int jobs) {
  const int k = n - 1;
  std::vector<std::uint64_t> keys;
  std::mutex keys_mutex;
  parallel_for(parents.size(), jobs, [&](std::size_t p) {
    const Graph parent = decode(k, parents[p]);
    std::vector<std::uint64_t> local;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      GraphBuilder b(n);
      for (auto [u, v] : parent.edges()) b.add_edge(u, v);
      for (int u = 0; u < k; ++u)
        if ((mask >> u) & 1) b.add_edge(u, k);
      const Graph g = b.build();
      if (filter && !filter(g)) continue;
      local.push_back(edge_key(canonical_form(g)));
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    std::lock_guard lock(keys_mutex);
    keys.insert(keys.end(), local.begin(), local.end());
  });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const GraphPredicate& keep, EnumerationOptions options) {
  std::vector<Graph> out;
  for_each_graph(n, keep, [&](const Graph& g) { out.push_back(g); }, options);
  return out;
}

void for_each_graph(int n, const GraphPredicate& keep, const std::function<void(const Graph&)>& sink,
                    EnumerationOptions options) {
  const int cap = std::min(options.cap, kHardCap);
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  if (n > cap)
    throw CapExceeded("enumeration of " + std::to_string(n) + "-vertex graphs exceeds cap " + std::to_string(cap));

  const GraphPredicate none;
  std::vector<std::uint64_t> level{0};
  if (n >= 1 && options.hereditary && keep && !keep(empty_graph(1))) level.clear();
  for (int k = 2; k <= n; ++k) level = extend(k, level, options.hereditary ? keep : none, options.jobs);
  if (n == 0) {
    const Graph g = empty_graph(0);
    if (!keep || keep(g)) sink(g);
    return;
  }
  for (std::uint64_t key : level) {
    const Graph g = decode(n, key);
    if (options.hereditary || !keep || keep(g)) sink(g);
  }
}

}  // namespace bullchrome
