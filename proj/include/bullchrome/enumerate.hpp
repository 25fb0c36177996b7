#pragma once

#include <functional>
#include <vector>

#include "bullchrome/graph.hpp"

namespace bullchrome {

using GraphPredicate = std::function<bool(const Graph&)>;

struct EnumerationOptions {
  /// Largest n accepted; hard ceiling 11 (edge masks are 64-bit keys).
  int cap = 9;
  /// The predicate is closed under induced subgraphs, so graphs failing it
  /// are dropped at every intermediate order rather than only at the end.
  bool hereditary = false;
  /// Worker threads used for the extension step.
  int jobs = 1;
};

/// One representative per isomorphism class of graphs on exactly n vertices
/// that satisfy `keep` (all graphs when `keep` is empty). Representatives are
/// in canonical form and ordered by their canonical edge key, so the output is
/// deterministic. Throws CapExceeded when n exceeds the cap.
std::vector<Graph> enumerate_graphs(int n, const GraphPredicate& keep = {}, EnumerationOptions options = {});

/// Streaming form of enumerate_graphs. The final order is materialized before
/// the first call to `sink`; `sink` is invoked from the calling thread only.
void for_each_graph(int n, const GraphPredicate& keep, const std::function<void(const Graph&)>& sink,
                    EnumerationOptions options = {});

}  // namespace bullchrome
