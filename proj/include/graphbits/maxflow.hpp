#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace graphbits {

// Dinic max-flow on small integral networks. Deterministic: arcs are scanned
// in insertion order, so ties always break the same way.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count)
      : head_(std::size_t(node_count), -1),
        level_(std::size_t(node_count)),
        iter_(std::size_t(node_count)) {}

  int add_node() {
    head_.push_back(-1);
    level_.push_back(0);
    iter_.push_back(-1);
    return int(head_.size()) - 1;
  }

  int node_count() const { return int(head_.size()); }

  // Returns the arc id; the reverse arc is id^1.
  int add_edge(int from, int to, std::int64_t capacity) {
    const int id = int(arcs_.size());
    arcs_.push_back({to, head_[std::size_t(from)], capacity});
    head_[std::size_t(from)] = id;
    arcs_.push_back({from, head_[std::size_t(to)], 0});
    head_[std::size_t(to)] = id + 1;
    return id;
  }

  std::int64_t flow_on(int arc_id) const {
    return arcs_[std::size_t(arc_id) ^ 1].capacity;
  }

  // Max flow from s to t, stopping early once `limit` is reached.
  std::int64_t max_flow(int s, int t,
                        std::int64_t limit = std::numeric_limits<std::int64_t>::max()) {
    if (s == t) throw std::invalid_argument("max_flow: s == t");
    std::int64_t flow = 0;
    while (flow < limit && bfs(s, t)) {
      iter_ = head_;
      while (flow < limit) {
        const std::int64_t pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t capacity;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[std::size_t(s)] = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int u = queue_[qi];
      for (int a = head_[std::size_t(u)]; a != -1; a = arcs_[std::size_t(a)].next) {
        const Arc& arc = arcs_[std::size_t(a)];
        if (arc.capacity > 0 && level_[std::size_t(arc.to)] < 0) {
          level_[std::size_t(arc.to)] = level_[std::size_t(u)] + 1;
          queue_.push_back(arc.to);
        }
      }
    }
    return level_[std::size_t(t)] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t want) {
    if (u == t) return want;
    for (int& a = iter_[std::size_t(u)]; a != -1; a = arcs_[std::size_t(a)].next) {
      Arc& arc = arcs_[std::size_t(a)];
      if (arc.capacity <= 0 || level_[std::size_t(arc.to)] != level_[std::size_t(u)] + 1)
        continue;
      const std::int64_t pushed =
          dfs(arc.to, t, std::min(want, arc.capacity));
      if (pushed > 0) {
        arc.capacity -= pushed;
        arcs_[std::size_t(a) ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<int> queue_;
};

}  // namespace graphbits
