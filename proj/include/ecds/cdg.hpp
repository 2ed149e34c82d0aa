#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecds/dominating_subtree.hpp"
#include "ecds/graph.hpp"

namespace ecds {

// Connectivity-domination graph of a DSInstance. One q-node per link, one
// r-node per graph node. Two links are adjacent when their tree paths share a
// node; a link dominates a graph node that its tree path contains (member) or
// that is a graph neighbor of the path (neighbor). r-nodes form an
// independent set by construction.
class CDGraph {
 public:
  explicit CDGraph(DSInstance inst);

  const DSInstance& instance() const { return inst_; }
  int q_count() const { return static_cast<int>(inst_.links().size()); }
  int r_count() const { return inst_.graph().node_count(); }
  Edge link(int q) const { return inst_.link(q); }

  std::span<const int> i_neighbors(int q) const { return i_adj_[q]; }
  bool i_adjacent(int q1, int q2) const;
  // (node, member?) pairs dominated by link q, sorted by node.
  std::span<const std::pair<int, bool>> dominated_by(int q) const { return d_by_q_[q]; }
  // Links dominating graph node v, sorted.
  std::span<const int> dominators_of(int v) const { return q_by_r_[v]; }
  bool is_member(int q, int v) const;
  bool dominates_node(int q, int v) const;

  struct LinkClass {
    int type;     // 1 or 2
    int witness;  // link index f_e; equals e itself for type 2
  };
  // Type 1 when some link f (possibly e) has v on its path and shares a path
  // node with e; the witness is the lowest-index such f. Requires that e
  // dominates v.
  LinkClass classify_link(int v, int e) const;

  // A simple q-node path from e1 to e2 in the q-side induced subgraph with at
  // most two internal nodes, valid whenever the instance is feasible and
  // e1, e2 both dominate v. Throws InfeasibleError when v's domination hangs
  // on an uncovered bridge whose far side is not the single node v.
  std::vector<int> short_connector(int v, int e1, int e2) const;

  // True iff the q-subset induces a connected subgraph (singleton yes, empty
  // no) and every graph node is dominated by some member.
  bool verify_solution(const std::vector<int>& q_set) const;

  // True iff some component of the q-side induced subgraph dominates all
  // graph nodes; equivalent to the instance admitting a feasible link set.
  bool instance_feasible() const;

  // Plain-graph view: q-nodes are 0..q_count-1, r-nodes follow.
  Graph as_plain_graph() const;
  NodeSet plain_q_nodes() const;
  NodeSet plain_r_nodes() const;

  std::string to_dot() const;

 private:
  DSInstance inst_;
  std::vector<std::vector<int>> i_adj_;
  std::vector<std::vector<std::pair<int, bool>>> d_by_q_;
  std::vector<std::vector<int>> q_by_r_;
};

}  // namespace ecds
