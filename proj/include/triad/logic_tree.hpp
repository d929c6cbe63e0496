#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "triad/bitset.hpp"

namespace triad
{

/*! Binary decision tree over attribute tests x_j, grown to purity on a
 * full 2^n truth table; the indicator of a minterm subset. */
struct logic_tree
{
  struct node
  {
    int attribute = 0; /* 1-based test attribute; 0 marks a leaf */
    int value = 0;     /* leaf label */
    int lo = -1;       /* branch with the attribute negated */
    int hi = -1;       /* branch with the attribute plain */

    bool is_leaf() const { return attribute == 0; }
  };

  std::vector<node> nodes; /* preorder; nodes[0] is the root */
  int n_atts = 0;

  bool empty() const { return nodes.empty(); }
};

/*! Exact ID3: the training table is all 2^n minterms labeled by
 * membership in `minterms`.  Splits maximize information gain,
 * equal-gain ties fall to the lowest attribute index, leaves are pure.
 * 0-leaves are kept in the structure but skipped by rendering. */
logic_tree build_tree( const bitset& minterms, int n_atts );

/*! Fuzzy evaluation: a leaf yields its label, an inner node yields
 * (1-x_j) * lo + x_j * hi.  Equals the sum over 1-leaf paths of the
 * path literal products, and for x in [0,1]^n equals the sum of the
 * minterm values of `minterms`. */
double eval_tree( const logic_tree& tree, const Eigen::Ref<const Eigen::VectorXd>& x );

/*! Root-to-leaf path; literal +j tests x_j, -j tests (1-x_j). */
struct leaf_path
{
  std::vector<int> literals;
  int leaf_value = 0;
};

/*! All root-to-leaf paths, negated branch first. */
std::vector<leaf_path> leaf_paths( const logic_tree& tree );

/*! Product of the path's literal values at x. */
double eval_path( const leaf_path& path, const Eigen::Ref<const Eigen::VectorXd>& x );

struct eval_object
{
  Eigen::VectorXd x;
  int target = 0;
};

/*! Per-path quality over a set of objects: the count of minterms below
 * the path, the class-conditional means of the path product, and
 * precision/recall/accuracy of "product > threshold" at the
 * accuracy-maximizing threshold.  Metrics whose denominator is empty
 * are absent. */
struct path_stats
{
  std::int64_t minterm_count = 0;
  double threshold = 0.0;
  std::optional<double> precision, recall, accuracy;
  std::optional<double> avg0, avg1;
};

path_stats path_metrics( const leaf_path& path, int n_atts, const std::vector<eval_object>& objects );

/*! Edges i -> j (i implies j) where path i's literal set contains path
 * j's; equal literal sets yield both directions, self-loops omitted. */
std::vector<std::pair<int, int>> path_implications( const std::vector<leaf_path>& paths );

/*! A tree weighted by its concept's level energy and guarded by the
 * partition cells it applies to. */
struct concept_tree
{
  logic_tree tree;
  std::int64_t power_sum = 0;
  std::vector<std::uint32_t> cells; /* partition numbers */
};

struct tree_score_result
{
  double score = 0.0;
  int label = 0;
  bool covered = false;              /* some tree's cell set contains p */
  std::vector<double> contributions; /* power_sum * tree value, per tree */
};

/*! Object score sum_{trees covering p} power_sum * tree(x), classified
 * against tau_prime; an uncovered partition number yields class 0 with
 * the covered flag down. */
tree_score_result tree_score( const Eigen::Ref<const Eigen::VectorXd>& x, std::uint32_t p,
                              const std::vector<concept_tree>& trees, double tau_prime );

/*! Graphviz rendering; solid edges test the attribute, dashed edges its
 * negation.  Subtrees without a 1-leaf are omitted.  Node ids follow
 * preorder and are stable across runs. */
std::string to_dot( const logic_tree& tree, const std::vector<std::string>& attribute_names,
                    const std::string& graph_name );

} // namespace triad
