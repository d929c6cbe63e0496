#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "triad/dataset.hpp"

namespace triad
{

/*! Bias-free feed-forward network over minterm inputs with a single
 * ReLU layer of l nodes and one linear output node.
 *
 * `below` composes (right to left) the input-side linear maps ending in
 * the l pre-activation values; `above` composes the maps from the l
 * rectified values to the scalar output.
 */
struct simple_ann_model
{
  std::vector<Eigen::MatrixXd> below;
  std::vector<Eigen::MatrixXd> above;
  double threshold = 0.0; /* decision threshold on the output */
  int n_atts = 0;

  int input_dim() const { return 1 << n_atts; }
  int relu_count() const { return below.empty() ? 0 : static_cast<int>( below.back().rows() ); }
};

/*! Checks layer composability, 2^n input width, single output and a
 * representable ReLU width. */
void validate( const simple_ann_model& model );

/*! Product of the input-side stack: a relu_count x 2^n matrix. */
Eigen::MatrixXd below_product( const simple_ann_model& model );

/*! Product of the output-side stack: a 1 x relu_count matrix. */
Eigen::MatrixXd above_product( const simple_ann_model& model );

/*! Pre-activation values of the ReLU layer for one minterm vector. */
Eigen::VectorXd pre_activations( const simple_ann_model& model, const Eigen::Ref<const Eigen::VectorXd>& mt );

/*! Network output for one minterm vector. */
double forward( const simple_ann_model& model, const Eigen::Ref<const Eigen::VectorXd>& mt );

/*! Partition number p of the input: bit 2^(l-i) is set iff ReLU node i
 * is active (pre-activation >= 0).  Inputs sharing p see the same
 * effective linear map. */
std::uint32_t relu_status( const simple_ann_model& model, const Eigen::Ref<const Eigen::VectorXd>& mt );

/*! Effective linear weights of partition cell p: the output as a
 * function of the minterm vector with the ReLU mask of p frozen,
 * mw^p[k] = (above * diag(mask) * below)[k]. */
Eigen::VectorXd cell_weights( const simple_ann_model& model, std::uint32_t p );

/*! Cell weights of the l single-node cells p = 2^(l-i), i = 1..l.
 * Any cell's weights are the sum of its active nodes' atomic weights. */
std::vector<Eigen::VectorXd> atomic_weights( const simple_ann_model& model );

/*! A partition cell observed in training data. */
struct partition_cell
{
  std::uint32_t number = 0;
  Eigen::VectorXd weights; /* mw^p */
  std::int64_t count0 = 0; /* objects with target 0 */
  std::int64_t count1 = 0;

  std::int64_t support() const { return count0 + count1; }
  bool mixed() const { return count0 > 0 && count1 > 0; }
};

/*! One entry per distinct partition number hit by the data, sorted by
 * partition number; cells no object falls into are absent. */
std::vector<partition_cell> enumerate_cells( const simple_ann_model& model, const labeled_dataset& data );

/*! Smallest support value whose cells jointly cover at least the given
 * fraction of the training objects. */
std::int64_t auto_min_support( const std::vector<partition_cell>& cells, double coverage = 0.8 );

/*! Cells with support >= min_support (and both classes present when
 * require_mixed), ordered by descending support, partition number as
 * tie-break.  May be empty. */
std::vector<partition_cell> select_essential( const std::vector<partition_cell>& cells,
                                              std::int64_t min_support, bool require_mixed );

/*! Decision threshold maximizing training accuracy of "output > tau";
 * ties resolved toward the smallest candidate. */
double fit_threshold( const simple_ann_model& model, const labeled_dataset& data );

struct train_config
{
  int relu_count = 5;
  int epochs = 2000;
  double learning_rate = 0.5;
  unsigned seed = 1;
};

struct train_result
{
  simple_ann_model model;
  double loss = 0.0;     /* mean squared error of the returned weights */
  double accuracy = 0.0; /* training accuracy at the fitted threshold */
  bool converged = false;
  std::string note;
};

/*! Full-batch gradient descent on mean squared error over the minterm
 * expansion of the data; weights drawn uniformly from [-0.5, 0.5] with
 * the given seed.  Keeps the best weights seen; when the loss is still
 * falling at the last epoch the result is flagged unconverged.  The
 * returned model carries the accuracy-maximizing threshold. */
train_result train( const labeled_dataset& data, const train_config& cfg );

} // namespace triad
