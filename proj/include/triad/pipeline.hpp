#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triad/fca.hpp"
#include "triad/logic_tree.hpp"
#include "triad/model_io.hpp"
#include "triad/network.hpp"
#include "triad/quantize.hpp"

namespace triad
{

struct pipeline_config
{
  std::string data_path;
  std::string model_path;  /* empty: train on the data */
  std::string output_dir;  /* empty: compute only, write nothing */

  bool balance = false;
  unsigned seed = 1;
  train_config training;

  std::optional<double> threshold_override; /* replaces the model's tau */
  int n_bits = 7;
  std::optional<double> epsilon; /* default 2^-(n_bits+4) */

  std::int64_t min_support = -1; /* -1: smallest support covering >= 80% of objects */
  bool require_mixed = false;
  bool quant_all_cells = false; /* fit (a,b) over all observed cells */

  selection_options selection;
  bool fallback_all_cells = false; /* empty essential set: use all observed cells */
  bool export_cxt = false;
  bool export_dot = true;
};

struct path_report
{
  std::vector<int> literals; /* +j plain, -j negated */
  std::int64_t minterm_count = 0;
  double threshold = 0.0;
  std::optional<double> precision, recall, accuracy, avg0, avg1;
};

struct concept_report
{
  std::vector<std::uint32_t> cells;
  std::vector<int> minterms;
  std::vector<int> levels;
  std::int64_t power = 0;
  rational relpower;
  std::int64_t power_sum = 0;
  std::int64_t support = 0; /* training objects in the covered cells */
  double threshold = 0.0;   /* decision threshold on power_sum * tree(x) */
  std::optional<double> precision, recall, accuracy;
  std::vector<path_report> paths; /* 1-leaf paths */
};

struct cell_report
{
  std::uint32_t number = 0;
  std::string code; /* ReLU activity bits, node 1 first */
  std::int64_t count0 = 0, count1 = 0;
  bool essential = false;
  std::vector<double> shapley; /* per attribute; essential cells only */
};

struct report
{
  int n_objects = 0;
  int n_attributes = 0;
  std::vector<std::string> attribute_names;
  std::int64_t positives = 0;

  std::string model_path;
  int relu_count = 0;
  double threshold = 0.0;
  double network_accuracy = 0.0;

  std::vector<cell_report> cells;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cell_order; /* Hasse edges, subset -> superset */
  std::int64_t min_support_used = 0;
  bool require_mixed = false;

  bool has_tensor = false;
  quant_params params;
  double tau_prime = 0.0;
  std::int64_t power = 0;

  std::string method;
  bool support_weighted = false;
  std::vector<concept_report> concepts;
  std::vector<std::pair<int, int>> concept_implication_edges;
  /* (concept, path) -> (concept, path) between the top two trees */
  std::vector<std::array<int, 4>> path_implication_edges;

  std::int64_t covered_objects = 0;
  double quantized_accuracy = 0.0;
  double concept_accuracy = 0.0;
  std::vector<std::string> warnings;
};

struct pipeline_result
{
  simple_ann_model model;
  labeled_dataset data;
  std::vector<partition_cell> cells;
  bool has_tensor = false;
  bit_tensor tensor;
  std::vector<triadic_concept> concepts;
  std::vector<concept_tree> trees;
  report rep;
};

/*! Runs the interpretation pipeline: load or train the network, fit or
 * take its threshold, enumerate and select cells, quantize, extract
 * exclusive concepts, grow their trees, and assemble the report.
 * Writes report/model/DOT/cxt artifacts into output_dir when set.
 * Deterministic: identical config and data give identical results and
 * bytes. */
pipeline_result run_pipeline( const pipeline_config& cfg );
pipeline_result run_pipeline( const pipeline_config& cfg, const labeled_dataset& data );

/*! Machine-readable report (JSON, stable key order). */
std::string report_to_json( const report& rep );

/*! Parses the fields needed to reuse a report: attribute names,
 * quantization, concepts with their sets, implication edges. */
report report_from_json( const std::string& text );
report load_report_file( const std::string& path );

/*! Human-readable table dump. */
std::string report_to_text( const report& rep );

/*! Rebuilds the concept trees recorded in a report. */
std::vector<concept_tree> trees_of_report( const report& rep );

/*! Explanation of one object: its cell, the covering concepts, each
 * tree and path contribution, and the decision against tau_prime. */
std::string explain_object( const report& rep, const simple_ann_model& model,
                            const Eigen::Ref<const Eigen::VectorXd>& x );

} // namespace triad
