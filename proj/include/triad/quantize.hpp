#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "triad/network.hpp"

namespace triad
{

/*! Affine map of [a,b] onto [0, 2^n_bits/(1+epsilon)].  The 1+epsilon
 * denominator keeps f(b) strictly below 2^n_bits so flooring b lands on
 * the top code 2^n_bits - 1. */
struct quant_params
{
  double a = 0.0;
  double b = 1.0;
  int n_bits = 7;
  double epsilon = 0.0;
};

double default_epsilon( int n_bits ); /* 2^-(n_bits+4) */

/*! Derives (a,b) as the min/max weight over the given cells. */
quant_params fit_quant_params( const std::vector<partition_cell>& cells, int n_bits,
                               std::optional<double> epsilon = std::nullopt );

/*! The raw map f(v) = (v-a)/(b-a) * 2^n_bits/(1+epsilon). */
double quant_map( double v, const quant_params& qp );

/*! floor(f(v)) as an integer code in 0..2^n_bits-1; v must lie in
 * [a,b]. */
int quantize( double v, const quant_params& qp );

/*! Midpoint-style inverse: code q maps back to
 * (q*(1+epsilon)/2^n_bits + 2^-(n_bits+1)) * (b-a) + a.  The absolute
 * error of reconstruct(quantize(v)) is at most
 * (1+2*epsilon) * (b-a)/2^(n_bits+1), with mean about (b-a)/2^(n_bits+2). */
double reconstruct( int q, const quant_params& qp );

/*! Decision threshold in code space: f(tau) - 1/2. */
double map_threshold( double tau, const quant_params& qp );

/*! Raised when a score is requested for a partition cell the tensor
 * does not carry. */
struct uncovered_cell_error : std::out_of_range
{
  explicit uncovered_cell_error( std::uint32_t p );
  std::uint32_t cell;
};

/*! Quantized cell weights: floors(r, k) is the integer code of cell
 * cells[r] at minterm k, read bitwise as an n_bits-deep boolean tensor.
 */
struct bit_tensor
{
  std::vector<std::uint32_t> cells;    /* partition numbers, row order */
  std::vector<std::int64_t> supports;  /* training objects per cell */
  Eigen::MatrixXi floors;              /* |cells| x 2^n_atts */
  quant_params params;
  double tau_prime = 0.0;
  int n_atts = 0;

  int n_bits() const { return params.n_bits; }
  std::optional<int> cell_row( std::uint32_t p ) const;
  bool bit( int row, int k, int level ) const;
};

/*! Quantizes the weights of the given cells with (a,b) fitted on
 * param_cells (defaults to the cells themselves). */
bit_tensor build_bit_tensor( const std::vector<partition_cell>& cells, int n_atts, int n_bits, double tau,
                             std::optional<double> epsilon = std::nullopt,
                             const std::vector<partition_cell>* param_cells = nullptr );

/*! Total energy: sum over set bits of 2^level, i.e. the sum of all
 * integer codes; with weights, each cell row counts weight(row) times. */
std::int64_t tensor_power( const bit_tensor& bt );
std::int64_t tensor_power( const bit_tensor& bt, const std::vector<std::int64_t>& cell_weights );

/*! Quantized network output <mt, floors(row(p), .)>.  Throws
 * uncovered_cell_error when p has no row. */
double bit_tensor_score( const bit_tensor& bt, std::uint32_t p, const Eigen::Ref<const Eigen::VectorXd>& mt );

} // namespace triad
