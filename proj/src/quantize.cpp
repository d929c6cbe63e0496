#include "triad/quantize.hpp"

#include <cmath>

#include "triad/minterm.hpp"
#include <stdexcept>
#include <string>

namespace triad
{

double default_epsilon( int n_bits )
{
  return std::ldexp( 1.0, -( n_bits + 4 ) );
}

namespace
{

void check_params( const quant_params& qp )
{
  if ( qp.n_bits < 1 || qp.n_bits > 30 )
    throw std::invalid_argument( "quantize: bit depth out of range" );
  if ( !( qp.epsilon > 0.0 ) )
    throw std::invalid_argument( "quantize: epsilon must be positive" );
  if ( !( qp.a < qp.b ) )
    throw std::invalid_argument( "quantize: degenerate weight range, need a < b" );
}

} // namespace

quant_params fit_quant_params( const std::vector<partition_cell>& cells, int n_bits,
                               std::optional<double> epsilon )
{
  if ( cells.empty() )
    throw std::invalid_argument( "fit_quant_params: no cells" );

  quant_params qp;
  qp.n_bits = n_bits;
  qp.epsilon = epsilon.value_or( default_epsilon( n_bits ) );
  qp.a = cells.front().weights.minCoeff();
  qp.b = cells.front().weights.maxCoeff();
  for ( const auto& c : cells )
  {
    qp.a = std::min( qp.a, c.weights.minCoeff() );
    qp.b = std::max( qp.b, c.weights.maxCoeff() );
  }
  check_params( qp );
  return qp;
}

double quant_map( double v, const quant_params& qp )
{
  check_params( qp );
  return ( v - qp.a ) / ( qp.b - qp.a ) * ( std::ldexp( 1.0, qp.n_bits ) / ( 1.0 + qp.epsilon ) );
}

int quantize( double v, const quant_params& qp )
{
  if ( !( v >= qp.a && v <= qp.b ) )
    throw std::out_of_range( "quantize: value outside [a,b]" );
  return static_cast<int>( std::floor( quant_map( v, qp ) ) );
}

double reconstruct( int q, const quant_params& qp )
{
  check_params( qp );
  if ( q < 0 || q >= ( 1 << qp.n_bits ) )
    throw std::out_of_range( "reconstruct: code outside 0..2^n_bits-1" );
  const double step = ( 1.0 + qp.epsilon ) / std::ldexp( 1.0, qp.n_bits );
  return ( q * step + std::ldexp( 1.0, -( qp.n_bits + 1 ) ) ) * ( qp.b - qp.a ) + qp.a;
}

double map_threshold( double tau, const quant_params& qp )
{
  return quant_map( tau, qp ) - 0.5;
}

uncovered_cell_error::uncovered_cell_error( std::uint32_t p )
    : std::out_of_range( "partition cell " + std::to_string( p ) + " is not covered by the bit tensor" ),
      cell( p )
{
}

std::optional<int> bit_tensor::cell_row( std::uint32_t p ) const
{
  for ( std::size_t r = 0; r < cells.size(); ++r )
    if ( cells[r] == p )
      return static_cast<int>( r );
  return std::nullopt;
}

bool bit_tensor::bit( int row, int k, int level ) const
{
  return ( floors( row, k ) >> level ) & 1;
}

bit_tensor build_bit_tensor( const std::vector<partition_cell>& cells, int n_atts, int n_bits, double tau,
                             std::optional<double> epsilon, const std::vector<partition_cell>* param_cells )
{
  if ( cells.empty() )
    throw std::invalid_argument( "build_bit_tensor: no cells" );
  if ( n_atts < 1 || n_atts > max_attributes )
    throw std::invalid_argument( "build_bit_tensor: attribute count out of range" );
  const int width = 1 << n_atts;
  for ( const auto& c : cells )
    if ( c.weights.size() != width )
      throw std::invalid_argument( "build_bit_tensor: cell weight width does not match 2^n_atts" );

  bit_tensor bt;
  bt.n_atts = n_atts;
  bt.params = fit_quant_params( param_cells ? *param_cells : cells, n_bits, epsilon );
  bt.tau_prime = map_threshold( tau, bt.params );
  bt.floors.resize( static_cast<Eigen::Index>( cells.size() ), width );
  bt.cells.reserve( cells.size() );
  bt.supports.reserve( cells.size() );
  for ( std::size_t r = 0; r < cells.size(); ++r )
  {
    bt.cells.push_back( cells[r].number );
    bt.supports.push_back( cells[r].support() );
    for ( int k = 0; k < width; ++k )
      bt.floors( static_cast<Eigen::Index>( r ), k ) = quantize( cells[r].weights[k], bt.params );
  }
  return bt;
}

std::int64_t tensor_power( const bit_tensor& bt )
{
  std::int64_t sum = 0;
  for ( Eigen::Index r = 0; r < bt.floors.rows(); ++r )
    for ( Eigen::Index k = 0; k < bt.floors.cols(); ++k )
      sum += bt.floors( r, k );
  return sum;
}

std::int64_t tensor_power( const bit_tensor& bt, const std::vector<std::int64_t>& cell_weights )
{
  if ( cell_weights.size() != bt.cells.size() )
    throw std::invalid_argument( "tensor_power: one weight per cell row required" );
  std::int64_t sum = 0;
  for ( Eigen::Index r = 0; r < bt.floors.rows(); ++r )
  {
    std::int64_t row = 0;
    for ( Eigen::Index k = 0; k < bt.floors.cols(); ++k )
      row += bt.floors( r, k );
    sum += row * cell_weights[static_cast<std::size_t>( r )];
  }
  return sum;
}

double bit_tensor_score( const bit_tensor& bt, std::uint32_t p, const Eigen::Ref<const Eigen::VectorXd>& mt )
{
  const auto row = bt.cell_row( p );
  if ( !row )
    throw uncovered_cell_error( p );
  if ( mt.size() != bt.floors.cols() )
    throw std::invalid_argument( "bit_tensor_score: minterm width mismatch" );
  return bt.floors.row( *row ).cast<double>() * mt;
}

} // namespace triad
