#include "triad/minterm.hpp"

#include <stdexcept>

namespace triad
{

std::uint32_t bit_code::index() const
{
  std::uint32_t k = 0;
  for ( auto b : bits )
    k = ( k << 1 ) | ( b ? 1u : 0u );
  return k;
}

std::string bit_code::to_string() const
{
  std::string s;
  s.reserve( bits.size() );
  for ( auto b : bits )
    s.push_back( b ? '1' : '0' );
  return s;
}

bit_code bitcode_of( std::uint32_t k, int n )
{
  if ( n < 1 || n > max_attributes )
    throw std::invalid_argument( "bitcode_of: attribute count out of range" );
  if ( k >= ( std::uint32_t( 1 ) << n ) )
    throw std::out_of_range( "bitcode_of: index exceeds 2^n - 1" );

  bit_code bc;
  bc.bits.resize( n );
  for ( int j = 0; j < n; ++j )
    bc.bits[j] = ( k >> ( n - 1 - j ) ) & 1u;
  return bc;
}

Eigen::VectorXd to_minterms( const Eigen::Ref<const Eigen::VectorXd>& x )
{
  const int n = static_cast<int>( x.size() );
  if ( n < 1 )
    throw std::invalid_argument( "to_minterms: empty attribute vector" );
  if ( n > max_attributes )
    throw std::invalid_argument( "to_minterms: more than " + std::to_string( max_attributes ) + " attributes" );
  for ( int j = 0; j < n; ++j )
  {
    if ( !( x[j] >= 0.0 && x[j] <= 1.0 ) )
      throw std::domain_error( "to_minterms: attribute " + std::to_string( j + 1 ) + " outside [0,1]" );
  }

  /* Grow the product table one attribute at a time: each existing entry
   * splits into a (1-x_j) child (bit 0) and an x_j child (bit 1), which
   * keeps index bit j-1 aligned with attribute j, most significant first. */
  Eigen::VectorXd mt = Eigen::VectorXd::Ones( 1 );
  for ( int j = 0; j < n; ++j )
  {
    Eigen::VectorXd next( mt.size() * 2 );
    for ( Eigen::Index i = 0; i < mt.size(); ++i )
    {
      next[2 * i] = mt[i] * ( 1.0 - x[j] );
      next[2 * i + 1] = mt[i] * x[j];
    }
    mt.swap( next );
  }
  return mt;
}

} // namespace triad
