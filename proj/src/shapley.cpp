#include "triad/shapley.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "triad/minterm.hpp"

namespace triad
{

namespace
{

int width_to_atts( Eigen::Index size )
{
  if ( size < 2 || ( size & ( size - 1 ) ) != 0 )
    throw std::invalid_argument( "shapley: weight vector length must be a power of two" );
  const int n = std::countr_zero( static_cast<std::uint64_t>( size ) );
  if ( n > max_attributes )
    throw std::invalid_argument( "shapley: more than " + std::to_string( max_attributes ) + " attributes" );
  return n;
}

/*! Subset mask s (bit j-1 = attribute j present) to minterm index
 * (attribute j = bit n-j). */
std::uint32_t minterm_of_subset( std::uint32_t s, int n )
{
  std::uint32_t k = 0;
  for ( int j = 1; j <= n; ++j )
    if ( ( s >> ( j - 1 ) ) & 1u )
      k |= std::uint32_t( 1 ) << ( n - j );
  return k;
}

Eigen::VectorXd shapley_of_game( const std::vector<double>& v, int n )
{
  /* weight of a coalition of size c joined by one more player */
  std::vector<double> factorial( n + 1, 1.0 );
  for ( int i = 1; i <= n; ++i )
    factorial[i] = factorial[i - 1] * i;
  std::vector<double> weight( n );
  for ( int c = 0; c < n; ++c )
    weight[c] = factorial[c] * factorial[n - 1 - c] / factorial[n];

  const std::uint32_t full = ( std::uint32_t( 1 ) << n ) - 1;
  Eigen::VectorXd sh = Eigen::VectorXd::Zero( n );
  for ( int j = 1; j <= n; ++j )
  {
    const std::uint32_t self = std::uint32_t( 1 ) << ( j - 1 );
    double sum = 0.0;
    for ( std::uint32_t s = 0; s <= full; ++s )
    {
      if ( s & self )
        continue;
      sum += weight[std::popcount( s )] * ( v[s | self] - v[s] );
    }
    sh[j - 1] = sum;
  }
  return sh;
}

} // namespace

Eigen::VectorXd shapley_global( const Eigen::Ref<const Eigen::VectorXd>& mw )
{
  const int n = width_to_atts( mw.size() );
  std::vector<double> v( std::size_t( 1 ) << n );
  for ( std::uint32_t s = 0; s < v.size(); ++s )
    v[s] = mw[minterm_of_subset( s, n )];
  return shapley_of_game( v, n );
}

Eigen::VectorXd shapley_object( const Eigen::Ref<const Eigen::VectorXd>& mw,
                                const Eigen::Ref<const Eigen::VectorXd>& mt )
{
  if ( mw.size() != mt.size() )
    throw std::invalid_argument( "shapley: weight/minterm vector length mismatch" );
  const int n = width_to_atts( mw.size() );
  std::vector<double> v( std::size_t( 1 ) << n );
  for ( std::uint32_t s = 0; s < v.size(); ++s )
  {
    const auto k = minterm_of_subset( s, n );
    v[s] = mt[k] * mw[k];
  }
  return shapley_of_game( v, n );
}

} // namespace triad
