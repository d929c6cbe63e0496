#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace triad
{

/*! Fixed-size set of small integers backed by 64-bit words.
 *
 * Carrier sets in this library (partition cells, minterm indices, bit
 * levels) are dense index ranges, so a packed bitset gives O(1)
 * membership and a deterministic ascending iteration order.
 */
class bitset
{
public:
  bitset() = default;

  explicit bitset( int size )
      : size_( size ), words_( ( size + 63 ) / 64, 0u )
  {
    if ( size < 0 )
      throw std::invalid_argument( "bitset: negative size" );
  }

  int size() const { return size_; }

  bool test( int i ) const
  {
    check( i );
    return ( words_[i >> 6] >> ( i & 63 ) ) & 1u;
  }

  void set( int i )
  {
    check( i );
    words_[i >> 6] |= std::uint64_t( 1 ) << ( i & 63 );
  }

  void reset( int i )
  {
    check( i );
    words_[i >> 6] &= ~( std::uint64_t( 1 ) << ( i & 63 ) );
  }

  void set_all()
  {
    for ( auto& w : words_ )
      w = ~std::uint64_t( 0 );
    trim();
  }

  void clear()
  {
    for ( auto& w : words_ )
      w = 0;
  }

  int count() const
  {
    int c = 0;
    for ( auto w : words_ )
      c += std::popcount( w );
    return c;
  }

  bool any() const
  {
    for ( auto w : words_ )
      if ( w )
        return true;
    return false;
  }

  bool none() const { return !any(); }

  bool is_subset_of( const bitset& other ) const
  {
    same_size( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & ~other.words_[i] )
        return false;
    return true;
  }

  bool intersects( const bitset& other ) const
  {
    same_size( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & other.words_[i] )
        return true;
    return false;
  }

  bitset& operator&=( const bitset& other )
  {
    same_size( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] &= other.words_[i];
    return *this;
  }

  bitset& operator|=( const bitset& other )
  {
    same_size( other );
    for ( std::size_t i = 0; i < words_.size(); ++i )
      words_[i] |= other.words_[i];
    return *this;
  }

  friend bitset operator&( bitset a, const bitset& b ) { return a &= b; }
  friend bitset operator|( bitset a, const bitset& b ) { return a |= b; }

  friend bool operator==( const bitset& a, const bitset& b )
  {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  /*! Applies fn to each member in ascending order. */
  template<typename Fn>
  void for_each( Fn&& fn ) const
  {
    for ( std::size_t wi = 0; wi < words_.size(); ++wi )
    {
      auto w = words_[wi];
      while ( w )
      {
        const int b = std::countr_zero( w );
        fn( int( wi * 64 ) + b );
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const
  {
    std::vector<int> v;
    v.reserve( count() );
    for_each( [&]( int i ) { v.push_back( i ); } );
    return v;
  }

  /*! Orders sets by their ascending element sequences (a proper prefix
   * sorts first); used for deterministic tie-breaking. */
  friend bool lex_less( const bitset& a, const bitset& b )
  {
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare( va.begin(), va.end(), vb.begin(), vb.end() );
  }

private:
  void check( int i ) const
  {
    if ( i < 0 || i >= size_ )
      throw std::out_of_range( "bitset: index out of range" );
  }

  void same_size( const bitset& other ) const
  {
    if ( size_ != other.size_ )
      throw std::invalid_argument( "bitset: size mismatch" );
  }

  void trim()
  {
    if ( size_ & 63 )
      words_.back() &= ( std::uint64_t( 1 ) << ( size_ & 63 ) ) - 1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace triad
