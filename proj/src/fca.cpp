#include "triad/fca.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "triad/threshold.hpp"

namespace triad
{

rational::rational( std::int64_t n, std::int64_t d ) : num( n ), den( d )
{
  if ( den == 0 )
    throw std::invalid_argument( "rational: zero denominator" );
  if ( den < 0 )
  {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd( num < 0 ? -num : num, den );
  if ( g > 1 )
  {
    num /= g;
    den /= g;
  }
}

rational rational::operator+( const rational& other ) const
{
  return rational( num * other.den + other.num * den, den * other.den );
}

bitset derive_intent( const dyadic_context& ctx, const bitset& objects )
{
  bitset intent( ctx.n_attributes() );
  intent.set_all();
  objects.for_each( [&]( int g ) { intent &= ctx.rows[g]; } );
  return intent;
}

bitset derive_extent( const dyadic_context& ctx, const bitset& attributes )
{
  bitset extent( ctx.n_objects() );
  for ( int g = 0; g < ctx.n_objects(); ++g )
    if ( attributes.is_subset_of( ctx.rows[g] ) )
      extent.set( g );
  return extent;
}

std::vector<dyadic_concept> concepts_from_singletons( const dyadic_context& ctx )
{
  std::map<std::pair<std::vector<int>, std::vector<int>>, dyadic_concept> unique;

  const auto add = [&]( bitset extent, bitset intent ) {
    auto key = std::make_pair( extent.to_vector(), intent.to_vector() );
    unique.try_emplace( std::move( key ), dyadic_concept{ std::move( extent ), std::move( intent ) } );
  };

  for ( int g = 0; g < ctx.n_objects(); ++g )
  {
    const bitset intent = ctx.rows[g];
    add( derive_extent( ctx, intent ), intent );
  }
  for ( int m = 0; m < ctx.n_attributes(); ++m )
  {
    bitset single( ctx.n_attributes() );
    single.set( m );
    const bitset extent = derive_extent( ctx, single );
    add( extent, derive_intent( ctx, extent ) );
  }

  std::vector<dyadic_concept> out;
  out.reserve( unique.size() );
  for ( auto& [key, c] : unique )
    out.push_back( std::move( c ) );
  return out;
}

dyadic_context read_cxt( std::istream& in )
{
  std::string line;
  const auto next_line = [&]( bool skip_blank ) {
    while ( std::getline( in, line ) )
    {
      while ( !line.empty() && ( line.back() == '\r' || line.back() == '\n' ) )
        line.pop_back();
      if ( !skip_blank || !line.empty() )
        return;
    }
    throw std::invalid_argument( "cxt: unexpected end of input" );
  };

  next_line( true );
  if ( line != "B" )
    throw std::invalid_argument( "cxt: missing B header" );
  next_line( true );
  const int n_objects = std::stoi( line );
  next_line( true );
  const int n_attributes = std::stoi( line );
  if ( n_objects < 0 || n_attributes < 0 )
    throw std::invalid_argument( "cxt: negative counts" );

  dyadic_context ctx;
  for ( int g = 0; g < n_objects; ++g )
  {
    next_line( true );
    ctx.object_names.push_back( line );
  }
  for ( int m = 0; m < n_attributes; ++m )
  {
    next_line( true );
    ctx.attribute_names.push_back( line );
  }
  for ( int g = 0; g < n_objects; ++g )
  {
    next_line( true );
    if ( static_cast<int>( line.size() ) != n_attributes )
      throw std::invalid_argument( "cxt: incidence row " + std::to_string( g + 1 ) + " has wrong length" );
    bitset row( n_attributes );
    for ( int m = 0; m < n_attributes; ++m )
    {
      if ( line[m] == 'X' || line[m] == 'x' )
        row.set( m );
      else if ( line[m] != '.' )
        throw std::invalid_argument( "cxt: incidence rows may contain only X and ." );
    }
    ctx.rows.push_back( std::move( row ) );
  }
  return ctx;
}

void write_cxt( std::ostream& out, const dyadic_context& ctx )
{
  out << "B\n\n" << ctx.n_objects() << '\n' << ctx.n_attributes() << "\n\n";
  for ( int g = 0; g < ctx.n_objects(); ++g )
    out << ( g < static_cast<int>( ctx.object_names.size() ) ? ctx.object_names[g] : "g" + std::to_string( g + 1 ) ) << '\n';
  for ( int m = 0; m < ctx.n_attributes(); ++m )
    out << ( m < static_cast<int>( ctx.attribute_names.size() ) ? ctx.attribute_names[m] : "m" + std::to_string( m + 1 ) ) << '\n';
  for ( int g = 0; g < ctx.n_objects(); ++g )
  {
    for ( int m = 0; m < ctx.n_attributes(); ++m )
      out << ( ctx.rows[g].test( m ) ? 'X' : '.' );
    out << '\n';
  }
}

triadic_context::triadic_context( int cells, int minterms, int levels )
    : n_cells( cells ), n_minterms( minterms ), n_levels( levels ),
      slices( cells, bitset( minterms * levels ) )
{
  if ( cells < 0 || minterms < 0 || levels < 0 )
    throw std::invalid_argument( "triadic_context: negative dimension" );
  cell_numbers.resize( cells );
  for ( int c = 0; c < cells; ++c )
    cell_numbers[c] = static_cast<std::uint32_t>( c );
}

bool triadic_context::any() const
{
  for ( const auto& s : slices )
    if ( s.any() )
      return true;
  return false;
}

triadic_context to_triadic_context( const bit_tensor& bt )
{
  triadic_context ctx( static_cast<int>( bt.cells.size() ), static_cast<int>( bt.floors.cols() ), bt.n_bits() );
  ctx.cell_numbers = bt.cells;
  for ( int c = 0; c < ctx.n_cells; ++c )
    for ( int k = 0; k < ctx.n_minterms; ++k )
      for ( int l = 0; l < ctx.n_levels; ++l )
        if ( bt.bit( c, k, l ) )
          ctx.set( c, k, l );
  return ctx;
}

std::int64_t triadic_concept::power_sum() const
{
  std::int64_t sum = 0;
  levels.for_each( [&]( int l ) { sum += std::int64_t( 1 ) << l; } );
  return sum;
}

namespace
{

/*! Per-minterm level sets of one cell slice. */
std::vector<bitset> slice_rows( const triadic_context& ctx, int c )
{
  std::vector<bitset> rows( ctx.n_minterms, bitset( ctx.n_levels ) );
  ctx.slices[c].for_each( [&]( int i ) { rows[i / ctx.n_levels].set( i % ctx.n_levels ); } );
  return rows;
}

std::vector<int> concept_key( const triadic_concept& t )
{
  std::vector<int> key;
  key.reserve( t.cells.count() + t.minterms.count() + t.levels.count() + 2 );
  t.cells.for_each( [&]( int i ) { key.push_back( i ); } );
  key.push_back( -1 );
  t.minterms.for_each( [&]( int i ) { key.push_back( i ); } );
  key.push_back( -1 );
  t.levels.for_each( [&]( int i ) { key.push_back( i ); } );
  return key;
}

std::int64_t weighted_cell_count( const bitset& cells, const std::vector<std::int64_t>* supports )
{
  if ( !supports )
    return cells.count();
  std::int64_t sum = 0;
  cells.for_each( [&]( int c ) { sum += ( *supports )[c]; } );
  return sum;
}

std::int64_t concept_energy( const triadic_concept& t, const std::vector<std::int64_t>* supports )
{
  return weighted_cell_count( t.cells, supports ) * t.minterms.count() * t.power_sum();
}

std::int64_t context_energy( const triadic_context& ctx, const std::vector<std::int64_t>* supports )
{
  std::int64_t sum = 0;
  for ( int c = 0; c < ctx.n_cells; ++c )
  {
    std::int64_t slice_sum = 0;
    ctx.slices[c].for_each( [&]( int i ) { slice_sum += std::int64_t( 1 ) << ( i % ctx.n_levels ); } );
    sum += slice_sum * ( supports ? ( *supports )[c] : 1 );
  }
  return sum;
}

} // namespace

std::vector<triadic_concept> triconcepts( const triadic_context& ctx )
{
  std::map<std::vector<int>, triadic_concept> unique;

  for ( int c = 0; c < ctx.n_cells; ++c )
  {
    if ( ctx.slices[c].none() )
      continue;
    dyadic_context slice;
    slice.rows = slice_rows( ctx, c );

    for ( auto& dc : concepts_from_singletons( slice ) )
    {
      if ( dc.extent.none() || dc.intent.none() )
        continue; /* covers no set bit */

      triadic_concept t;
      t.minterms = dc.extent;
      t.levels = dc.intent;
      t.cells = bitset( ctx.n_cells );
      /* close the cell set: every cell whose slice contains the full
       * minterm x level rectangle */
      for ( int c2 = 0; c2 < ctx.n_cells; ++c2 )
      {
        bool full = true;
        t.minterms.for_each( [&]( int k ) {
          if ( !full )
            return;
          t.levels.for_each( [&]( int l ) {
            if ( full && !ctx.test( c2, k, l ) )
              full = false;
          } );
        } );
        if ( full )
          t.cells.set( c2 );
      }
      unique.try_emplace( concept_key( t ), std::move( t ) );
    }
  }

  std::vector<triadic_concept> out;
  out.reserve( unique.size() );
  for ( auto& [key, t] : unique )
    out.push_back( std::move( t ) );
  return out;
}

selection_method parse_selection_method( const std::string& name )
{
  if ( name == "M1" || name == "m1" )
    return selection_method::relative_power;
  if ( name == "M2" || name == "m2" )
    return selection_method::cells_times_power_sum;
  if ( name == "M3" || name == "m3" )
    return selection_method::power_sum;
  if ( name == "M4" || name == "m4" )
    return selection_method::accuracy;
  throw std::invalid_argument( "unknown selection method '" + name + "', expected M1..M4" );
}

std::string to_string( selection_method m )
{
  switch ( m )
  {
  case selection_method::relative_power:
    return "M1";
  case selection_method::cells_times_power_sum:
    return "M2";
  case selection_method::power_sum:
    return "M3";
  case selection_method::accuracy:
    return "M4";
  }
  return "?";
}

namespace
{

double accuracy_score( const triadic_concept& t, const std::vector<object_view>& objects )
{
  const double ps = double( t.power_sum() );
  std::vector<double> scores;
  std::vector<int> targets;
  for ( const auto& o : objects )
  {
    if ( o.cell_row < 0 || !t.cells.test( o.cell_row ) )
      continue;
    double mt_sum = 0.0;
    t.minterms.for_each( [&]( int k ) { mt_sum += o.minterms[k]; } );
    scores.push_back( ps * mt_sum );
    targets.push_back( o.target );
  }
  return best_threshold( scores, targets ).accuracy;
}

} // namespace

double score_concept( const triadic_concept& c, const selection_options& opts, std::int64_t total_energy,
                      const std::vector<std::int64_t>& cell_supports, const std::vector<object_view>& objects )
{
  const auto* supports = opts.support_weighted ? &cell_supports : nullptr;
  switch ( opts.method )
  {
  case selection_method::relative_power:
    return total_energy == 0 ? 0.0 : double( concept_energy( c, supports ) ) / double( total_energy );
  case selection_method::cells_times_power_sum:
    return double( weighted_cell_count( c.cells, supports ) * c.power_sum() );
  case selection_method::power_sum:
    return double( c.power_sum() );
  case selection_method::accuracy:
    return accuracy_score( c, objects );
  }
  return 0.0;
}

std::vector<triadic_concept> exclusive_triconcepts( const triadic_context& ctx, const selection_options& opts,
                                                    const std::vector<std::int64_t>& cell_supports,
                                                    const std::vector<object_view>& objects )
{
  const auto* supports = opts.support_weighted ? &cell_supports : nullptr;
  if ( supports && static_cast<int>( cell_supports.size() ) != ctx.n_cells )
    throw std::invalid_argument( "exclusive_triconcepts: one support per cell required" );

  triadic_context remaining = ctx;
  const std::int64_t total = context_energy( remaining, supports );

  std::vector<triadic_concept> picked;
  while ( remaining.any() )
  {
    auto candidates = triconcepts( remaining );

    /* argmax under the method; exact integer keys for the energy
     * methods, doubles only for the accuracy method */
    int best = -1;
    std::int64_t best_int = 0;
    double best_dbl = 0.0;
    for ( std::size_t i = 0; i < candidates.size(); ++i )
    {
      const auto& cand = candidates[i];
      bool better = false, tie = false;
      if ( opts.method == selection_method::accuracy )
      {
        const double s = accuracy_score( cand, objects );
        better = best < 0 || s > best_dbl;
        tie = best >= 0 && s == best_dbl;
        if ( better )
          best_dbl = s;
      }
      else
      {
        std::int64_t s = 0;
        switch ( opts.method )
        {
        case selection_method::relative_power:
          s = concept_energy( cand, supports );
          break;
        case selection_method::cells_times_power_sum:
          s = weighted_cell_count( cand.cells, supports ) * cand.power_sum();
          break;
        default:
          s = cand.power_sum();
          break;
        }
        better = best < 0 || s > best_int;
        tie = best >= 0 && s == best_int;
        if ( better )
          best_int = s;
      }
      if ( better )
        best = static_cast<int>( i );
      else if ( tie && concept_key( cand ) < concept_key( candidates[best] ) )
        best = static_cast<int>( i );
    }
    if ( best < 0 )
      break; /* unreachable: a non-empty context always yields concepts */

    triadic_concept chosen = candidates[best];
    chosen.power = concept_energy( chosen, supports );
    chosen.relpower = rational( chosen.power, total );
    chosen.cells.for_each( [&]( int c ) {
      chosen.minterms.for_each( [&]( int k ) {
        chosen.levels.for_each( [&]( int l ) { remaining.reset( c, k, l ); } );
      } );
    } );
    picked.push_back( std::move( chosen ) );
  }
  return picked;
}

std::vector<std::pair<int, int>> concept_implications( const std::vector<triadic_concept>& concepts )
{
  std::vector<std::pair<int, int>> edges;
  for ( std::size_t i = 0; i < concepts.size(); ++i )
    for ( std::size_t j = 0; j < concepts.size(); ++j )
    {
      if ( i == j )
        continue;
      if ( concepts[i].minterms.is_subset_of( concepts[j].minterms ) &&
           concepts[j].cells.is_subset_of( concepts[i].cells ) )
        edges.emplace_back( static_cast<int>( i ), static_cast<int>( j ) );
    }
  return edges;
}

} // namespace triad
