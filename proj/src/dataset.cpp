#include "triad/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "triad/minterm.hpp"

namespace triad
{

namespace
{

std::vector<std::string> split_csv_line( const std::string& line )
{
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss( line );
  while ( std::getline( ss, field, ',' ) )
  {
    /* trim surrounding whitespace */
    const auto b = field.find_first_not_of( " \t\r" );
    const auto e = field.find_last_not_of( " \t\r" );
    fields.push_back( b == std::string::npos ? "" : field.substr( b, e - b + 1 ) );
  }
  if ( !line.empty() && line.back() == ',' )
    fields.push_back( "" );
  return fields;
}

double parse_number( const std::string& s, const std::string& column, std::size_t row )
{
  double v{};
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars( first, last, v );
  if ( res.ec != std::errc{} || res.ptr != last )
    throw std::invalid_argument( "csv: non-numeric value '" + s + "' in column '" + column +
                                 "', data row " + std::to_string( row ) );
  return v;
}

} // namespace

void validate( const labeled_dataset& data )
{
  if ( data.n_objects() == 0 )
    throw std::invalid_argument( "dataset: no objects" );
  if ( data.n_attributes() < 1 )
    throw std::invalid_argument( "dataset: no attributes" );
  if ( data.n_attributes() > max_attributes )
    throw std::invalid_argument( "dataset: more than " + std::to_string( max_attributes ) + " attributes" );
  if ( static_cast<int>( data.targets.size() ) != data.n_objects() )
    throw std::invalid_argument( "dataset: target count does not match object count" );
  if ( static_cast<int>( data.attribute_names.size() ) != data.n_attributes() )
    throw std::invalid_argument( "dataset: attribute name count mismatch" );
  for ( auto t : data.targets )
    if ( t != 0 && t != 1 )
      throw std::invalid_argument( "dataset: target outside {0,1}" );
  for ( int i = 0; i < data.n_objects(); ++i )
    for ( int j = 0; j < data.n_attributes(); ++j )
      if ( !( data.values( i, j ) >= 0.0 && data.values( i, j ) <= 1.0 ) )
        throw std::domain_error( "dataset: value outside [0,1] in column '" + data.attribute_names[j] +
                                 "', object " + std::to_string( i ) );
}

labeled_dataset read_csv( std::istream& in )
{
  std::string line;
  if ( !std::getline( in, line ) )
    throw std::invalid_argument( "csv: empty input" );
  auto header = split_csv_line( line );
  if ( header.size() < 2 )
    throw std::invalid_argument( "csv: need at least one attribute column and a target column" );

  const int n_cols = static_cast<int>( header.size() );
  std::vector<std::vector<double>> rows;
  std::vector<int> targets;
  std::size_t row_no = 0;
  while ( std::getline( in, line ) )
  {
    if ( line.find_first_not_of( " \t\r" ) == std::string::npos )
      continue;
    ++row_no;
    auto fields = split_csv_line( line );
    if ( static_cast<int>( fields.size() ) != n_cols )
      throw std::invalid_argument( "csv: data row " + std::to_string( row_no ) + " has " +
                                   std::to_string( fields.size() ) + " fields, expected " +
                                   std::to_string( n_cols ) );
    std::vector<double> vals( n_cols - 1 );
    for ( int j = 0; j + 1 < n_cols; ++j )
      vals[j] = parse_number( fields[j], header[j], row_no );
    const double t = parse_number( fields[n_cols - 1], header[n_cols - 1], row_no );
    if ( t != 0.0 && t != 1.0 )
      throw std::invalid_argument( "csv: target outside {0,1} in data row " + std::to_string( row_no ) );
    rows.push_back( std::move( vals ) );
    targets.push_back( static_cast<int>( t ) );
  }
  if ( rows.empty() )
    throw std::invalid_argument( "csv: no data rows" );

  labeled_dataset data;
  data.attribute_names.assign( header.begin(), header.end() - 1 );
  data.values.resize( static_cast<Eigen::Index>( rows.size() ), n_cols - 1 );
  for ( std::size_t i = 0; i < rows.size(); ++i )
    for ( int j = 0; j + 1 < n_cols; ++j )
      data.values( static_cast<Eigen::Index>( i ), j ) = rows[i][j];
  data.targets = std::move( targets );
  return data;
}

labeled_dataset read_csv_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  return read_csv( in );
}

void write_csv( std::ostream& out, const labeled_dataset& data )
{
  for ( const auto& name : data.attribute_names )
    out << name << ',';
  out << "target\n";
  out.precision( 17 );
  for ( int i = 0; i < data.n_objects(); ++i )
  {
    for ( int j = 0; j < data.n_attributes(); ++j )
      out << data.values( i, j ) << ',';
    out << data.targets[i] << '\n';
  }
}

void write_csv_file( const std::string& path, const labeled_dataset& data )
{
  std::ofstream out( path );
  if ( !out )
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  write_csv( out, data );
}

labeled_dataset minmax_normalize( const labeled_dataset& data )
{
  labeled_dataset out = data;
  for ( int j = 0; j < data.n_attributes(); ++j )
  {
    const double lo = data.values.col( j ).minCoeff();
    const double hi = data.values.col( j ).maxCoeff();
    if ( lo == hi )
      throw std::invalid_argument( "normalize: column '" + data.attribute_names[j] + "' is constant" );
    out.values.col( j ) = ( data.values.col( j ).array() - lo ) / ( hi - lo );
  }
  return out;
}

labeled_dataset balance_downsample( const labeled_dataset& data, unsigned seed )
{
  std::vector<int> ones, zeros;
  for ( int i = 0; i < data.n_objects(); ++i )
    ( data.targets[i] ? ones : zeros ).push_back( i );

  auto& majority = ones.size() > zeros.size() ? ones : zeros;
  const std::size_t keep = std::min( ones.size(), zeros.size() );
  if ( keep == 0 )
    throw std::invalid_argument( "balance: a class is absent" );

  std::mt19937 rng( seed );
  std::shuffle( majority.begin(), majority.end(), rng );
  majority.resize( keep );

  std::vector<int> kept;
  kept.reserve( 2 * keep );
  kept.insert( kept.end(), ones.begin(), ones.end() );
  kept.insert( kept.end(), zeros.begin(), zeros.end() );
  std::sort( kept.begin(), kept.end() );

  labeled_dataset out;
  out.attribute_names = data.attribute_names;
  out.values.resize( static_cast<Eigen::Index>( kept.size() ), data.n_attributes() );
  out.targets.resize( kept.size() );
  for ( std::size_t r = 0; r < kept.size(); ++r )
  {
    out.values.row( static_cast<Eigen::Index>( r ) ) = data.values.row( kept[r] );
    out.targets[r] = data.targets[kept[r]];
  }
  return out;
}

labeled_dataset ingest( const std::string& path, bool balance, unsigned seed )
{
  auto data = read_csv_file( path );
  data = minmax_normalize( data );
  if ( balance )
    data = balance_downsample( data, seed );
  validate( data );
  return data;
}

} // namespace triad
