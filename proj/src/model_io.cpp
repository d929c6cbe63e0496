#include "triad/model_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace triad
{

namespace
{

void write_matrix( std::ostream& out, const Eigen::MatrixXd& m )
{
  out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for ( Eigen::Index r = 0; r < m.rows(); ++r )
  {
    for ( Eigen::Index c = 0; c < m.cols(); ++c )
      out << ( c ? " " : "" ) << m( r, c );
    out << '\n';
  }
}

Eigen::MatrixXd read_matrix( std::istream& in )
{
  std::string tag;
  Eigen::Index rows, cols;
  if ( !( in >> tag >> rows >> cols ) || tag != "matrix" )
    throw std::invalid_argument( "model: expected 'matrix <rows> <cols>'" );
  if ( rows < 1 || cols < 1 || rows > 1 << 20 || cols > 1 << 20 )
    throw std::invalid_argument( "model: unreasonable matrix shape" );
  Eigen::MatrixXd m( rows, cols );
  for ( Eigen::Index r = 0; r < rows; ++r )
    for ( Eigen::Index c = 0; c < cols; ++c )
      if ( !( in >> m( r, c ) ) )
        throw std::invalid_argument( "model: truncated matrix data" );
  return m;
}

void expect_key( std::istream& in, const std::string& key )
{
  std::string tag;
  if ( !( in >> tag ) || tag != key )
    throw std::invalid_argument( "model: expected '" + key + "'" );
}

} // namespace

void save_model( std::ostream& out, const simple_ann_model& model )
{
  validate( model );
  out << std::setprecision( 17 );
  out << "triad-model 1\n";
  out << "n_atts " << model.n_atts << '\n';
  out << "below " << model.below.size() << '\n';
  out << "above " << model.above.size() << '\n';
  out << "threshold " << model.threshold << '\n';
  for ( const auto& m : model.below )
    write_matrix( out, m );
  for ( const auto& m : model.above )
    write_matrix( out, m );
}

void save_model_file( const std::string& path, const simple_ann_model& model )
{
  std::ofstream out( path );
  if ( !out )
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  save_model( out, model );
}

simple_ann_model load_model( std::istream& in )
{
  std::string magic;
  int version;
  if ( !( in >> magic >> version ) || magic != "triad-model" || version != 1 )
    throw std::invalid_argument( "model: not a triad-model version 1 file" );

  simple_ann_model model;
  std::size_t n_below, n_above;
  expect_key( in, "n_atts" );
  if ( !( in >> model.n_atts ) )
    throw std::invalid_argument( "model: bad n_atts" );
  expect_key( in, "below" );
  if ( !( in >> n_below ) )
    throw std::invalid_argument( "model: bad below count" );
  expect_key( in, "above" );
  if ( !( in >> n_above ) )
    throw std::invalid_argument( "model: bad above count" );
  expect_key( in, "threshold" );
  if ( !( in >> model.threshold ) )
    throw std::invalid_argument( "model: bad threshold" );
  if ( n_below < 1 || n_above < 1 || n_below + n_above > 64 )
    throw std::invalid_argument( "model: unreasonable layer counts" );

  for ( std::size_t i = 0; i < n_below; ++i )
    model.below.push_back( read_matrix( in ) );
  for ( std::size_t i = 0; i < n_above; ++i )
    model.above.push_back( read_matrix( in ) );
  validate( model );
  return model;
}

simple_ann_model load_model_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  return load_model( in );
}

} // namespace triad
