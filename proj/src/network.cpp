#include "triad/network.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "triad/minterm.hpp"
#include "triad/threshold.hpp"

namespace triad
{

void validate( const simple_ann_model& model )
{
  if ( model.n_atts < 1 || model.n_atts > max_attributes )
    throw std::invalid_argument( "model: attribute count out of range" );
  if ( model.below.empty() || model.above.empty() )
    throw std::invalid_argument( "model: need at least one layer on each side of the ReLU" );
  if ( model.below.front().cols() != model.input_dim() )
    throw std::invalid_argument( "model: first layer width must be 2^n_atts" );
  for ( std::size_t i = 1; i < model.below.size(); ++i )
    if ( model.below[i].cols() != model.below[i - 1].rows() )
      throw std::invalid_argument( "model: layer " + std::to_string( i ) + " below the ReLU does not compose" );
  const auto l = model.below.back().rows();
  if ( l < 1 || l > 31 )
    throw std::invalid_argument( "model: ReLU width out of range" );
  if ( model.above.front().cols() != l )
    throw std::invalid_argument( "model: first layer above the ReLU must take " + std::to_string( l ) + " inputs" );
  for ( std::size_t i = 1; i < model.above.size(); ++i )
    if ( model.above[i].cols() != model.above[i - 1].rows() )
      throw std::invalid_argument( "model: layer " + std::to_string( i ) + " above the ReLU does not compose" );
  if ( model.above.back().rows() != 1 )
    throw std::invalid_argument( "model: network must end in a single output node" );
}

Eigen::MatrixXd below_product( const simple_ann_model& model )
{
  Eigen::MatrixXd p = model.below.front();
  for ( std::size_t i = 1; i < model.below.size(); ++i )
    p = model.below[i] * p;
  return p;
}

Eigen::MatrixXd above_product( const simple_ann_model& model )
{
  Eigen::MatrixXd p = model.above.front();
  for ( std::size_t i = 1; i < model.above.size(); ++i )
    p = model.above[i] * p;
  return p;
}

Eigen::VectorXd pre_activations( const simple_ann_model& model, const Eigen::Ref<const Eigen::VectorXd>& mt )
{
  return below_product( model ) * mt;
}

double forward( const simple_ann_model& model, const Eigen::Ref<const Eigen::VectorXd>& mt )
{
  const Eigen::VectorXd z = pre_activations( model, mt );
  return ( above_product( model ) * z.cwiseMax( 0.0 ) )( 0 );
}

namespace
{

std::uint32_t status_bits( const Eigen::VectorXd& z )
{
  const int l = static_cast<int>( z.size() );
  std::uint32_t p = 0;
  for ( int i = 0; i < l; ++i )
    if ( z[i] >= 0.0 ) /* a node on its activation boundary counts as active */
      p |= std::uint32_t( 1 ) << ( l - 1 - i );
  return p;
}

Eigen::VectorXd cell_weights_from( const Eigen::MatrixXd& above, const Eigen::MatrixXd& below, std::uint32_t p )
{
  const int l = static_cast<int>( below.rows() );
  Eigen::RowVectorXd masked = above.row( 0 );
  for ( int i = 0; i < l; ++i )
    if ( !( ( p >> ( l - 1 - i ) ) & 1u ) )
      masked[i] = 0.0;
  return ( masked * below ).transpose();
}

} // namespace

std::uint32_t relu_status( const simple_ann_model& model, const Eigen::Ref<const Eigen::VectorXd>& mt )
{
  return status_bits( pre_activations( model, mt ) );
}

Eigen::VectorXd cell_weights( const simple_ann_model& model, std::uint32_t p )
{
  const int l = model.relu_count();
  if ( l >= 32 || p >= ( std::uint32_t( 1 ) << l ) )
    throw std::out_of_range( "cell_weights: partition number exceeds 2^l - 1" );
  return cell_weights_from( above_product( model ), below_product( model ), p );
}

std::vector<Eigen::VectorXd> atomic_weights( const simple_ann_model& model )
{
  const Eigen::MatrixXd below = below_product( model );
  const Eigen::MatrixXd above = above_product( model );
  const int l = model.relu_count();
  std::vector<Eigen::VectorXd> atoms( l );
  for ( int i = 0; i < l; ++i )
    atoms[i] = cell_weights_from( above, below, std::uint32_t( 1 ) << ( l - 1 - i ) );
  return atoms;
}

std::vector<partition_cell> enumerate_cells( const simple_ann_model& model, const labeled_dataset& data )
{
  validate( model );
  validate( data );
  if ( data.n_attributes() != model.n_atts )
    throw std::invalid_argument( "enumerate_cells: dataset/model attribute count mismatch" );

  const Eigen::MatrixXd below = below_product( model );
  const Eigen::MatrixXd above = above_product( model );

  std::map<std::uint32_t, partition_cell> cells;
  for ( int i = 0; i < data.n_objects(); ++i )
  {
    const Eigen::VectorXd mt = to_minterms( data.values.row( i ).transpose() );
    const std::uint32_t p = status_bits( below * mt );
    auto [it, inserted] = cells.try_emplace( p );
    if ( inserted )
    {
      it->second.number = p;
      it->second.weights = cell_weights_from( above, below, p );
    }
    ( data.targets[i] ? it->second.count1 : it->second.count0 )++;
  }

  std::vector<partition_cell> out;
  out.reserve( cells.size() );
  for ( auto& [p, cell] : cells )
    out.push_back( std::move( cell ) );
  return out;
}

std::int64_t auto_min_support( const std::vector<partition_cell>& cells, double coverage )
{
  std::int64_t total = 0;
  for ( const auto& c : cells )
    total += c.support();
  if ( total == 0 )
    return 0;

  std::vector<std::int64_t> supports;
  supports.reserve( cells.size() );
  for ( const auto& c : cells )
    supports.push_back( c.support() );
  std::sort( supports.begin(), supports.end(), std::greater<>() );

  std::int64_t covered = 0;
  for ( auto s : supports )
  {
    covered += s;
    if ( double( covered ) >= coverage * double( total ) )
      return s;
  }
  return supports.back();
}

std::vector<partition_cell> select_essential( const std::vector<partition_cell>& cells,
                                              std::int64_t min_support, bool require_mixed )
{
  std::vector<partition_cell> out;
  for ( const auto& c : cells )
    if ( c.support() >= min_support && ( !require_mixed || c.mixed() ) )
      out.push_back( c );
  std::sort( out.begin(), out.end(), []( const partition_cell& a, const partition_cell& b ) {
    if ( a.support() != b.support() )
      return a.support() > b.support();
    return a.number < b.number;
  } );
  return out;
}

double fit_threshold( const simple_ann_model& model, const labeled_dataset& data )
{
  validate( model );
  validate( data );
  const Eigen::MatrixXd below = below_product( model );
  const Eigen::MatrixXd above = above_product( model );

  std::vector<double> scores( data.n_objects() );
  for ( int i = 0; i < data.n_objects(); ++i )
  {
    const Eigen::VectorXd mt = to_minterms( data.values.row( i ).transpose() );
    scores[i] = ( above * ( below * mt ).cwiseMax( 0.0 ) )( 0 );
  }
  return best_threshold( scores, data.targets ).threshold;
}

train_result train( const labeled_dataset& data, const train_config& cfg )
{
  validate( data );
  if ( cfg.relu_count < 1 || cfg.relu_count > 31 )
    throw std::invalid_argument( "train: ReLU width out of range" );
  if ( cfg.epochs < 0 )
    throw std::invalid_argument( "train: negative epoch count" );
  if ( !( cfg.learning_rate > 0.0 ) )
    throw std::invalid_argument( "train: learning rate must be positive" );

  const int n = data.n_attributes();
  const int width = 1 << n;
  const int l = cfg.relu_count;
  const int m = data.n_objects();

  Eigen::MatrixXd mts( m, width );
  Eigen::VectorXd y( m );
  for ( int i = 0; i < m; ++i )
  {
    mts.row( i ) = to_minterms( data.values.row( i ).transpose() ).transpose();
    y[i] = data.targets[i];
  }

  std::mt19937 rng( cfg.seed );
  std::uniform_real_distribution<double> init( -0.5, 0.5 );
  Eigen::MatrixXd w1( l, width ), w2( 1, l );
  for ( Eigen::Index r = 0; r < w1.rows(); ++r )
    for ( Eigen::Index c = 0; c < w1.cols(); ++c )
      w1( r, c ) = init( rng );
  for ( Eigen::Index c = 0; c < w2.cols(); ++c )
    w2( 0, c ) = init( rng );

  const auto loss_of = [&]( const Eigen::MatrixXd& a, const Eigen::MatrixXd& b ) {
    const Eigen::MatrixXd h = ( mts * a.transpose() ).cwiseMax( 0.0 );
    const Eigen::VectorXd e = h * b.transpose() - y;
    return e.squaredNorm() / double( m );
  };

  Eigen::MatrixXd best_w1 = w1, best_w2 = w2;
  double best_loss = loss_of( w1, w2 );
  double prev_window_loss = best_loss;
  bool converged = false;

  for ( int epoch = 0; epoch < cfg.epochs; ++epoch )
  {
    const Eigen::MatrixXd z = mts * w1.transpose(); /* m x l */
    const Eigen::MatrixXd h = z.cwiseMax( 0.0 );
    const Eigen::VectorXd e = h * w2.transpose() - y;

    const Eigen::MatrixXd grad_w2 = ( 2.0 / m ) * e.transpose() * h;
    const Eigen::MatrixXd dz = ( ( 2.0 / m ) * e * w2 ).cwiseProduct( ( z.array() > 0.0 ).cast<double>().matrix() );
    const Eigen::MatrixXd grad_w1 = dz.transpose() * mts;

    w1 -= cfg.learning_rate * grad_w1;
    w2 -= cfg.learning_rate * grad_w2;

    const double loss = loss_of( w1, w2 );
    if ( loss < best_loss )
    {
      best_loss = loss;
      best_w1 = w1;
      best_w2 = w2;
    }
    /* plateau check over a trailing window; the last window decides */
    if ( ( epoch + 1 ) % 50 == 0 || epoch + 1 == cfg.epochs )
    {
      converged = prev_window_loss - loss <= 1e-9 * std::max( 1.0, prev_window_loss );
      prev_window_loss = loss;
    }
  }

  train_result result;
  result.model.n_atts = n;
  result.model.below = { best_w1 };
  result.model.above = { best_w2 };
  result.loss = best_loss;
  result.converged = converged;
  if ( !result.converged )
    result.note = "loss still falling at the last epoch; returning best weights seen";

  std::vector<double> scores( m );
  for ( int i = 0; i < m; ++i )
    scores[i] = ( best_w2 * ( best_w1 * mts.row( i ).transpose() ).cwiseMax( 0.0 ) )( 0 );
  const auto fit = best_threshold( scores, data.targets );
  result.model.threshold = fit.threshold;
  result.accuracy = fit.accuracy;
  return result;
}

} // namespace triad
