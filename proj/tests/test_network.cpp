#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "triad/minterm.hpp"
#include "triad/model_io.hpp"
#include "triad/network.hpp"

using namespace triad;

namespace
{

/*! One ReLU node, weights = w: output = max(<w, mt>, 0). */
simple_ann_model single_cell_model( const Eigen::VectorXd& w, int n_atts, double tau )
{
  simple_ann_model m;
  m.n_atts = n_atts;
  Eigen::MatrixXd w1 = w.transpose();
  Eigen::MatrixXd w2( 1, 1 );
  w2( 0, 0 ) = 1.0;
  m.below = { w1 };
  m.above = { w2 };
  m.threshold = tau;
  return m;
}

/*! Two opposing nodes over one attribute: z = (1-2x, 2x-1). */
simple_ann_model seesaw_model()
{
  simple_ann_model m;
  m.n_atts = 1;
  Eigen::MatrixXd w1( 2, 2 );
  w1 << 1, -1, /* mt0 - mt1 = 1 - 2x */
      -1, 1;   /* mt1 - mt0 = 2x - 1 */
  Eigen::MatrixXd w2( 1, 2 );
  w2 << 1, 1;
  m.below = { w1 };
  m.above = { w2 };
  return m;
}

Eigen::VectorXd scalar_minterms( double x )
{
  Eigen::VectorXd v( 1 );
  v << x;
  return to_minterms( v );
}

} // namespace

TEST_CASE( "forward matches the loop oracle, also with stacked layers" )
{
  std::mt19937 rng( 11 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const int n = 1 + static_cast<int>( rng() % 4 );
    const int l = 1 + static_cast<int>( rng() % 5 );
    auto m = oracle::random_model( rng, n, l );
    if ( trial % 3 == 0 )
    {
      /* split the input-side map into two factors */
      Eigen::MatrixXd extra = Eigen::MatrixXd::Identity( l, l ) * 2.0;
      m.below.push_back( extra );
      m.above.front() /= 2.0;
    }
    validate( m );
    const auto mt = to_minterms( oracle::random_unit_vector( rng, n ) );
    CHECK( forward( m, mt ) == doctest::Approx( oracle::forward( m, mt ) ).epsilon( 1e-12 ) );
  }
}

TEST_CASE( "the cell weights of the input's own cell reproduce the output" )
{
  std::mt19937 rng( 12 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const int n = 1 + static_cast<int>( rng() % 4 );
    const int l = 1 + static_cast<int>( rng() % 6 );
    const auto m = oracle::random_model( rng, n, l );
    const auto mt = to_minterms( oracle::random_unit_vector( rng, n ) );
    const auto p = relu_status( m, mt );
    const Eigen::VectorXd mw = cell_weights( m, p );
    CHECK( mw.dot( mt ) == doctest::Approx( forward( m, mt ) ).epsilon( 1e-12 ) );
  }
}

TEST_CASE( "partition bits follow the node order, first node most significant" )
{
  const auto m = seesaw_model();
  CHECK( relu_status( m, scalar_minterms( 0.0 ) ) == 2u );  /* node 1 active */
  CHECK( relu_status( m, scalar_minterms( 1.0 ) ) == 1u );  /* node 2 active */
  CHECK( relu_status( m, scalar_minterms( 0.25 ) ) == 2u );
  CHECK( relu_status( m, scalar_minterms( 0.75 ) ) == 1u );
  /* both nodes sit on the boundary z = 0 and count as active */
  CHECK( relu_status( m, scalar_minterms( 0.5 ) ) == 3u );
}

TEST_CASE( "cell weights decompose into single-node atoms" )
{
  std::mt19937 rng( 13 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    const int n = 1 + static_cast<int>( rng() % 3 );
    const int l = 1 + static_cast<int>( rng() % 6 );
    const auto m = oracle::random_model( rng, n, l );
    const auto atoms = atomic_weights( m );
    REQUIRE( static_cast<int>( atoms.size() ) == l );
    for ( std::uint32_t p = 0; p < ( 1u << l ); ++p )
    {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero( m.input_dim() );
      for ( int i = 0; i < l; ++i )
        if ( ( p >> ( l - 1 - i ) ) & 1u )
          sum += atoms[i];
      const Eigen::VectorXd direct = cell_weights( m, p );
      CHECK( ( direct - sum ).lpNorm<Eigen::Infinity>() <= 1e-9 );
    }
  }
  CHECK_THROWS_AS( cell_weights( seesaw_model(), 4u ), std::out_of_range );
}

TEST_CASE( "enumerate_cells tallies targets per partition" )
{
  const auto m = seesaw_model();
  labeled_dataset data;
  data.attribute_names = { "x" };
  data.values.resize( 5, 1 );
  data.values << 0.0, 0.1, 0.9, 1.0, 0.3;
  data.targets = { 0, 1, 1, 1, 0 };

  const auto cells = enumerate_cells( m, data );
  REQUIRE( cells.size() == 2 );
  CHECK( cells[0].number == 1u );
  CHECK( cells[0].count0 == 0 );
  CHECK( cells[0].count1 == 2 );
  CHECK( !cells[0].mixed() );
  CHECK( cells[1].number == 2u );
  CHECK( cells[1].count0 == 2 );
  CHECK( cells[1].count1 == 1 );
  CHECK( cells[1].mixed() );
  for ( const auto& c : cells )
    CHECK( ( c.weights - cell_weights( m, c.number ) ).lpNorm<Eigen::Infinity>() == 0.0 );
}

TEST_CASE( "auto_min_support follows the coverage target" )
{
  std::vector<partition_cell> cells( 3 );
  cells[0].number = 1;
  cells[0].count1 = 5;
  cells[1].number = 2;
  cells[1].count0 = 3;
  cells[2].number = 3;
  cells[2].count0 = 2;

  CHECK( auto_min_support( cells, 0.8 ) == 3 );  /* 5 + 3 = 8 of 10 */
  CHECK( auto_min_support( cells, 0.5 ) == 5 );
  CHECK( auto_min_support( cells, 1.0 ) == 2 );
  CHECK( auto_min_support( {}, 0.8 ) == 0 );
}

TEST_CASE( "essential cells are ordered by support and filtered" )
{
  std::vector<partition_cell> cells( 4 );
  cells[0].number = 1;
  cells[0].count0 = 1;
  cells[0].count1 = 1; /* support 2, mixed */
  cells[1].number = 2;
  cells[1].count0 = 5; /* support 5, pure */
  cells[2].number = 3;
  cells[2].count0 = 2;
  cells[2].count1 = 3; /* support 5, mixed */
  cells[3].number = 4;
  cells[3].count1 = 1; /* support 1 */

  auto sel = select_essential( cells, 2, false );
  REQUIRE( sel.size() == 3 );
  CHECK( sel[0].number == 2u ); /* support 5, lower number first on ties */
  CHECK( sel[1].number == 3u );
  CHECK( sel[2].number == 1u );

  sel = select_essential( cells, 2, true );
  REQUIRE( sel.size() == 2 );
  CHECK( sel[0].number == 3u );
  CHECK( sel[1].number == 1u );

  CHECK( select_essential( cells, 100, false ).empty() );
}

TEST_CASE( "fit_threshold maximizes training accuracy, smallest tie" )
{
  Eigen::VectorXd w( 4 );
  w << -8, 3, 6, 2;
  auto m = single_cell_model( w, 2, 0.0 );

  labeled_dataset data;
  data.attribute_names = { "a1", "a2" };
  data.values.resize( 2, 2 );
  data.values << 0.8, 0.1, 0.5, 0.6;
  data.targets = { 1, 0 };

  /* raw scores are 3.1 and 1.1; tau = 1.1 separates them perfectly */
  CHECK( fit_threshold( m, data ) == doctest::Approx( 1.1 ).epsilon( 1e-12 ) );

  data.targets = { 1, 1 };
  CHECK( fit_threshold( m, data ) < 1.1 ); /* everything above tau */

  data.targets = { 0, 0 };
  CHECK( fit_threshold( m, data ) == doctest::Approx( 3.1 ).epsilon( 1e-12 ) );
}

TEST_CASE( "training is deterministic per seed and learns a separable rule" )
{
  labeled_dataset data;
  data.attribute_names = { "a1", "a2" };
  data.values.resize( 8, 2 );
  data.values << 0, 0, 0, 1, 1, 0, 1, 1, 0.1, 0.1, 0.1, 0.9, 0.9, 0.1, 0.9, 0.9;
  data.targets = { 0, 1, 1, 0, 0, 1, 1, 0 }; /* xor-shaped */

  train_config cfg;
  cfg.relu_count = 4;
  cfg.epochs = 1500;
  cfg.learning_rate = 0.5;
  cfg.seed = 3;

  const auto r1 = train( data, cfg );
  const auto r2 = train( data, cfg );
  std::ostringstream s1, s2;
  save_model( s1, r1.model );
  save_model( s2, r2.model );
  CHECK( s1.str() == s2.str() ); /* bitwise deterministic */
  CHECK( r1.accuracy == doctest::Approx( 1.0 ) );
  CHECK( r1.loss < 0.05 );

  cfg.seed = 4;
  std::ostringstream s3;
  save_model( s3, train( data, cfg ).model );
  CHECK( s1.str() != s3.str() );
}

TEST_CASE( "zero training epochs return the seeded initial weights" )
{
  labeled_dataset data;
  data.attribute_names = { "a1" };
  data.values.resize( 2, 1 );
  data.values << 0.0, 1.0;
  data.targets = { 0, 1 };

  train_config cfg;
  cfg.relu_count = 2;
  cfg.epochs = 0;
  cfg.seed = 5;

  const auto r = train( data, cfg );
  CHECK( !r.converged );
  for ( Eigen::Index i = 0; i < r.model.below.front().size(); ++i )
  {
    CHECK( r.model.below.front()( i ) >= -0.5 );
    CHECK( r.model.below.front()( i ) <= 0.5 );
  }
}

TEST_CASE( "model validation rejects malformed stacks" )
{
  auto m = seesaw_model();
  validate( m );

  auto bad = m;
  bad.above.front() = Eigen::MatrixXd::Ones( 2, 2 ); /* two outputs */
  CHECK_THROWS_AS( validate( bad ), std::invalid_argument );

  bad = m;
  bad.below.front() = Eigen::MatrixXd::Ones( 2, 3 ); /* input not 2^n */
  CHECK_THROWS_AS( validate( bad ), std::invalid_argument );

  bad = m;
  bad.above.front() = Eigen::MatrixXd::Ones( 1, 3 ); /* does not compose */
  CHECK_THROWS_AS( validate( bad ), std::invalid_argument );

  bad = m;
  bad.below.clear();
  CHECK_THROWS_AS( validate( bad ), std::invalid_argument );

  bad = m;
  bad.n_atts = 0;
  CHECK_THROWS_AS( validate( bad ), std::invalid_argument );
}
