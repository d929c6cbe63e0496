/*! Acceptance harness: exercises the end-to-end guarantees of the
 * library and prints one [PASS]/[FAIL] line per criterion.  All
 * tolerances and budgets are pinned here; the process exits non-zero
 * when any criterion fails. */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "synthetic.hpp"
#include "triad/fca.hpp"
#include "triad/logic_tree.hpp"
#include "triad/minterm.hpp"
#include "triad/network.hpp"
#include "triad/pipeline.hpp"
#include "triad/quantize.hpp"
#include "triad/shapley.hpp"

using namespace triad;

namespace
{

int fail_count = 0;
std::vector<std::string> notes;

void expect( bool cond, const std::string& what )
{
  if ( cond )
    return;
  ++fail_count;
  if ( notes.size() < 6 )
    notes.push_back( what );
}

double seconds_since( const std::chrono::steady_clock::time_point& t0 )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
}

bitset make_set( int size, std::initializer_list<int> members )
{
  bitset s( size );
  for ( int m : members )
    s.set( m );
  return s;
}

/*! Weighted indicator trees of the extracted concepts, guarded by the
 * partition numbers of the covered tensor rows. */
std::vector<concept_tree> trees_of( const std::vector<triadic_concept>& concepts, const bit_tensor& bt )
{
  std::vector<concept_tree> trees;
  for ( const auto& c : concepts )
  {
    concept_tree t;
    t.tree = build_tree( c.minterms, bt.n_atts );
    t.power_sum = c.power_sum();
    c.cells.for_each( [&]( int row ) { t.cells.push_back( bt.cells[std::size_t( row )] ); } );
    trees.push_back( std::move( t ) );
  }
  return trees;
}

/* ------------------------------------------------------------------ */
/* 1. the single-cell golden example, end to end                       */
/* ------------------------------------------------------------------ */

void golden_walkthrough()
{
  const auto t0 = std::chrono::steady_clock::now();

  simple_ann_model m;
  m.n_atts = 2;
  m.threshold = 2.0;
  Eigen::MatrixXd w1( 1, 4 ), w2( 1, 1 );
  w1 << -8.0, 3.0, 6.0, 2.0;
  w2 << 1.0;
  m.below = { w1 };
  m.above = { w2 };

  labeled_dataset data;
  data.attribute_names = { "a1", "a2" };
  data.values.resize( 2, 2 );
  data.values << 0.8, 0.1, 0.5, 0.6;
  data.targets = { 1, 0 };

  const Eigen::VectorXd mt1 = to_minterms( data.values.row( 0 ).transpose() );
  const Eigen::VectorXd mt2 = to_minterms( data.values.row( 1 ).transpose() );
  const std::vector<double> want1 = { 0.18, 0.02, 0.72, 0.08 };
  const std::vector<double> want2 = { 0.2, 0.3, 0.2, 0.3 };
  for ( int k = 0; k < 4; ++k )
  {
    expect( std::abs( mt1[k] - want1[std::size_t( k )] ) <= 1e-12, "minterm of the first object off at " + std::to_string( k ) );
    expect( std::abs( mt2[k] - want2[std::size_t( k )] ) <= 1e-12, "minterm of the second object off at " + std::to_string( k ) );
  }

  const double s1 = forward( m, mt1 );
  const double s2 = forward( m, mt2 );
  expect( std::abs( s1 - 3.1 ) <= 1e-9, "first raw score is " + std::to_string( s1 ) );
  expect( std::abs( s2 - 1.1 ) <= 1e-9, "second raw score is " + std::to_string( s2 ) );
  expect( s1 > m.threshold && !( s2 > m.threshold ), "raw decisions are not (1, 0)" );

  const auto cells = enumerate_cells( m, data );
  expect( cells.size() == 1 && cells[0].number == 1, "objects do not share the single active cell" );

  const auto bt = build_bit_tensor( cells, 2, 2, m.threshold, std::ldexp( 1.0, -11 ) );
  const std::vector<int> want_codes = { 0, 3, 3, 2 };
  for ( int k = 0; k < 4; ++k )
    expect( bt.floors( 0, k ) == want_codes[std::size_t( k )],
            "integer code at minterm " + std::to_string( k ) + " is " + std::to_string( bt.floors( 0, k ) ) );
  expect( bt.tau_prime >= 2.33 && bt.tau_prime <= 2.37, "mapped threshold is " + std::to_string( bt.tau_prime ) );

  const double q1 = bit_tensor_score( bt, 1, mt1 );
  const double q2 = bit_tensor_score( bt, 1, mt2 );
  expect( std::abs( q1 - 2.38 ) <= 1e-9, "first quantized score is " + std::to_string( q1 ) );
  expect( std::abs( q2 - 2.1 ) <= 1e-9, "second quantized score is " + std::to_string( q2 ) );
  expect( q1 > bt.tau_prime && !( q2 > bt.tau_prime ), "quantization flips a decision" );

  const auto ex = exclusive_triconcepts( to_triadic_context( bt ), {} );
  expect( ex.size() == 2, "expected 2 exclusive concepts, got " + std::to_string( ex.size() ) );
  if ( ex.size() == 2 )
  {
    expect( ex[0].cells == make_set( 1, { 0 } ) && ex[0].minterms == make_set( 4, { 1, 2 } ) &&
                ex[0].levels == make_set( 2, { 0, 1 } ) && ex[0].power == 6,
            "first concept is not ({cell}, {1,2}, {0,1}) with power 6" );
    expect( ex[1].cells == make_set( 1, { 0 } ) && ex[1].minterms == make_set( 4, { 3 } ) &&
                ex[1].levels == make_set( 2, { 1 } ) && ex[1].power == 2,
            "second concept is not ({cell}, {3}, {1}) with power 2" );
  }

  const auto trees = trees_of( ex, bt );
  const auto ts1 = tree_score( data.values.row( 0 ).transpose(), 1, trees, bt.tau_prime );
  const auto ts2 = tree_score( data.values.row( 1 ).transpose(), 1, trees, bt.tau_prime );
  expect( ts1.covered && ts2.covered, "tree evaluation misses the cell" );
  expect( std::abs( ts1.score - q1 ) <= 1e-9, "first tree-weighted score is " + std::to_string( ts1.score ) );
  expect( std::abs( ts2.score - q2 ) <= 1e-9, "second tree-weighted score is " + std::to_string( ts2.score ) );
  expect( ts1.label == 1 && ts2.label == 0, "tree decisions are not (1, 0)" );

  expect( seconds_since( t0 ) < 1.0, "walkthrough exceeded 1 s" );
}

/* ------------------------------------------------------------------ */
/* 2. dyadic concepts of the three-concept context                     */
/* ------------------------------------------------------------------ */

void dyadic_golden()
{
  dyadic_context ctx;
  ctx.object_names = { "g1", "g2", "g3" };
  ctx.attribute_names = { "m1", "m2", "m3" };
  ctx.rows = { make_set( 3, { 2 } ), make_set( 3, { 0, 1, 2 } ), make_set( 3, { 1, 2 } ) };

  const auto concepts = concepts_from_singletons( ctx );
  std::set<std::pair<std::vector<int>, std::vector<int>>> got, want;
  for ( const auto& c : concepts )
    got.insert( { c.extent.to_vector(), c.intent.to_vector() } );
  want.insert( { { 1 }, { 0, 1, 2 } } );
  want.insert( { { 1, 2 }, { 1, 2 } } );
  want.insert( { { 0, 1, 2 }, { 2 } } );
  expect( concepts.size() == 3, "expected 3 concepts, got " + std::to_string( concepts.size() ) );
  expect( got == want, "concept sets differ from the golden lattice" );
}

/* ------------------------------------------------------------------ */
/* 3. weighted trees reproduce the quantized score                     */
/* ------------------------------------------------------------------ */

void score_equivalence()
{
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng( 301 );
  std::uniform_real_distribution<double> tau_dist( -2.0, 2.0 );
  int instances = 0;

  for ( int trial = 0; instances < 220 && trial < 2000; ++trial )
  {
    const int n = 1 + int( rng() % 4 );
    const int l = 1 + int( rng() % 3 );
    const int nb = 1 + int( rng() % 5 );
    const auto model = oracle::random_model( rng, n, l );
    const auto data = oracle::random_dataset( rng, n, 12 );
    const auto cells = enumerate_cells( model, data );
    bit_tensor bt;
    try
    {
      bt = build_bit_tensor( cells, n, nb, tau_dist( rng ) );
    }
    catch ( const std::invalid_argument& )
    {
      continue; /* all weights equal (e.g. only the zero cell observed): nothing to quantize */
    }
    const auto ctx = to_triadic_context( bt );
    if ( !ctx.any() )
      continue;

    std::vector<object_view> objects;
    for ( int i = 0; i < data.n_objects(); ++i )
    {
      object_view o;
      o.minterms = to_minterms( data.values.row( i ).transpose() );
      o.cell_row = bt.cell_row( relu_status( model, o.minterms ) ).value_or( -1 );
      o.target = data.targets[std::size_t( i )];
      objects.push_back( std::move( o ) );
    }

    selection_options opts;
    opts.method = static_cast<selection_method>( trial % 4 );
    opts.support_weighted = trial % 5 == 0;
    const auto ex = exclusive_triconcepts( ctx, opts, bt.supports, objects );
    const auto trees = trees_of( ex, bt );

    for ( int i = 0; i < data.n_objects(); ++i )
    {
      const Eigen::VectorXd x = data.values.row( i ).transpose();
      const auto& mt = objects[std::size_t( i )].minterms;
      const std::uint32_t p = relu_status( model, mt );
      const double qs = bit_tensor_score( bt, p, mt );
      const auto ts = tree_score( x, p, trees, bt.tau_prime );
      if ( ts.covered )
        expect( std::abs( ts.score - qs ) <= 1e-9,
                "trial " + std::to_string( trial ) + ": tree score off by " + std::to_string( ts.score - qs ) );
      else
        expect( qs == 0.0, "trial " + std::to_string( trial ) + ": uncovered object has non-zero tensor score" );
    }
    ++instances;
  }

  expect( instances >= 200, "only " + std::to_string( instances ) + " instances exercised" );
  expect( seconds_since( t0 ) < 30.0, "equivalence sweep exceeded 30 s" );
}

/* ------------------------------------------------------------------ */
/* 4. quantization reconstruction error bounds                         */
/* ------------------------------------------------------------------ */

void quantization_bounds()
{
  std::mt19937 rng( 401 );
  struct combo
  {
    double a, b;
    int nb;
  };
  for ( const combo co : { combo{ -8.0, 6.0, 2 }, combo{ 0.0, 1.0, 7 }, combo{ -3.7, 11.2, 5 } } )
  {
    quant_params qp;
    qp.a = co.a;
    qp.b = co.b;
    qp.n_bits = co.nb;
    qp.epsilon = std::ldexp( 1.0, -40 );

    const double hard = ( co.b - co.a ) / std::ldexp( 1.0, co.nb + 1 );
    const double ref_mean = ( co.b - co.a ) / std::ldexp( 1.0, co.nb + 2 );
    std::uniform_real_distribution<double> dist( co.a, co.b );

    const int n_samples = 100000;
    double max_err = 0.0, sum_err = 0.0;
    int violations = 0;
    for ( int i = 0; i < n_samples; ++i )
    {
      const double v = dist( rng );
      const double err = std::abs( reconstruct( quantize( v, qp ), qp ) - v );
      max_err = std::max( max_err, err );
      sum_err += err;
      if ( err > hard )
        ++violations;
    }
    const double mean_err = sum_err / n_samples;
    std::ostringstream tag;
    tag << "[" << co.a << ", " << co.b << "] at " << co.nb << " bits";
    expect( violations == 0, tag.str() + ": " + std::to_string( violations ) + " samples above the hard bound" );
    expect( max_err <= hard, tag.str() + ": max error " + std::to_string( max_err ) );
    expect( std::abs( mean_err - ref_mean ) <= 0.1 * ref_mean,
            tag.str() + ": mean error " + std::to_string( mean_err ) + " vs " + std::to_string( ref_mean ) );
  }
}

/* ------------------------------------------------------------------ */
/* 5. exclusive concepts partition the tensor                          */
/* ------------------------------------------------------------------ */

void exclusive_cover()
{
  std::mt19937 rng( 501 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    const int nc = 1 + int( rng() % 4 );
    const int n = 1 + int( rng() % 4 );
    const int nk = 1 << n;
    const int nl = 1 + int( rng() % 7 );
    const auto ctx = oracle::random_context( rng, nc, nk, nl );

    std::vector<std::int64_t> supports;
    for ( int c = 0; c < nc; ++c )
      supports.push_back( 1 + std::int64_t( rng() % 10 ) );
    std::vector<object_view> objects;
    std::bernoulli_distribution coin( 0.5 );
    for ( int i = 0; i < 8; ++i )
    {
      object_view o;
      o.cell_row = int( rng() % unsigned( nc ) );
      o.target = coin( rng ) ? 1 : 0;
      o.minterms = to_minterms( oracle::random_unit_vector( rng, n ) );
      objects.push_back( std::move( o ) );
    }

    selection_options opts;
    opts.method = static_cast<selection_method>( trial % 4 );
    opts.support_weighted = trial % 3 == 0;
    const auto ex = exclusive_triconcepts( ctx, opts, supports, objects );

    /* every set bit is covered exactly once, every clear bit never */
    for ( int c = 0; c < nc; ++c )
      for ( int k = 0; k < nk; ++k )
        for ( int l = 0; l < nl; ++l )
        {
          int covering = 0;
          for ( const auto& con : ex )
            if ( con.cells.test( c ) && con.minterms.test( k ) && con.levels.test( l ) )
              ++covering;
          expect( covering == ( ctx.test( c, k, l ) ? 1 : 0 ),
                  "trial " + std::to_string( trial ) + ": bit (" + std::to_string( c ) + "," + std::to_string( k ) +
                      "," + std::to_string( l ) + ") covered " + std::to_string( covering ) + " times" );
        }

    rational total;
    for ( const auto& con : ex )
      total = total + con.relpower;
    if ( ctx.any() )
      expect( total == rational( 1, 1 ), "trial " + std::to_string( trial ) + ": relative powers sum to " +
                                             std::to_string( total.num ) + "/" + std::to_string( total.den ) );
    else
      expect( ex.empty(), "concepts extracted from an empty context" );
  }
}

/* ------------------------------------------------------------------ */
/* 6. cell weights add up from atomic cells                            */
/* ------------------------------------------------------------------ */

void atomic_additivity()
{
  std::mt19937 rng( 601 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const int l = 1 + int( rng() % 6 );
    const int n = 1 + int( rng() % 3 );
    const auto m = oracle::random_model( rng, n, l );
    const auto atoms = atomic_weights( m );

    for ( std::uint32_t p = 0; p < ( std::uint32_t( 1 ) << l ); ++p )
    {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero( 1 << n );
      for ( int i = 1; i <= l; ++i )
        if ( ( p >> ( l - i ) ) & 1u )
          sum += atoms[std::size_t( i - 1 )];
      const double gap = ( cell_weights( m, p ) - sum ).lpNorm<Eigen::Infinity>();
      expect( gap <= 1e-9, "trial " + std::to_string( trial ) + ": cell " + std::to_string( p ) +
                               " deviates by " + std::to_string( gap ) );
    }
  }
}

/* ------------------------------------------------------------------ */
/* 7. trees are exact indicators of their minterm sets                 */
/* ------------------------------------------------------------------ */

void tree_exactness()
{
  std::mt19937 rng( 701 );

  const auto check_mask = [&]( std::uint64_t mask, int n ) {
    bitset ms( 1 << n );
    for ( int k = 0; k < ( 1 << n ); ++k )
      if ( ( mask >> k ) & 1u )
        ms.set( k );
    const auto tree = build_tree( ms, n );
    for ( int r = 0; r < 50; ++r )
    {
      const Eigen::VectorXd x = oracle::random_unit_vector( rng, n );
      double ref = 0.0;
      for ( int k = 0; k < ( 1 << n ); ++k )
        if ( ( mask >> k ) & 1u )
          ref += oracle::minterm_value( x, std::uint32_t( k ) );
      const double got = eval_tree( tree, x );
      expect( std::abs( got - ref ) <= 1e-12, "n=" + std::to_string( n ) + " mask=" + std::to_string( mask ) +
                                                  ": tree value off by " + std::to_string( got - ref ) );
    }
  };

  for ( int n = 1; n <= 3; ++n )
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t( 1 ) << ( 1 << n ) ); ++mask )
      check_mask( mask, n );

  for ( const int n : { 4, 5 } )
  {
    std::uniform_int_distribution<std::uint64_t> mask_dist( 0, ( std::uint64_t( 1 ) << ( 1 << n ) ) - 1 );
    for ( int t = 0; t < 500; ++t )
      check_mask( mask_dist( rng ), n );
  }
}

/* ------------------------------------------------------------------ */
/* 8. attribute relevance: efficiency, oracle agreement, fixture       */
/* ------------------------------------------------------------------ */

void shapley_checks()
{
  std::mt19937 rng( 801 );

  /* integer games distribute n! * (v(full) - v(empty)) exactly */
  std::uniform_int_distribution<std::int64_t> w_dist( -50, 50 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const int n = 1 + int( rng() % 5 );
    std::vector<std::int64_t> mwi( std::size_t( 1 ) << n );
    for ( auto& w : mwi )
      w = w_dist( rng );

    std::vector<std::int64_t> game( mwi.size() );
    for ( std::uint32_t s = 0; s < game.size(); ++s )
      game[s] = mwi[oracle::subset_to_minterm( s, n )];
    const auto nums = oracle::shapley_numerators( game, n );

    std::int64_t fact = 1;
    for ( int i = 2; i <= n; ++i )
      fact *= i;
    std::int64_t total = 0;
    for ( const auto v : nums )
      total += v;
    expect( total == fact * ( mwi.back() - mwi.front() ),
            "trial " + std::to_string( trial ) + ": exact efficiency violated" );

    Eigen::VectorXd mw( Eigen::Index( mwi.size() ) );
    for ( Eigen::Index k = 0; k < mw.size(); ++k )
      mw[k] = double( mwi[std::size_t( k )] );
    const auto sh = shapley_global( mw );
    for ( int j = 0; j < n; ++j )
      expect( std::abs( sh[j] - double( nums[std::size_t( j )] ) / double( fact ) ) <= 1e-9,
              "trial " + std::to_string( trial ) + ": value " + std::to_string( j ) + " disagrees" );
  }

  /* double games against the permutation oracle */
  std::uniform_real_distribution<double> d_dist( -10.0, 10.0 );
  for ( int trial = 0; trial < 20; ++trial )
  {
    const int n = 1 + int( rng() % 5 );
    Eigen::VectorXd mw( Eigen::Index( 1 ) << n );
    for ( Eigen::Index k = 0; k < mw.size(); ++k )
      mw[k] = d_dist( rng );

    std::vector<double> game( std::size_t( mw.size() ) );
    for ( std::uint32_t s = 0; s < game.size(); ++s )
      game[s] = mw[oracle::subset_to_minterm( s, n )];
    const auto ref = oracle::shapley_by_permutations( game, n );
    const auto sh = shapley_global( mw );
    for ( int j = 0; j < n; ++j )
      expect( std::abs( sh[j] - ref[std::size_t( j )] ) <= 1e-9,
              "trial " + std::to_string( trial ) + ": value " + std::to_string( j ) + " off the oracle" );
    expect( std::abs( sh.sum() - ( mw[mw.size() - 1] - mw[0] ) ) <= 1e-9,
            "trial " + std::to_string( trial ) + ": efficiency off" );
  }

  Eigen::VectorXd mw( 4 );
  mw << -8.0, 3.0, 6.0, 2.0;
  const auto sh = shapley_global( mw );
  expect( std::abs( sh[0] - 6.5 ) <= 1e-12 && std::abs( sh[1] - 3.5 ) <= 1e-12,
          "four-weight fixture is (" + std::to_string( sh[0] ) + ", " + std::to_string( sh[1] ) + ")" );
}

/* ------------------------------------------------------------------ */
/* 9. donation dataset, trained end to end                             */
/* ------------------------------------------------------------------ */

void end_to_end()
{
  const auto t0 = std::chrono::steady_clock::now();

  const auto data = balance_downsample( minmax_normalize( synthetic::donation_table( 99 ) ), 5 );
  const auto positives = std::count( data.targets.begin(), data.targets.end(), 1 );
  expect( data.n_objects() == 356 && positives == 178,
          "balanced table is " + std::to_string( data.n_objects() ) + " rows, " + std::to_string( positives ) +
              " positive" );

  double best_acc = 0.0;
  unsigned best_seed = 1;
  for ( unsigned seed = 1; seed <= 5; ++seed )
  {
    train_config tc;
    tc.relu_count = 5;
    tc.epochs = 300;
    tc.learning_rate = 0.5;
    tc.seed = seed;
    const auto r = train( data, tc );
    if ( r.accuracy > best_acc )
    {
      best_acc = r.accuracy;
      best_seed = seed;
    }
  }
  expect( best_acc >= 0.70, "best training accuracy over 5 seeds is " + std::to_string( best_acc ) );

  pipeline_config pc;
  pc.n_bits = 7;
  pc.training.relu_count = 5;
  pc.training.epochs = 300;
  pc.training.learning_rate = 0.5;
  pc.training.seed = best_seed;
  const auto result = run_pipeline( pc, data );
  expect( result.has_tensor && !result.concepts.empty(), "pipeline produced no concepts" );

  std::int64_t covered = 0, quant_hits = 0, tree_hits = 0;
  for ( int i = 0; i < data.n_objects(); ++i )
  {
    const Eigen::VectorXd x = data.values.row( i ).transpose();
    const auto mt = to_minterms( x );
    const std::uint32_t p = relu_status( result.model, mt );
    if ( !result.tensor.cell_row( p ) )
      continue;
    ++covered;
    const int want = data.targets[std::size_t( i )];
    const int quant_label = bit_tensor_score( result.tensor, p, mt ) > result.tensor.tau_prime ? 1 : 0;
    const auto ts = tree_score( x, p, result.trees, result.tensor.tau_prime );
    quant_hits += quant_label == want;
    tree_hits += ts.label == want;
  }
  expect( covered > 0, "no object lands in a quantized cell" );
  if ( covered > 0 )
  {
    const double quant_acc = double( quant_hits ) / double( covered );
    const double tree_acc = double( tree_hits ) / double( covered );
    expect( std::abs( quant_acc - tree_acc ) <= 0.01,
            "covered-object accuracies differ: quantized " + std::to_string( quant_acc ) + ", trees " +
                std::to_string( tree_acc ) );
  }

  expect( seconds_since( t0 ) < 120.0, "end-to-end run exceeded 2 min" );
}

/* ------------------------------------------------------------------ */
/* 10. minterm vectors sum to one                                      */
/* ------------------------------------------------------------------ */

void minterm_normalization()
{
  std::mt19937 rng( 1001 );
  for ( int i = 0; i < 10000; ++i )
  {
    const int n = 1 + int( rng() % 10 );
    const Eigen::VectorXd x = oracle::random_unit_vector( rng, n );
    const double sum = to_minterms( x ).sum();
    expect( std::abs( sum - 1.0 ) <= 1e-9, "sum " + std::to_string( sum ) + " at n=" + std::to_string( n ) );
  }
}

int failures = 0;

template<typename Fn>
void criterion( int id, const std::string& title, Fn&& body )
{
  fail_count = 0;
  notes.clear();
  const auto t0 = std::chrono::steady_clock::now();
  try
  {
    body();
  }
  catch ( const std::exception& e )
  {
    ++fail_count;
    notes.push_back( std::string( "exception: " ) + e.what() );
  }

  std::ostringstream line;
  line.setf( std::ios::fixed );
  line.precision( 2 );
  line << ( fail_count == 0 ? "[PASS] " : "[FAIL] " ) << id << ". " << title << "  (" << seconds_since( t0 )
       << " s)";
  std::cout << line.str() << "\n";
  for ( const auto& n : notes )
    std::cout << "       " << n << "\n";
  if ( std::size_t( fail_count ) > notes.size() )
    std::cout << "       ... and " << fail_count - int( notes.size() ) << " more\n";
  if ( fail_count != 0 )
    ++failures;
}

} // namespace

int main()
{
  criterion( 1, "single-cell golden example end to end", golden_walkthrough );
  criterion( 2, "dyadic concepts of the three-concept context", dyadic_golden );
  criterion( 3, "weighted trees reproduce the quantized score", score_equivalence );
  criterion( 4, "quantization reconstruction error bounds", quantization_bounds );
  criterion( 5, "exclusive concepts partition the tensor", exclusive_cover );
  criterion( 6, "cell weights add up from atomic cells", atomic_additivity );
  criterion( 7, "trees are exact minterm-sum indicators", tree_exactness );
  criterion( 8, "attribute relevance: efficiency, oracle, fixture", shapley_checks );
  criterion( 9, "donation dataset trained end to end", end_to_end );
  criterion( 10, "minterm vectors sum to one", minterm_normalization );

  if ( failures == 0 )
    std::cout << "all 10 criteria hold\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
