#include "triad/logic_tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "triad/minterm.hpp"
#include "triad/threshold.hpp"

namespace triad
{

namespace
{

double plogp( std::int64_t c )
{
  return c > 0 ? double( c ) * std::log2( double( c ) ) : 0.0;
}

/*! Split cost: total conditional entropy times subcube size, written so
 * equal count multisets give bit-identical values. */
double split_cost( std::int64_t pos_lo, std::int64_t n_lo, std::int64_t pos_hi, std::int64_t n_hi )
{
  return ( plogp( n_lo ) - plogp( pos_lo ) - plogp( n_lo - pos_lo ) ) +
         ( plogp( n_hi ) - plogp( pos_hi ) - plogp( n_hi - pos_hi ) );
}

struct builder
{
  const bitset& ones;
  int n_atts;
  logic_tree tree;

  int grow( const std::vector<std::uint32_t>& cube, std::uint32_t used_mask )
  {
    std::int64_t pos = 0;
    for ( auto k : cube )
      pos += ones.test( static_cast<int>( k ) );

    const int id = static_cast<int>( tree.nodes.size() );
    tree.nodes.emplace_back();
    if ( pos == 0 || pos == static_cast<std::int64_t>( cube.size() ) )
    {
      tree.nodes[id].value = pos ? 1 : 0;
      return id;
    }

    /* pick the attribute with minimal conditional entropy; ties fall to
     * the lowest index (attribute j reads bit n_atts - j of the index) */
    int best_attr = 0;
    double best_cost = 0.0;
    for ( int j = 1; j <= n_atts; ++j )
    {
      if ( ( used_mask >> ( j - 1 ) ) & 1u )
        continue;
      const std::uint32_t bit = std::uint32_t( 1 ) << ( n_atts - j );
      std::int64_t n_hi = 0, pos_hi = 0;
      for ( auto k : cube )
      {
        if ( k & bit )
        {
          ++n_hi;
          pos_hi += ones.test( static_cast<int>( k ) );
        }
      }
      const std::int64_t n_lo = static_cast<std::int64_t>( cube.size() ) - n_hi;
      const std::int64_t pos_lo = pos - pos_hi;
      const double cost = split_cost( pos_lo, n_lo, pos_hi, n_hi );
      if ( best_attr == 0 || cost < best_cost - 1e-12 * std::max( 1.0, std::abs( best_cost ) ) )
      {
        best_attr = j;
        best_cost = cost;
      }
    }

    const std::uint32_t bit = std::uint32_t( 1 ) << ( n_atts - best_attr );
    std::vector<std::uint32_t> lo, hi;
    lo.reserve( cube.size() / 2 );
    hi.reserve( cube.size() / 2 );
    for ( auto k : cube )
      ( ( k & bit ) ? hi : lo ).push_back( k );

    tree.nodes[id].attribute = best_attr;
    const int lo_id = grow( lo, used_mask | ( 1u << ( best_attr - 1 ) ) );
    const int hi_id = grow( hi, used_mask | ( 1u << ( best_attr - 1 ) ) );
    tree.nodes[id].lo = lo_id;
    tree.nodes[id].hi = hi_id;
    return id;
  }
};

} // namespace

logic_tree build_tree( const bitset& minterms, int n_atts )
{
  if ( n_atts < 1 || n_atts > max_attributes )
    throw std::invalid_argument( "build_tree: attribute count out of range" );
  if ( minterms.size() != ( 1 << n_atts ) )
    throw std::invalid_argument( "build_tree: minterm set must have size 2^n_atts" );

  std::vector<std::uint32_t> cube( std::size_t( 1 ) << n_atts );
  for ( std::size_t k = 0; k < cube.size(); ++k )
    cube[k] = static_cast<std::uint32_t>( k );

  builder b{ minterms, n_atts, {} };
  b.tree.n_atts = n_atts;
  b.grow( cube, 0 );
  return b.tree;
}

namespace
{

double eval_node( const logic_tree& tree, int id, const Eigen::Ref<const Eigen::VectorXd>& x )
{
  const auto& nd = tree.nodes[id];
  if ( nd.is_leaf() )
    return nd.value;
  const double xj = x[nd.attribute - 1];
  return ( 1.0 - xj ) * eval_node( tree, nd.lo, x ) + xj * eval_node( tree, nd.hi, x );
}

} // namespace

double eval_tree( const logic_tree& tree, const Eigen::Ref<const Eigen::VectorXd>& x )
{
  if ( tree.empty() )
    throw std::invalid_argument( "eval_tree: empty tree" );
  if ( x.size() != tree.n_atts )
    throw std::invalid_argument( "eval_tree: attribute vector width mismatch" );
  return eval_node( tree, 0, x );
}

namespace
{

void collect_paths( const logic_tree& tree, int id, std::vector<int>& literals, std::vector<leaf_path>& out )
{
  const auto& nd = tree.nodes[id];
  if ( nd.is_leaf() )
  {
    out.push_back( { literals, nd.value } );
    return;
  }
  literals.push_back( -nd.attribute );
  collect_paths( tree, nd.lo, literals, out );
  literals.back() = nd.attribute;
  collect_paths( tree, nd.hi, literals, out );
  literals.pop_back();
}

} // namespace

std::vector<leaf_path> leaf_paths( const logic_tree& tree )
{
  std::vector<leaf_path> out;
  if ( tree.empty() )
    return out;
  std::vector<int> literals;
  collect_paths( tree, 0, literals, out );
  return out;
}

double eval_path( const leaf_path& path, const Eigen::Ref<const Eigen::VectorXd>& x )
{
  double v = 1.0;
  for ( int lit : path.literals )
  {
    const double xj = x[std::abs( lit ) - 1];
    v *= lit > 0 ? xj : 1.0 - xj;
  }
  return v;
}

path_stats path_metrics( const leaf_path& path, int n_atts, const std::vector<eval_object>& objects )
{
  if ( static_cast<int>( path.literals.size() ) > n_atts )
    throw std::invalid_argument( "path_metrics: more literals than attributes" );

  path_stats stats;
  stats.minterm_count = std::int64_t( 1 ) << ( n_atts - static_cast<int>( path.literals.size() ) );

  std::vector<double> values( objects.size() );
  std::vector<int> targets( objects.size() );
  double sum0 = 0.0, sum1 = 0.0;
  std::int64_t n0 = 0, n1 = 0;
  for ( std::size_t i = 0; i < objects.size(); ++i )
  {
    values[i] = eval_path( path, objects[i].x );
    targets[i] = objects[i].target;
    if ( objects[i].target )
    {
      sum1 += values[i];
      ++n1;
    }
    else
    {
      sum0 += values[i];
      ++n0;
    }
  }
  if ( n0 )
    stats.avg0 = sum0 / double( n0 );
  if ( n1 )
    stats.avg1 = sum1 / double( n1 );

  if ( !objects.empty() )
  {
    stats.threshold = best_threshold( values, targets ).threshold;
    const auto counts = confusion_at( values, targets, stats.threshold );
    stats.precision = counts.precision();
    stats.recall = counts.recall();
    stats.accuracy = counts.accuracy();
  }
  return stats;
}

std::vector<std::pair<int, int>> path_implications( const std::vector<leaf_path>& paths )
{
  std::vector<std::vector<int>> lits( paths.size() );
  for ( std::size_t i = 0; i < paths.size(); ++i )
  {
    lits[i] = paths[i].literals;
    std::sort( lits[i].begin(), lits[i].end() );
  }

  std::vector<std::pair<int, int>> edges;
  for ( std::size_t i = 0; i < paths.size(); ++i )
    for ( std::size_t j = 0; j < paths.size(); ++j )
    {
      if ( i == j )
        continue;
      if ( std::includes( lits[i].begin(), lits[i].end(), lits[j].begin(), lits[j].end() ) )
        edges.emplace_back( static_cast<int>( i ), static_cast<int>( j ) );
    }
  return edges;
}

tree_score_result tree_score( const Eigen::Ref<const Eigen::VectorXd>& x, std::uint32_t p,
                              const std::vector<concept_tree>& trees, double tau_prime )
{
  tree_score_result result;
  result.contributions.resize( trees.size(), 0.0 );
  for ( std::size_t i = 0; i < trees.size(); ++i )
  {
    const auto& ct = trees[i];
    if ( std::find( ct.cells.begin(), ct.cells.end(), p ) == ct.cells.end() )
      continue;
    result.covered = true;
    result.contributions[i] = double( ct.power_sum ) * eval_tree( ct.tree, x );
    result.score += result.contributions[i];
  }
  result.label = result.covered && result.score > tau_prime ? 1 : 0;
  return result;
}

namespace
{

/*! marks nodes whose subtree reaches a 1-leaf */
void mark_live( const logic_tree& tree, int id, std::vector<char>& live )
{
  const auto& nd = tree.nodes[id];
  if ( nd.is_leaf() )
  {
    live[id] = nd.value == 1;
    return;
  }
  mark_live( tree, nd.lo, live );
  mark_live( tree, nd.hi, live );
  live[id] = live[nd.lo] || live[nd.hi];
}

} // namespace

std::string to_dot( const logic_tree& tree, const std::vector<std::string>& attribute_names,
                    const std::string& graph_name )
{
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  if ( !tree.empty() )
  {
    std::vector<char> live( tree.nodes.size(), 0 );
    mark_live( tree, 0, live );
    for ( std::size_t id = 0; id < tree.nodes.size(); ++id )
    {
      if ( !live[id] )
        continue;
      const auto& nd = tree.nodes[id];
      if ( nd.is_leaf() )
      {
        out << "  n" << id << " [label=\"1\", shape=box];\n";
        continue;
      }
      const int j = nd.attribute;
      const std::string label =
          j <= static_cast<int>( attribute_names.size() ) ? attribute_names[j - 1] : "a" + std::to_string( j );
      out << "  n" << id << " [label=\"" << label << "\", shape=ellipse];\n";
      if ( live[nd.hi] )
        out << "  n" << id << " -> n" << nd.hi << " [style=solid];\n";
      if ( live[nd.lo] )
        out << "  n" << id << " -> n" << nd.lo << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

} // namespace triad
