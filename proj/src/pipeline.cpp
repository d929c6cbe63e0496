#include "triad/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "triad/minterm.hpp"
#include "triad/shapley.hpp"
#include "triad/threshold.hpp"

namespace triad
{

namespace
{

using ordered_json = nlohmann::ordered_json;

std::string relu_code( std::uint32_t p, int l )
{
  std::string s( l, '0' );
  for ( int i = 0; i < l; ++i )
    if ( ( p >> ( l - 1 - i ) ) & 1u )
      s[i] = '1';
  return s;
}

std::string literal_name( int lit, const std::vector<std::string>& names )
{
  const int j = std::abs( lit );
  const std::string base = j <= static_cast<int>( names.size() ) ? names[j - 1] : "a" + std::to_string( j );
  return lit < 0 ? "!" + base : base;
}

/*! Hasse edges of the observed cells under "active node set contained
 * in active node set"; the partition number is that set's mask. */
std::vector<std::pair<std::uint32_t, std::uint32_t>> cell_order_edges( const std::vector<partition_cell>& cells )
{
  std::vector<std::uint32_t> ps;
  ps.reserve( cells.size() );
  for ( const auto& c : cells )
    ps.push_back( c.number );
  std::sort( ps.begin(), ps.end() );

  const auto subset = []( std::uint32_t a, std::uint32_t b ) { return a != b && ( a & b ) == a; };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for ( auto p : ps )
    for ( auto q : ps )
    {
      if ( !subset( p, q ) )
        continue;
      bool covering = true;
      for ( auto r : ps )
        if ( subset( p, r ) && subset( r, q ) )
        {
          covering = false;
          break;
        }
      if ( covering )
        edges.emplace_back( p, q );
    }
  return edges;
}

struct object_state
{
  Eigen::VectorXd mt;
  std::uint32_t p = 0;
  int cell_row = -1;
  int target = 0;
};

} // namespace

pipeline_result run_pipeline( const pipeline_config& cfg )
{
  if ( cfg.data_path.empty() )
    throw std::invalid_argument( "pipeline: no data path" );
  return run_pipeline( cfg, ingest( cfg.data_path, cfg.balance, cfg.seed ) );
}

pipeline_result run_pipeline( const pipeline_config& cfg, const labeled_dataset& data )
{
  validate( data );

  pipeline_result result;
  result.data = data;
  report& rep = result.rep;

  rep.n_objects = data.n_objects();
  rep.n_attributes = data.n_attributes();
  rep.attribute_names = data.attribute_names;
  for ( auto t : data.targets )
    rep.positives += t;

  /* model */
  if ( !cfg.model_path.empty() )
  {
    result.model = load_model_file( cfg.model_path );
    if ( result.model.n_atts != data.n_attributes() )
      throw std::invalid_argument( "pipeline: model was built for " + std::to_string( result.model.n_atts ) +
                                   " attributes, data has " + std::to_string( data.n_attributes() ) );
  }
  else
  {
    auto trained = train( data, cfg.training );
    result.model = std::move( trained.model );
    if ( !trained.converged )
      rep.warnings.push_back( "training: " + trained.note );
  }
  if ( cfg.threshold_override )
    result.model.threshold = *cfg.threshold_override;
  const double tau = result.model.threshold;
  rep.threshold = tau;
  rep.relu_count = result.model.relu_count();

  /* per-object state and raw network accuracy */
  const Eigen::MatrixXd below = below_product( result.model );
  const Eigen::MatrixXd above = above_product( result.model );
  std::vector<object_state> objects( data.n_objects() );
  {
    std::vector<double> scores( data.n_objects() );
    for ( int i = 0; i < data.n_objects(); ++i )
    {
      auto& o = objects[i];
      o.mt = to_minterms( data.values.row( i ).transpose() );
      o.target = data.targets[i];
      const Eigen::VectorXd z = below * o.mt;
      scores[i] = ( above * z.cwiseMax( 0.0 ) )( 0 );
      o.p = 0;
      const int l = static_cast<int>( z.size() );
      for ( int b = 0; b < l; ++b )
        if ( z[b] >= 0.0 )
          o.p |= std::uint32_t( 1 ) << ( l - 1 - b );
    }
    const auto counts = confusion_at( scores, data.targets, tau );
    rep.network_accuracy = counts.accuracy().value_or( 0.0 );
  }

  /* cells */
  result.cells = enumerate_cells( result.model, data );
  rep.cell_order = cell_order_edges( result.cells );
  rep.min_support_used = cfg.min_support >= 0 ? cfg.min_support : auto_min_support( result.cells );
  rep.require_mixed = cfg.require_mixed;

  auto essential = select_essential( result.cells, rep.min_support_used, cfg.require_mixed );
  if ( essential.empty() )
  {
    rep.warnings.push_back( "no cell meets the selection criteria (min support " +
                            std::to_string( rep.min_support_used ) + ")" );
    if ( cfg.fallback_all_cells )
    {
      rep.warnings.push_back( "falling back to all observed cells" );
      essential = select_essential( result.cells, 0, false );
    }
  }

  for ( const auto& c : result.cells )
  {
    cell_report cr;
    cr.number = c.number;
    cr.code = relu_code( c.number, rep.relu_count );
    cr.count0 = c.count0;
    cr.count1 = c.count1;
    cr.essential = std::any_of( essential.begin(), essential.end(),
                                [&]( const partition_cell& e ) { return e.number == c.number; } );
    if ( cr.essential )
    {
      const Eigen::VectorXd sh = shapley_global( c.weights );
      cr.shapley.assign( sh.data(), sh.data() + sh.size() );
    }
    rep.cells.push_back( std::move( cr ) );
  }

  if ( !essential.empty() )
  {
    result.tensor = build_bit_tensor( essential, data.n_attributes(), cfg.n_bits, tau, cfg.epsilon,
                                      cfg.quant_all_cells ? &result.cells : nullptr );
    result.has_tensor = true;
    rep.has_tensor = true;
    rep.params = result.tensor.params;
    rep.tau_prime = result.tensor.tau_prime;
    rep.power = tensor_power( result.tensor );

    for ( auto& o : objects )
      if ( auto row = result.tensor.cell_row( o.p ) )
        o.cell_row = *row;

    /* concepts */
    std::vector<object_view> views( objects.size() );
    for ( std::size_t i = 0; i < objects.size(); ++i )
      views[i] = { objects[i].cell_row, objects[i].target, objects[i].mt };

    const auto ctx = to_triadic_context( result.tensor );
    result.concepts = exclusive_triconcepts( ctx, cfg.selection, result.tensor.supports, views );

    for ( const auto& c : result.concepts )
    {
      concept_tree ct;
      ct.tree = build_tree( c.minterms, data.n_attributes() );
      ct.power_sum = c.power_sum();
      c.cells.for_each( [&]( int r ) { ct.cells.push_back( result.tensor.cells[r] ); } );
      result.trees.push_back( std::move( ct ) );
    }
  }
  rep.method = to_string( cfg.selection.method );
  rep.support_weighted = cfg.selection.support_weighted;

  /* outcome accuracies: quantized scores and tree scores agree, both
   * are reported; uncovered objects fall to class 0 */
  {
    std::int64_t quant_correct = 0, tree_correct = 0;
    for ( auto& o : objects )
    {
      int quant_label = 0;
      if ( o.cell_row >= 0 )
      {
        rep.covered_objects++;
        quant_label = bit_tensor_score( result.tensor, o.p, o.mt ) > rep.tau_prime ? 1 : 0;
      }
      quant_correct += quant_label == o.target;
    }
    for ( int i = 0; i < data.n_objects(); ++i )
    {
      const auto ts =
          tree_score( data.values.row( i ).transpose(), objects[i].p, result.trees, rep.tau_prime );
      tree_correct += ts.label == objects[i].target;
    }
    rep.quantized_accuracy = double( quant_correct ) / double( data.n_objects() );
    rep.concept_accuracy = double( tree_correct ) / double( data.n_objects() );
  }

  /* per-concept characteristics and leaf paths */
  for ( std::size_t ci = 0; ci < result.concepts.size(); ++ci )
  {
    const auto& c = result.concepts[ci];
    const auto& ct = result.trees[ci];
    concept_report cr;
    c.cells.for_each( [&]( int r ) { cr.cells.push_back( result.tensor.cells[r] ); } );
    cr.minterms = c.minterms.to_vector();
    cr.levels = c.levels.to_vector();
    cr.power = c.power;
    cr.relpower = c.relpower;
    cr.power_sum = c.power_sum();

    std::vector<double> scores;
    std::vector<int> targets;
    std::vector<eval_object> members;
    for ( int i = 0; i < data.n_objects(); ++i )
    {
      if ( objects[i].cell_row < 0 || !c.cells.test( objects[i].cell_row ) )
        continue;
      scores.push_back( double( cr.power_sum ) * eval_tree( ct.tree, data.values.row( i ).transpose() ) );
      targets.push_back( objects[i].target );
      members.push_back( { data.values.row( i ).transpose(), objects[i].target } );
    }
    cr.support = static_cast<std::int64_t>( members.size() );
    if ( !members.empty() )
    {
      cr.threshold = best_threshold( scores, targets ).threshold;
      const auto counts = confusion_at( scores, targets, cr.threshold );
      cr.precision = counts.precision();
      cr.recall = counts.recall();
      cr.accuracy = counts.accuracy();
    }
    for ( const auto& path : leaf_paths( ct.tree ) )
    {
      if ( path.leaf_value != 1 )
        continue;
      const auto stats = path_metrics( path, data.n_attributes(), members );
      path_report pr;
      pr.literals = path.literals;
      pr.minterm_count = stats.minterm_count;
      pr.threshold = stats.threshold;
      pr.precision = stats.precision;
      pr.recall = stats.recall;
      pr.accuracy = stats.accuracy;
      pr.avg0 = stats.avg0;
      pr.avg1 = stats.avg1;
      cr.paths.push_back( std::move( pr ) );
    }
    rep.concepts.push_back( std::move( cr ) );
  }

  rep.concept_implication_edges = concept_implications( result.concepts );

  /* leaf-path implications across the two strongest concepts */
  if ( result.trees.size() >= 2 )
  {
    std::vector<leaf_path> combined;
    std::vector<std::pair<int, int>> origin; /* (concept, path index) */
    for ( int ci = 0; ci < 2; ++ci )
    {
      int pi = 0;
      for ( const auto& path : leaf_paths( result.trees[ci].tree ) )
      {
        if ( path.leaf_value != 1 )
          continue;
        combined.push_back( path );
        origin.emplace_back( ci, pi++ );
      }
    }
    for ( const auto& [i, j] : path_implications( combined ) )
      rep.path_implication_edges.push_back(
          { origin[i].first, origin[i].second, origin[j].first, origin[j].second } );
  }

  /* artifacts */
  if ( !cfg.output_dir.empty() )
  {
    namespace fs = std::filesystem;
    const fs::path dir( cfg.output_dir );
    fs::create_directories( dir );

    rep.model_path = ( dir / "model.txt" ).string();
    save_model_file( rep.model_path, result.model );

    if ( cfg.export_dot )
      for ( std::size_t ci = 0; ci < result.trees.size(); ++ci )
      {
        std::ofstream out( dir / ( "concept_" + std::to_string( ci ) + ".dot" ) );
        out << to_dot( result.trees[ci].tree, data.attribute_names, "concept_" + std::to_string( ci ) );
      }

    if ( cfg.export_cxt && result.has_tensor )
    {
      const auto ctx = to_triadic_context( result.tensor );
      for ( int c = 0; c < ctx.n_cells; ++c )
      {
        dyadic_context slice;
        for ( int k = 0; k < ctx.n_minterms; ++k )
        {
          bitset row( ctx.n_levels );
          for ( int l = 0; l < ctx.n_levels; ++l )
            if ( ctx.test( c, k, l ) )
              row.set( l );
          slice.rows.push_back( std::move( row ) );
          slice.object_names.push_back( "mt" + std::to_string( k ) );
        }
        for ( int l = 0; l < ctx.n_levels; ++l )
          slice.attribute_names.push_back( "bit" + std::to_string( l ) );
        std::ofstream out( dir / ( "slice_" + std::to_string( ctx.cell_numbers[c] ) + ".cxt" ) );
        write_cxt( out, slice );
      }
    }

    std::ofstream json_out( dir / "report.json" );
    json_out << report_to_json( rep );
    std::ofstream text_out( dir / "report.txt" );
    text_out << report_to_text( rep );
  }

  return result;
}

namespace
{

ordered_json opt_json( const std::optional<double>& v )
{
  if ( v )
    return *v;
  return nullptr;
}

} // namespace

std::string report_to_json( const report& rep )
{
  ordered_json j;
  j["schema"] = "triad-report/1";
  j["dataset"] = { { "objects", rep.n_objects },
                   { "positives", rep.positives },
                   { "attributes", rep.attribute_names } };
  j["model"] = { { "path", rep.model_path },
                 { "relu_count", rep.relu_count },
                 { "threshold", rep.threshold },
                 { "accuracy", rep.network_accuracy } };

  j["cells"] = ordered_json::array();
  for ( const auto& c : rep.cells )
  {
    ordered_json jc = { { "p", c.number },
                        { "code", c.code },
                        { "count0", c.count0 },
                        { "count1", c.count1 },
                        { "essential", c.essential } };
    jc["shapley"] = c.essential ? ordered_json( c.shapley ) : ordered_json( nullptr );
    j["cells"].push_back( std::move( jc ) );
  }
  j["cell_order"] = ordered_json::array();
  for ( const auto& [p, q] : rep.cell_order )
    j["cell_order"].push_back( { p, q } );

  j["selection"] = { { "min_support", rep.min_support_used },
                     { "require_mixed", rep.require_mixed },
                     { "method", rep.method },
                     { "support_weighted", rep.support_weighted } };

  if ( rep.has_tensor )
    j["quantization"] = { { "a", rep.params.a },
                          { "b", rep.params.b },
                          { "n_bits", rep.params.n_bits },
                          { "epsilon", rep.params.epsilon },
                          { "tau_prime", rep.tau_prime },
                          { "power", rep.power } };
  else
    j["quantization"] = nullptr;

  j["concepts"] = ordered_json::array();
  for ( const auto& c : rep.concepts )
  {
    ordered_json jc;
    jc["cells"] = c.cells;
    jc["minterms"] = c.minterms;
    jc["levels"] = c.levels;
    jc["power"] = c.power;
    jc["relpower"] = { c.relpower.num, c.relpower.den };
    jc["power_sum"] = c.power_sum;
    jc["support"] = c.support;
    jc["threshold"] = c.threshold;
    jc["precision"] = opt_json( c.precision );
    jc["recall"] = opt_json( c.recall );
    jc["accuracy"] = opt_json( c.accuracy );
    jc["paths"] = ordered_json::array();
    for ( const auto& p : c.paths )
    {
      ordered_json jp;
      jp["literals"] = p.literals;
      jp["minterms"] = p.minterm_count;
      jp["threshold"] = p.threshold;
      jp["precision"] = opt_json( p.precision );
      jp["recall"] = opt_json( p.recall );
      jp["accuracy"] = opt_json( p.accuracy );
      jp["avg0"] = opt_json( p.avg0 );
      jp["avg1"] = opt_json( p.avg1 );
      jc["paths"].push_back( std::move( jp ) );
    }
    j["concepts"].push_back( std::move( jc ) );
  }

  j["concept_implications"] = ordered_json::array();
  for ( const auto& [a, b] : rep.concept_implication_edges )
    j["concept_implications"].push_back( { a, b } );
  j["path_implications"] = ordered_json::array();
  for ( const auto& e : rep.path_implication_edges )
    j["path_implications"].push_back( { e[0], e[1], e[2], e[3] } );

  j["coverage"] = { { "covered", rep.covered_objects }, { "objects", rep.n_objects } };
  j["accuracy"] = { { "network", rep.network_accuracy },
                    { "quantized", rep.quantized_accuracy },
                    { "concepts", rep.concept_accuracy } };
  j["warnings"] = rep.warnings;

  return j.dump( 2 ) + "\n";
}

report report_from_json( const std::string& text )
{
  const auto j = ordered_json::parse( text );
  if ( j.value( "schema", "" ) != "triad-report/1" )
    throw std::invalid_argument( "report: unknown schema" );

  report rep;
  rep.n_objects = j["dataset"]["objects"].get<int>();
  rep.positives = j["dataset"]["positives"].get<std::int64_t>();
  rep.attribute_names = j["dataset"]["attributes"].get<std::vector<std::string>>();
  rep.n_attributes = static_cast<int>( rep.attribute_names.size() );

  rep.model_path = j["model"]["path"].get<std::string>();
  rep.relu_count = j["model"]["relu_count"].get<int>();
  rep.threshold = j["model"]["threshold"].get<double>();
  rep.network_accuracy = j["model"]["accuracy"].get<double>();

  if ( !j["quantization"].is_null() )
  {
    rep.has_tensor = true;
    rep.params.a = j["quantization"]["a"].get<double>();
    rep.params.b = j["quantization"]["b"].get<double>();
    rep.params.n_bits = j["quantization"]["n_bits"].get<int>();
    rep.params.epsilon = j["quantization"]["epsilon"].get<double>();
    rep.tau_prime = j["quantization"]["tau_prime"].get<double>();
    rep.power = j["quantization"]["power"].get<std::int64_t>();
  }

  rep.method = j["selection"]["method"].get<std::string>();
  rep.support_weighted = j["selection"]["support_weighted"].get<bool>();
  rep.min_support_used = j["selection"]["min_support"].get<std::int64_t>();
  rep.require_mixed = j["selection"]["require_mixed"].get<bool>();

  for ( const auto& jc : j["concepts"] )
  {
    concept_report c;
    c.cells = jc["cells"].get<std::vector<std::uint32_t>>();
    c.minterms = jc["minterms"].get<std::vector<int>>();
    c.levels = jc["levels"].get<std::vector<int>>();
    c.power = jc["power"].get<std::int64_t>();
    c.relpower = rational( jc["relpower"][0].get<std::int64_t>(), jc["relpower"][1].get<std::int64_t>() );
    c.power_sum = jc["power_sum"].get<std::int64_t>();
    c.support = jc["support"].get<std::int64_t>();
    rep.concepts.push_back( std::move( c ) );
  }
  return rep;
}

report load_report_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open '" + path + "'" );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return report_from_json( buffer.str() );
}

std::vector<concept_tree> trees_of_report( const report& rep )
{
  if ( rep.n_attributes < 1 )
    throw std::invalid_argument( "report: no attributes" );
  std::vector<concept_tree> trees;
  for ( const auto& c : rep.concepts )
  {
    bitset minterms( 1 << rep.n_attributes );
    for ( auto k : c.minterms )
      minterms.set( k );
    concept_tree ct;
    ct.tree = build_tree( minterms, rep.n_attributes );
    ct.power_sum = c.power_sum;
    ct.cells = c.cells;
    trees.push_back( std::move( ct ) );
  }
  return trees;
}

namespace
{

std::string fmt( double v )
{
  std::ostringstream os;
  os << std::fixed << std::setprecision( 4 ) << v;
  return os.str();
}

std::string fmt_opt( const std::optional<double>& v )
{
  return v ? fmt( *v ) : std::string( "-" );
}

std::string join_u32( const std::vector<std::uint32_t>& xs )
{
  std::string s;
  for ( std::size_t i = 0; i < xs.size(); ++i )
    s += ( i ? "," : "" ) + std::to_string( xs[i] );
  return s.empty() ? "-" : s;
}

std::string join_int( const std::vector<int>& xs )
{
  std::string s;
  for ( std::size_t i = 0; i < xs.size(); ++i )
    s += ( i ? "," : "" ) + std::to_string( xs[i] );
  return s.empty() ? "-" : s;
}

} // namespace

std::string report_to_text( const report& rep )
{
  std::ostringstream out;
  out << "objects: " << rep.n_objects << " (" << rep.positives << " positive)\n";
  out << "attributes:";
  for ( const auto& a : rep.attribute_names )
    out << ' ' << a;
  out << "\n";
  out << "network: " << rep.relu_count << " ReLU nodes, threshold " << rep.threshold
      << ", training accuracy " << fmt( rep.network_accuracy ) << "\n\n";

  out << "partition cells (min support " << rep.min_support_used << "):\n";
  out << "  p     code        #0    #1    essential\n";
  for ( const auto& c : rep.cells )
    out << "  " << std::left << std::setw( 6 ) << c.number << std::setw( 12 ) << c.code << std::setw( 6 )
        << c.count0 << std::setw( 6 ) << c.count1 << ( c.essential ? "yes" : "no" ) << "\n";
  out << "cell order (subset -> superset):";
  if ( rep.cell_order.empty() )
    out << " none";
  for ( const auto& [p, q] : rep.cell_order )
    out << ' ' << p << "->" << q;
  out << "\n\n";

  out << "attribute relevance (Shapley, essential cells):\n";
  for ( const auto& c : rep.cells )
  {
    if ( !c.essential )
      continue;
    out << "  cell " << c.number << ":";
    for ( std::size_t a = 0; a < c.shapley.size(); ++a )
      out << ' ' << rep.attribute_names[a] << '=' << fmt( c.shapley[a] );
    out << "\n";
  }
  out << "\n";

  if ( rep.has_tensor )
  {
    out << "quantization: [" << rep.params.a << ", " << rep.params.b << "] -> " << rep.params.n_bits
        << " bits, epsilon " << rep.params.epsilon << ", tau' " << rep.tau_prime << ", total power "
        << rep.power << "\n";
  }
  else
    out << "quantization: skipped (no cells selected)\n";
  out << "selection method " << rep.method << ( rep.support_weighted ? " (support weighted)" : "" ) << "\n\n";

  out << "exclusive concepts:\n";
  for ( std::size_t i = 0; i < rep.concepts.size(); ++i )
  {
    const auto& c = rep.concepts[i];
    out << "  c" << i << ": cells {" << join_u32( c.cells ) << "} minterms {" << join_int( c.minterms )
        << "} levels {" << join_int( c.levels ) << "}\n";
    out << "      power " << c.power << " (relative " << c.relpower.num << "/" << c.relpower.den
        << "), level energy " << c.power_sum << ", support " << c.support << "\n";
    out << "      precision " << fmt_opt( c.precision ) << "  recall " << fmt_opt( c.recall )
        << "  accuracy " << fmt_opt( c.accuracy ) << "\n";
    for ( const auto& p : c.paths )
    {
      out << "      path";
      for ( int lit : p.literals )
        out << ' ' << literal_name( lit, rep.attribute_names );
      out << "  (#mt " << p.minterm_count << ", precision " << fmt_opt( p.precision ) << ", recall "
          << fmt_opt( p.recall ) << ", accuracy " << fmt_opt( p.accuracy ) << ", avg0 " << fmt_opt( p.avg0 )
          << ", avg1 " << fmt_opt( p.avg1 ) << ")\n";
    }
  }
  out << "concept implications:";
  if ( rep.concept_implication_edges.empty() )
    out << " none";
  for ( const auto& [a, b] : rep.concept_implication_edges )
    out << " c" << a << "->c" << b;
  out << "\n";
  out << "path implications (top two concepts):";
  if ( rep.path_implication_edges.empty() )
    out << " none";
  for ( const auto& e : rep.path_implication_edges )
    out << " c" << e[0] << ".p" << e[1] << "->c" << e[2] << ".p" << e[3];
  out << "\n\n";

  out << "coverage: " << rep.covered_objects << "/" << rep.n_objects << " objects in selected cells\n";
  out << "accuracy: network " << fmt( rep.network_accuracy ) << ", quantized " << fmt( rep.quantized_accuracy )
      << ", concept trees " << fmt( rep.concept_accuracy ) << "\n";
  for ( const auto& w : rep.warnings )
    out << "warning: " << w << "\n";
  return out.str();
}

std::string explain_object( const report& rep, const simple_ann_model& model,
                            const Eigen::Ref<const Eigen::VectorXd>& x )
{
  if ( x.size() != rep.n_attributes )
    throw std::invalid_argument( "explain: object has " + std::to_string( x.size() ) + " attributes, report has " +
                                 std::to_string( rep.n_attributes ) );
  if ( !rep.has_tensor )
    throw std::invalid_argument( "explain: report carries no quantization, nothing to explain" );

  const Eigen::VectorXd mt = to_minterms( x );
  const std::uint32_t p = relu_status( model, mt );
  const auto trees = trees_of_report( rep );
  const auto ts = tree_score( x, p, trees, rep.tau_prime );

  std::ostringstream out;
  out << std::setprecision( 6 );
  out << "object:";
  for ( int j = 0; j < rep.n_attributes; ++j )
    out << ' ' << rep.attribute_names[j] << '=' << x[j];
  out << "\n";
  out << "partition cell: " << p << " (" << relu_code( p, rep.relu_count ) << ")\n";
  if ( !ts.covered )
  {
    out << "cell not covered by the extracted concepts; class 0 by fallback\n";
    return out.str();
  }

  for ( std::size_t i = 0; i < trees.size(); ++i )
  {
    const auto& ct = trees[i];
    if ( std::find( ct.cells.begin(), ct.cells.end(), p ) == ct.cells.end() )
      continue;
    out << "concept c" << i << " (level energy " << ct.power_sum << "): tree value "
        << eval_tree( ct.tree, x ) << ", contribution " << ts.contributions[i] << "\n";
    for ( const auto& path : leaf_paths( ct.tree ) )
    {
      if ( path.leaf_value != 1 )
        continue;
      out << "  path";
      for ( int lit : path.literals )
        out << ' ' << literal_name( lit, rep.attribute_names );
      out << " = " << eval_path( path, x ) << "  (weighted " << double( ct.power_sum ) * eval_path( path, x )
          << ")\n";
    }
  }
  out << "score " << ts.score << " vs tau' " << rep.tau_prime << " -> class " << ts.label << "\n";
  return out.str();
}

} // namespace triad
