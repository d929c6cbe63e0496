#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "triad/dataset.hpp"
#include "triad/model_io.hpp"
#include "triad/pipeline.hpp"

namespace
{

Eigen::VectorXd parse_values( const std::string& csv )
{
  std::vector<double> vals;
  std::stringstream ss( csv );
  std::string field;
  while ( std::getline( ss, field, ',' ) )
  {
    try
    {
      vals.push_back( std::stod( field ) );
    }
    catch ( const std::exception& )
    {
      throw std::invalid_argument( "cannot parse attribute value '" + field + "'" );
    }
  }
  if ( vals.empty() )
    throw std::invalid_argument( "no attribute values given" );
  Eigen::VectorXd x( vals.size() );
  for ( std::size_t i = 0; i < vals.size(); ++i )
    x[static_cast<Eigen::Index>( i )] = vals[i];
  return x;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "decomposes trained simple ReLU networks over minterm inputs into weighted logic trees" };
  app.require_subcommand( 1 );
  app.set_config( "--config", "", "read options from a config file (flags take precedence)" );
  app.get_config_formatter_base()->section( "triad" );

  /* ingest */
  auto* ingest_cmd = app.add_subcommand( "ingest", "normalize (and optionally balance) a CSV dataset" );
  std::string in_path, out_path;
  bool balance = false;
  unsigned seed = 1;
  ingest_cmd->add_option( "--data", in_path, "input CSV (header row, last column the binary target)" )->required();
  ingest_cmd->add_option( "--out", out_path, "output CSV" )->required();
  ingest_cmd->add_flag( "--balance", balance, "downsample the majority class" );
  ingest_cmd->add_option( "--seed", seed, "random seed for balancing" );

  /* train */
  auto* train_cmd = app.add_subcommand( "train", "train a network on a dataset" );
  std::string model_out;
  triad::train_config tc;
  train_cmd->add_option( "--data", in_path, "training CSV" )->required();
  train_cmd->add_option( "--model-out", model_out, "where to write the model" )->required();
  train_cmd->add_option( "--relu-count", tc.relu_count, "ReLU layer width" );
  train_cmd->add_option( "--epochs", tc.epochs, "gradient descent epochs" );
  train_cmd->add_option( "--learning-rate", tc.learning_rate, "gradient descent step size" );
  train_cmd->add_option( "--seed", tc.seed, "init/balancing seed" );
  train_cmd->add_flag( "--balance", balance, "downsample the majority class first" );

  /* interpret */
  auto* interpret_cmd = app.add_subcommand( "interpret", "run the full interpretation pipeline from a model" );
  triad::pipeline_config pc;
  std::string method = "M1";
  double epsilon = -1.0, threshold = 0.0;
  bool no_dot = false, have_threshold = false;
  interpret_cmd->add_option( "--data", pc.data_path, "training CSV" )->required();
  interpret_cmd->add_option( "--model", pc.model_path, "model file" )->required();
  interpret_cmd->add_option( "--out-dir", pc.output_dir, "artifact directory" )->required();
  interpret_cmd->add_flag( "--balance", pc.balance, "downsample the majority class" );
  interpret_cmd->add_option( "--seed", pc.seed, "balancing seed" );
  interpret_cmd->add_option( "--n-bits", pc.n_bits, "quantization depth" );
  interpret_cmd->add_option( "--epsilon", epsilon, "quantization epsilon (default 2^-(n_bits+4))" );
  interpret_cmd->add_option( "--threshold", threshold, "override the model's decision threshold" )
      ->each( [&]( const std::string& ) { have_threshold = true; } );
  interpret_cmd->add_option( "--min-support", pc.min_support, "cell selection support (default: cover 80%)" );
  interpret_cmd->add_flag( "--require-mixed", pc.require_mixed, "select only cells with both classes" );
  interpret_cmd->add_flag( "--quant-all-cells", pc.quant_all_cells, "fit the value range on all observed cells" );
  interpret_cmd->add_option( "--method", method, "concept selection method M1..M4" );
  interpret_cmd->add_flag( "--support-weighted", pc.selection.support_weighted,
                           "weight concept energy by cell support" );
  interpret_cmd->add_flag( "--fallback-all-cells", pc.fallback_all_cells,
                           "use all observed cells when none meets the criteria" );
  interpret_cmd->add_flag( "--export-cxt", pc.export_cxt, "write Burmeister contexts of the tensor slices" );
  interpret_cmd->add_flag( "--no-dot", no_dot, "skip Graphviz tree files" );

  /* explain */
  auto* explain_cmd = app.add_subcommand( "explain", "explain the classification of one object" );
  std::string report_path, model_path, values;
  explain_cmd->add_option( "--report", report_path, "report.json of an interpret run" )->required();
  explain_cmd->add_option( "--model", model_path, "model file (default: the one recorded in the report)" );
  explain_cmd->add_option( "--values", values, "comma-separated attribute values in [0,1]" )->required();

  /* export-dot */
  auto* dot_cmd = app.add_subcommand( "export-dot", "re-emit Graphviz trees from a report" );
  dot_cmd->add_option( "--report", report_path, "report.json of an interpret run" )->required();
  dot_cmd->add_option( "--out-dir", out_path, "directory for the .dot files" )->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? 0 : 2;
  }

  try
  {
    if ( *ingest_cmd )
    {
      const auto data = triad::ingest( in_path, balance, seed );
      triad::write_csv_file( out_path, data );
      std::cout << "wrote " << data.n_objects() << " objects, " << data.n_attributes() << " attributes to "
                << out_path << "\n";
    }
    else if ( *train_cmd )
    {
      auto data = triad::ingest( in_path, balance, tc.seed );
      const auto result = triad::train( data, tc );
      triad::save_model_file( model_out, result.model );
      std::cout << "trained " << result.model.relu_count() << " ReLU nodes in " << tc.epochs
                << " epochs: loss " << result.loss << ", threshold " << result.model.threshold
                << ", training accuracy " << result.accuracy << "\n";
      if ( !result.converged )
        std::cout << "note: " << result.note << "\n";
    }
    else if ( *interpret_cmd )
    {
      pc.selection.method = triad::parse_selection_method( method );
      if ( epsilon > 0.0 )
        pc.epsilon = epsilon;
      if ( have_threshold )
        pc.threshold_override = threshold;
      pc.export_dot = !no_dot;
      const auto result = triad::run_pipeline( pc );
      std::cout << triad::report_to_text( result.rep );
      std::cout << "artifacts in " << pc.output_dir << "\n";
    }
    else if ( *explain_cmd )
    {
      const auto rep = triad::load_report_file( report_path );
      const auto model = triad::load_model_file( model_path.empty() ? rep.model_path : model_path );
      std::cout << triad::explain_object( rep, model, parse_values( values ) );
    }
    else if ( *dot_cmd )
    {
      const auto rep = triad::load_report_file( report_path );
      const auto trees = triad::trees_of_report( rep );
      std::filesystem::create_directories( out_path );
      for ( std::size_t i = 0; i < trees.size(); ++i )
      {
        const auto file = std::filesystem::path( out_path ) / ( "concept_" + std::to_string( i ) + ".dot" );
        std::ofstream out( file );
        out << triad::to_dot( trees[i].tree, rep.attribute_names, "concept_" + std::to_string( i ) );
      }
      std::cout << "wrote " << trees.size() << " tree(s) to " << out_path << "\n";
    }
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::domain_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::out_of_range& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
