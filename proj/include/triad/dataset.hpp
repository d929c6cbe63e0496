#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace triad
{

/*! Training objects: one row per object, attribute values in [0,1]
 * after normalization, binary targets. */
struct labeled_dataset
{
  Eigen::MatrixXd values; /* rows = objects, cols = attributes */
  std::vector<int> targets;
  std::vector<std::string> attribute_names;

  int n_objects() const { return static_cast<int>( values.rows() ); }
  int n_attributes() const { return static_cast<int>( values.cols() ); }
};

/*! Checks shape, target domain {0,1} and attribute range [0,1]. */
void validate( const labeled_dataset& data );

/*! Parses a CSV with a header row; every column numeric, the last
 * column the binary target.  Throws std::invalid_argument naming the
 * offending column/row on malformed input. */
labeled_dataset read_csv( std::istream& in );
labeled_dataset read_csv_file( const std::string& path );

void write_csv( std::ostream& out, const labeled_dataset& data );
void write_csv_file( const std::string& path, const labeled_dataset& data );

/*! Rescales each attribute column to [0,1] by its min/max.  A constant
 * column has no scale and raises std::invalid_argument naming it. */
labeled_dataset minmax_normalize( const labeled_dataset& data );

/*! Downsamples the majority class to the minority count.  The kept
 * majority rows are drawn with the seeded generator; surviving rows
 * keep their original relative order. */
labeled_dataset balance_downsample( const labeled_dataset& data, unsigned seed );

/*! CSV ingestion pipeline: read, normalize, optionally balance. */
labeled_dataset ingest( const std::string& path, bool balance, unsigned seed );

} // namespace triad
