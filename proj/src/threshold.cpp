#include "triad/threshold.hpp"

#include <algorithm>
#include <stdexcept>

namespace triad
{

threshold_fit best_threshold( const std::vector<double>& scores, const std::vector<int>& targets )
{
  if ( scores.size() != targets.size() )
    throw std::invalid_argument( "best_threshold: scores/targets length mismatch" );
  if ( scores.empty() )
    return {};

  std::vector<std::pair<double, int>> rows( scores.size() );
  for ( std::size_t i = 0; i < scores.size(); ++i )
    rows[i] = { scores[i], targets[i] };
  std::sort( rows.begin(), rows.end() );

  const long long m = static_cast<long long>( rows.size() );
  long long positives = 0;
  for ( auto& [s, t] : rows )
    positives += t;

  /* Accuracy is piecewise constant between consecutive distinct scores,
   * so scanning candidates in ascending order with a running count of
   * objects at or below the candidate covers every achievable value;
   * the below-minimum candidate (predict everything 1) comes first. */
  double best_theta = rows.front().first - 1.0;
  long long best_correct = positives;

  long long zeros_below = 0, ones_below = 0;
  std::size_t i = 0;
  while ( i < rows.size() )
  {
    const double v = rows[i].first;
    while ( i < rows.size() && rows[i].first == v )
    {
      if ( rows[i].second )
        ++ones_below;
      else
        ++zeros_below;
      ++i;
    }
    const long long correct = zeros_below + ( positives - ones_below );
    if ( correct > best_correct )
    {
      best_correct = correct;
      best_theta = v;
    }
  }

  return { best_theta, double( best_correct ) / double( m ) };
}

confusion_counts confusion_at( const std::vector<double>& scores, const std::vector<int>& targets, double threshold )
{
  if ( scores.size() != targets.size() )
    throw std::invalid_argument( "confusion_at: scores/targets length mismatch" );

  confusion_counts c;
  for ( std::size_t i = 0; i < scores.size(); ++i )
  {
    const bool predicted = scores[i] > threshold;
    if ( predicted )
      ( targets[i] ? c.tp : c.fp )++;
    else
      ( targets[i] ? c.fn : c.tn )++;
  }
  return c;
}

std::optional<double> confusion_counts::precision() const
{
  if ( tp + fp == 0 )
    return std::nullopt;
  return double( tp ) / double( tp + fp );
}

std::optional<double> confusion_counts::recall() const
{
  if ( tp + fn == 0 )
    return std::nullopt;
  return double( tp ) / double( tp + fn );
}

std::optional<double> confusion_counts::accuracy() const
{
  if ( total() == 0 )
    return std::nullopt;
  return double( tp + tn ) / double( total() );
}

} // namespace triad
