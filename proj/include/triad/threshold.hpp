#pragma once

#include <optional>
#include <vector>

namespace triad
{

struct threshold_fit
{
  double threshold = 0.0;
  double accuracy = 0.0;
};

/*! Picks the decision threshold maximizing accuracy of the rule
 * "predict 1 iff score > threshold".
 *
 * Candidates are the observed scores, midpoints between consecutive
 * distinct scores, and one value below the minimum (so an all-positive
 * target vector can reach accuracy 1).  Ties go to the smallest
 * candidate, which makes the fit deterministic.  Empty input yields
 * {0, 0}.
 */
threshold_fit best_threshold( const std::vector<double>& scores, const std::vector<int>& targets );

struct confusion_counts
{
  long long tp = 0, fp = 0, tn = 0, fn = 0;

  long long total() const { return tp + fp + tn + fn; }
  std::optional<double> precision() const;
  std::optional<double> recall() const;
  std::optional<double> accuracy() const;
};

/*! Tallies the rule "predict 1 iff score > threshold" against targets. */
confusion_counts confusion_at( const std::vector<double>& scores, const std::vector<int>& targets, double threshold );

} // namespace triad
