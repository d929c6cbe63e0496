#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "triad/bitset.hpp"
#include "triad/quantize.hpp"

namespace triad
{

/*! Exact fraction on int64, kept reduced.  Concept energies are small
 * integers, so relative energies sum to 1 without rounding. */
struct rational
{
  std::int64_t num = 0;
  std::int64_t den = 1;

  rational() = default;
  rational( std::int64_t n, std::int64_t d );

  rational operator+( const rational& other ) const;
  bool operator==( const rational& other ) const { return num == other.num && den == other.den; }
  double to_double() const { return double( num ) / double( den ); }
};

/*! Binary relation between objects and attributes, rows indexed by
 * object carrying the attribute set. */
struct dyadic_context
{
  std::vector<std::string> object_names;
  std::vector<std::string> attribute_names;
  std::vector<bitset> rows;

  int n_objects() const { return static_cast<int>( rows.size() ); }
  int n_attributes() const { return rows.empty() ? 0 : rows.front().size(); }
};

/*! Attributes shared by every object in the set (all attributes for the
 * empty set). */
bitset derive_intent( const dyadic_context& ctx, const bitset& objects );

/*! Objects carrying every attribute in the set (all objects for the
 * empty set). */
bitset derive_extent( const dyadic_context& ctx, const bitset& attributes );

struct dyadic_concept
{
  bitset extent;
  bitset intent;
};

/*! Concepts generated by closing each single object and each single
 * attribute; deduplicated, sorted by (extent, intent).  Every incidence
 * pair lies in at least one returned concept, and at most
 * |objects| + |attributes| concepts are returned. */
std::vector<dyadic_concept> concepts_from_singletons( const dyadic_context& ctx );

/*! Burmeister cxt text format (B / counts / object names / attribute
 * names / X-dot rows, one row per object). */
dyadic_context read_cxt( std::istream& in );
void write_cxt( std::ostream& out, const dyadic_context& ctx );

/*! Ternary relation between partition cells, minterms and bit levels;
 * the mutable working form of a bit tensor. */
struct triadic_context
{
  int n_cells = 0;
  int n_minterms = 0;
  int n_levels = 0;
  std::vector<std::uint32_t> cell_numbers;
  std::vector<bitset> slices; /* per cell, bit index = minterm * n_levels + level */

  triadic_context() = default;
  triadic_context( int cells, int minterms, int levels );

  bool test( int c, int k, int l ) const { return slices[c].test( k * n_levels + l ); }
  void set( int c, int k, int l ) { slices[c].set( k * n_levels + l ); }
  void reset( int c, int k, int l ) { slices[c].reset( k * n_levels + l ); }
  bool any() const;
};

triadic_context to_triadic_context( const bit_tensor& bt );

struct triadic_concept
{
  bitset cells;    /* X1 */
  bitset minterms; /* X2 */
  bitset levels;   /* X3 */
  std::int64_t power = 0;
  rational relpower;

  std::int64_t power_sum() const; /* sum of 2^level over X3 */
};

/*! Maximal full cuboids obtained by closing the dyadic concepts of
 * every cell slice to the triadic level; deduplicated, sorted, and
 * restricted to cuboids that actually cover set bits (non-empty
 * minterm and level sets).  Together they cover every set bit. */
std::vector<triadic_concept> triconcepts( const triadic_context& ctx );

enum class selection_method
{
  relative_power,       /* share of total energy */
  cells_times_power_sum,/* covered cells x level energy */
  power_sum,            /* level energy */
  accuracy              /* best-threshold accuracy over covered objects */
};

selection_method parse_selection_method( const std::string& name ); /* "M1".."M4" */
std::string to_string( selection_method m );

/*! Per-object row for the accuracy method: which tensor row the object
 * falls in, its target, and its minterm vector. */
struct object_view
{
  int cell_row = -1; /* -1 when the object's cell has no tensor row */
  int target = 0;
  Eigen::VectorXd minterms;
};

struct selection_options
{
  selection_method method = selection_method::relative_power;
  bool support_weighted = false; /* weight cell rows by training support */
};

/*! Selection score of a concept; total_energy is the energy of the
 * undepleted context (denominator of relative power). */
double score_concept( const triadic_concept& c, const selection_options& opts, std::int64_t total_energy,
                      const std::vector<std::int64_t>& cell_supports, const std::vector<object_view>& objects );

/*! Greedy exclusive cover: repeatedly take the best concept of the
 * remaining context, clear its cuboid, and recompute, until no set bit
 * is left.  Ties fall to the lexicographically smallest
 * (cells, minterms, levels).  The returned cuboids are pairwise
 * disjoint, cover every set bit of the input, and their relative
 * powers (against the undepleted energy) sum to exactly 1. */
std::vector<triadic_concept> exclusive_triconcepts( const triadic_context& ctx, const selection_options& opts,
                                                    const std::vector<std::int64_t>& cell_supports = {},
                                                    const std::vector<object_view>& objects = {} );

/*! Edges i -> j (i implies j) where the minterm set of i is contained
 * in j's and the cell set of i contains j's; equal concepts yield both
 * directions, self-loops are omitted. */
std::vector<std::pair<int, int>> concept_implications( const std::vector<triadic_concept>& concepts );

} // namespace triad
