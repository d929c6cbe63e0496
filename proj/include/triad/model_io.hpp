#pragma once

#include <iosfwd>
#include <string>

#include "triad/network.hpp"

namespace triad
{

/*! Plain-text model format:
 *
 *   triad-model 1
 *   n_atts <n>
 *   below <count>   # matrices up to the ReLU layer
 *   above <count>   # matrices after it
 *   threshold <tau>
 *   matrix <rows> <cols>
 *   <row-major entries, one row per line>
 *   ...
 *
 * Numbers are written with 17 significant digits, so save/load/save
 * reproduces the bytes and the doubles exactly.
 */
void save_model( std::ostream& out, const simple_ann_model& model );
void save_model_file( const std::string& path, const simple_ann_model& model );

simple_ann_model load_model( std::istream& in );
simple_ann_model load_model_file( const std::string& path );

} // namespace triad
