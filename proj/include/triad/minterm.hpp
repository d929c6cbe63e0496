#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace triad
{

/*! Attribute counts above this make the 2^n minterm expansion
 * unreasonable on a desktop; rejected as a configuration error. */
inline constexpr int max_attributes = 16;

/*! Bit string b_1..b_n of a minterm index, b_1 most significant.
 *
 * Attribute j appears non-negated in minterm k exactly when b_j = 1,
 * so k = sum_j b_j * 2^(n-j).
 */
struct bit_code
{
  std::vector<std::uint8_t> bits; /* b_1 first */

  std::uint32_t index() const;
  std::string to_string() const; /* e.g. "101" */
};

/*! Expands index k in 0..2^n-1 into its n-bit code. */
bit_code bitcode_of( std::uint32_t k, int n );

/*! Maps an attribute vector x in [0,1]^n to its 2^n minterm values,
 *
 *   mt[k] = prod_j (1-x[j])^(1-b_j) * x[j]^b_j,
 *
 * the fuzzy truth degree of each full conjunction over the attributes.
 * Entries are non-negative and sum to 1.  Throws std::invalid_argument
 * on an empty or oversized vector and std::domain_error on entries
 * outside [0,1].
 */
Eigen::VectorXd to_minterms( const Eigen::Ref<const Eigen::VectorXd>& x );

} // namespace triad
