#pragma once

#include <Eigen/Dense>

namespace triad
{

/*! Shapley values of the n attributes for the coalition game
 * v(S) = mw[k(S)], where k(S) is the minterm whose non-negated
 * attribute set is S (attribute j contributes bit weight 2^(n-j)).
 * Exact subset-sum evaluation; the values total v(N) - v(empty) =
 * mw[2^n - 1] - mw[0]. */
Eigen::VectorXd shapley_global( const Eigen::Ref<const Eigen::VectorXd>& mw );

/*! Object-dependent variant: v(S) = mt[k(S)] * mw[k(S)] weighs each
 * coalition by the object's minterm value. */
Eigen::VectorXd shapley_object( const Eigen::Ref<const Eigen::VectorXd>& mw,
                                const Eigen::Ref<const Eigen::VectorXd>& mt );

} // namespace triad
