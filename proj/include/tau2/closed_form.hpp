#pragma once

// Explicit 2-correlators: the normalized values a_{g,k}, their explicit
// differences b_{g,k} = a_{g,k+1} - a_{g,k}, and the correlators they give.
//
// a_{g,k} = (2k+1)!! (6g-1-2k)!! / (6g-1)!! * 24^g g! * <tau_k tau_{3g-1-k}>
//
// a is symmetric under k <-> 3g-1-k and a_{g,0} = 1, so a whole genus
// follows from telescoping b over 0 <= k < floor((3g-1)/2).

#include <vector>

#include "tau2/correlator.hpp"
#include "tau2/exact.hpp"

namespace tau2 {

/// floor((3g-1)/2): the last k reached by telescoping before symmetry
/// takes over.
inline long half_range(long g) { return (3 * g - 1) / 2; }

/// True for 0 <= k <= half_range(g) - 1, the k where b_value is defined.
inline bool in_difference_domain(long g, long k) { return g >= 1 && k >= 0 && k <= half_range(g) - 1; }

/// Explicit b_{g,k}. Throws RangeError outside in_difference_domain().
ExactRational b_value(long g, long k);

/// a_{g,k} for any 0 <= k <= 3g-1.
ExactRational a_closed(long g, long k);

/// a_{g,0..3g-1} with one pass of the telescoping sum.
std::vector<ExactRational> a_closed_row(long g);

/// (2k+1)!! (6g-1-2k)!! 24^g g! / (6g-1)!!, the factor taking a correlator
/// to its normalized value.
ExactRational normalization_factor(long g, long k);

/// a-value of a given correlator.
ExactRational normalize(long g, long k, const ExactRational& correlator);

/// Correlator of a given a-value.
ExactRational denormalize(long g, long k, const ExactRational& normalized);

ExactRational two_point_closed(long g, long k);

/// <tau_k tau_{3g-1-k}> for k = 0..3g-1.
std::vector<ExactRational> two_point_closed_row(long g);

}  // namespace tau2
