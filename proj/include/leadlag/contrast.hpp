#pragma once

#include "leadlag/series.hpp"

namespace leadlag {

// Shifted Hayashi-Yoshida covariation contrast U(shift).
//
// For shift >= 0 it sums X(I)*Y(J) over interval pairs with I ending no
// later than horizon_T and I overlapping J shifted left by `shift`; for
// shift < 0 the horizon filter moves to the Y intervals and I is shifted
// instead. Runs as a two-pointer sweep in O(n_x + n_y) per shift and
// accumulates in ascending-I, ascending-J order, so results are
// bit-reproducible across runs and match a naive double loop evaluated in
// the same order.
double hy_contrast(const IntervalFamily& x, const IntervalFamily& y, TimeStamp shift,
                   TimeStamp horizon_T);

// Empirical covariation of synchronous equispaced data at integer lag k:
// sum over i of (X_i - X_{i-1}) * (Y_{i+k} - Y_{i+k-1}), both indices kept
// in range. Errors if the two series are not synchronous and equispaced.
double synchronous_contrast(const TickSeries& x, const TickSeries& y, std::int64_t k);

}  // namespace leadlag
