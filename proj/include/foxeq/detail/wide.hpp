#pragma once

// Extended-precision scalar used internally by the alternating entire series
// (Gram series, Mobius-exponential series). Those sums cancel from peak terms
// of order e^{|u|} down to O(1) results, which exhausts double precision well
// before the documented |u| <= 45 budget; evaluating in quad keeps the
// returned doubles accurate over the whole budget.

namespace foxeq::detail {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

// zeta(m) for integer m >= 2 at wide precision, cached (m clamped to 511,
// where zeta(m) - 1 < 1e-150 anyway).
wide zeta_integer_wide(int m);

// Same value rounded to double.
double zeta_integer(int m);

} // namespace foxeq::detail
