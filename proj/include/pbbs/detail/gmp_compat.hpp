#pragma once

#include <gmpxx.h>

namespace pbbs::detail {

// The system gmpxx lacks long long overloads, which makes mixed expressions
// ambiguous.  We only target LP64 platforms, so funnel every conversion
// through the (lossless) long constructor.
static_assert(sizeof(long) == sizeof(long long),
              "big-integer conversions assume an LP64 platform");

inline mpz_class mz(long long v) { return mpz_class(static_cast<long>(v)); }

}  // namespace pbbs::detail
