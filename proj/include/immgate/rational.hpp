#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "immgate/errors.hpp"

namespace immgate {

/// Arbitrary-precision integer and rational.  mpq_class keeps values in
/// lowest terms with a positive denominator, which is exactly the
/// normal form we require everywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::malformed_input, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

/// Classical Bernoulli number B_n, convention B_1 = -1/2.
/// Computed by the Akiyama--Tanigawa triangle in exact rational
/// arithmetic; the triangle natively yields the B_1 = +1/2 convention,
/// so the n = 1 value is negated.
inline Rat bernoulli_classical(unsigned n) {
    std::vector<Rat> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = make_rat(1, Int(m) + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = Int(j) * (a[j - 1] - a[j]);
    }
    if (n == 1) return -a[0];
    return a[0];
}

/// B_r in the indexing customary in differential topology: the absolute
/// value of the classical B_{2r}, so B_1 = 1/6, B_2 = 1/30, B_3 = 1/42.
inline Rat bernoulli_topologist(unsigned r) {
    if (r < 1) fail(errc::malformed_input, "bernoulli index must be >= 1");
    Rat b = bernoulli_classical(2 * r);
    return b < 0 ? Rat(-b) : b;
}

}  // namespace immgate
