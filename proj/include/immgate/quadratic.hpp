#pragma once

#include <cstdint>
#include <vector>

#include "immgate/errors.hpp"

namespace immgate {

/// Z/2-valued quadratic refinement of the standard symplectic form on a
/// genus-g surface symplectic basis a_1, b_1, ..., a_g, b_g; values are
/// the 2g bits q(a_1), q(b_1), ..., q(a_g), q(b_g).
struct QuadraticRefinement {
    unsigned genus = 0;
    std::vector<std::uint8_t> values;  // exactly 2*genus bits

    void check() const {
        if (values.size() != 2u * genus)
            fail(errc::malformed_input, "quadratic refinement needs exactly 2g bits");
        for (auto v : values)
            if (v > 1) fail(errc::malformed_input, "refinement values must be bits");
    }
};

/// Arf invariant: sum of q(a_i) q(b_i) mod 2.
inline int arf_invariant(const QuadraticRefinement& q) {
    q.check();
    int s = 0;
    for (unsigned i = 0; i < q.genus; ++i) s ^= (q.values[2 * i] & q.values[2 * i + 1]);
    return s;
}

}  // namespace immgate
