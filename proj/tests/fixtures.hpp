#pragma once

#include <cstdint>
#include <random>

#include "immgate/int_matrix.hpp"
#include "immgate/quadratic.hpp"

namespace fixtures {

/// E8 Cartan matrix, Bourbaki node numbering.  Even, unimodular,
/// positive definite.
inline immgate::IntMatrix e8_cartan() {
    immgate::IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i) m(i, i) = 2;
    auto edge = [&](int a, int b) {
        m(a - 1, b - 1) = -1;
        m(b - 1, a - 1) = -1;
    };
    edge(1, 3);
    edge(2, 4);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    return m;
}

inline immgate::IntMatrix hyperbolic_plane() {
    immgate::IntMatrix h(2, 2);
    h(0, 1) = 1;
    h(1, 0) = 1;
    return h;
}

inline immgate::IntMatrix block_sum(const immgate::IntMatrix& a, const immgate::IntMatrix& b) {
    immgate::IntMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
    return s;
}

inline immgate::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                        int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    immgate::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

inline immgate::IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    immgate::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            int v = dist(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

/// Democratic count: the Arf invariant is the value q takes on the
/// majority of elements, evaluated by extending q over the whole
/// (Z/2)^{2g} via q(x+y) = q(x) + q(y) + <x,y>.  Independent of the
/// basis-product formula under test.
inline int arf_democratic(const immgate::QuadraticRefinement& q) {
    long long sum = 0;
    const unsigned dim = 2 * q.genus;
    for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
        int val = 0;
        for (unsigned i = 0; i < q.genus; ++i) {
            int a = (mask >> (2 * i)) & 1;
            int b = (mask >> (2 * i + 1)) & 1;
            val ^= (a & q.values[2 * i]) ^ (b & q.values[2 * i + 1]) ^ (a & b);
        }
        sum += val ? -1 : 1;
    }
    return sum > 0 ? 0 : 1;
}

}  // namespace fixtures
