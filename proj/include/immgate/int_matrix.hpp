#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "immgate/errors.hpp"
#include "immgate/rational.hpp"

namespace immgate {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            fail(errc::malformed_input, "entry count does not match matrix shape");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return a_; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) fail(errc::malformed_input, "matrix product shape mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += aik * o(k, j);
            }
        return p;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    /// row i += f * row j
    void add_row(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
    }
    /// col i += f * col j
    void add_col(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Fraction-free Bareiss determinant.
inline Int det(const IntMatrix& a) {
    if (!a.is_square()) fail(errc::malformed_input, "determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t l = k + 1;
            while (l < n && m(l, k) == 0) ++l;
            if (l == n) return 0;
            m.swap_rows(k, l);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct SmithResult {
    IntMatrix u, d, v;  // u*a*v = d, u and v unimodular, d diagonal with d_i | d_{i+1}
};

namespace detail {

inline bool snf_block_is_clean(const IntMatrix& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(t, j) != 0) return false;
    return true;
}

inline bool snf_find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace detail

/// Smith normal form by minimum-pivot elimination.  Row operations are
/// mirrored on u, column operations on v, so u*a*v = d holds exactly.
inline SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = r.d;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!detail::snf_find_pivot(d, t, pi, pj)) break;  // lower-right block all zero
        for (;;) {
            detail::snf_find_pivot(d, t, pi, pj);
            if (pi != t) {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);  // truncated quotient keeps |remainder| < |pivot|
                if (q != 0) {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
            }
            if (!detail::snf_block_is_clean(d, t)) continue;
            // Pivot is lone; enforce that it divides the rest of the block.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return r;
}

/// Basis of the integer kernel lattice {x : a*x = 0}.  The lattice is
/// saturated because the basis comes from unimodular columns of v.
inline std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool zero_col = j >= std::min(a.rows(), a.cols()) || s.d(j, j) == 0;
        if (!zero_col) continue;
        std::vector<Int> x(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) x[i] = s.v(i, j);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// One integer solution of a*x = b, if any.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                                     const std::vector<Int>& b) {
    if (b.size() != a.rows()) fail(errc::malformed_input, "rhs size mismatch");
    SmithResult s = smith_normal_form(a);
    std::vector<Int> ub(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) ub[i] += s.u(i, j) * b[j];
    std::vector<Int> y(a.cols());
    const std::size_t k = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < k && s.d(i, i) != 0) {
            if (ub[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) x[i] += s.v(i, j) * y[j];
    return x;
}

namespace detail {

/// Signature by symmetric congruence diagonalization over Q.  Handles
/// zero diagonal pivots; used when the leading-minor rule stalls.
inline int signature_by_congruence(const IntMatrix& form) {
    const std::size_t n = form.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(form(i, j));
    int pos = 0, neg = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (a[t][t] == 0) {
            std::size_t l = t + 1;
            while (l < n && a[l][l] == 0) ++l;
            if (l < n) {
                std::swap(a[t], a[l]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][l]);
            } else {
                // All remaining diagonal entries vanish; a hyperbolic move
                // a_ii <- 2 a_ij makes one nonzero if the block is nonzero.
                std::size_t bi = n, bj = n;
                for (std::size_t i = t; i < n && bi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (a[i][j] != 0) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi == n) fail(errc::degenerate_form, "form is degenerate (zero block)");
                for (std::size_t c = 0; c < n; ++c) a[bi][c] += a[bj][c];
                for (std::size_t r2 = 0; r2 < n; ++r2) a[r2][bi] += a[r2][bj];
                if (bi != t) {
                    std::swap(a[t], a[bi]);
                    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][bi]);
                }
            }
        }
        const Rat p = a[t][t];
        for (std::size_t i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            Rat f = a[i][t] / p;
            for (std::size_t c = 0; c < n; ++c) a[i][c] -= f * a[t][c];
            for (std::size_t r2 = 0; r2 < n; ++r2) a[r2][i] -= f * a[r2][t];
        }
        if (p > 0)
            ++pos;
        else
            ++neg;
    }
    return pos - neg;
}

}  // namespace detail

/// Signature of a nondegenerate symmetric integer form, computed exactly:
/// leading principal minor signs (Jacobi) when all minors are nonzero,
/// with a symmetric-pivoting congruence fallback otherwise.
inline int signature(const IntMatrix& form) {
    if (!form.is_square() || !form.is_symmetric())
        fail(errc::malformed_input, "signature requires a symmetric matrix");
    const std::size_t n = form.rows();
    if (n == 0) return 0;

    // Bareiss without row swaps: pivot after step k equals the (k+1)-st
    // leading principal minor.
    std::vector<Int> minors;
    minors.reserve(n);
    {
        IntMatrix m = form;
        Int prev = 1;
        bool stalled = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (m(k, k) == 0) {
                stalled = true;
                break;
            }
            minors.push_back(m(k, k));
            if (k + 1 == n) break;
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                    mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                m(i, k) = 0;
            }
            prev = m(k, k);
        }
        if (!stalled) {
            // Jacobi: each sign agreement in the sequence 1, D1, ..., Dn
            // contributes +1 to the signature, each sign change -1.
            int sig = 0;
            Int prev_minor = 1;
            for (const Int& mk : minors) {
                sig += (sgn(mk) == sgn(prev_minor)) ? 1 : -1;
                prev_minor = mk;
            }
            return sig;
        }
    }
    if (det(form) == 0) fail(errc::degenerate_form, "form is degenerate");
    return detail::signature_by_congruence(form);
}

}  // namespace immgate
