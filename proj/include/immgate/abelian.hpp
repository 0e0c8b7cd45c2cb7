#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "immgate/errors.hpp"
#include "immgate/int_matrix.hpp"
#include "immgate/rational.hpp"

namespace immgate {

/// Finitely generated abelian group in divisibility normal form:
/// Z^free_rank + Z/d_1 + ... + Z/d_t with 2 <= d_1 | d_2 | ... | d_t.
/// The normal form makes equality of isomorphism types a field-by-field
/// comparison.
class FGAbelianGroup {
  public:
    FGAbelianGroup() : free_rank_(0) {}
    FGAbelianGroup(unsigned free_rank, std::vector<Int> torsion)
        : free_rank_(free_rank), torsion_(std::move(torsion)) {
        for (std::size_t i = 0; i < torsion_.size(); ++i) {
            if (torsion_[i] < 2)
                fail(errc::malformed_input, "torsion coefficients must be >= 2");
            if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
                fail(errc::malformed_input, "torsion coefficients must form a divisibility chain");
        }
    }

    static FGAbelianGroup trivial() { return FGAbelianGroup(); }
    static FGAbelianGroup free(unsigned rank) { return FGAbelianGroup(rank, {}); }
    static FGAbelianGroup cyclic(const Int& d) {
        if (d == 0) return free(1);
        Int a = abs(d);
        if (a == 1) return trivial();
        return FGAbelianGroup(0, {a});
    }

    unsigned free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    /// Generator count in the canonical basis: free generators first,
    /// then torsion generators in divisibility order.  Matrices of
    /// homomorphisms between groups use this basis everywhere.
    std::size_t generator_count() const { return free_rank_ + torsion_.size(); }

    /// Order of the i-th canonical generator (0 = infinite).
    Int generator_order(std::size_t i) const {
        if (i < free_rank_) return 0;
        return torsion_[i - free_rank_];
    }

    std::optional<Int> order() const {
        if (free_rank_ > 0) return std::nullopt;
        Int n = 1;
        for (const Int& d : torsion_) n *= d;
        return n;
    }

    bool operator==(const FGAbelianGroup& o) const {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }

    FGAbelianGroup direct_sum(const FGAbelianGroup& o) const;

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank_ > 0) {
            os << "Z";
            if (free_rank_ > 1) os << "^" << free_rank_;
            first = false;
        }
        for (const Int& d : torsion_) {
            if (!first) os << " + ";
            os << "Z/" << d.get_str();
            first = false;
        }
        return os.str();
    }

  private:
    unsigned free_rank_;
    std::vector<Int> torsion_;
};

/// Cokernel of the relation map: Z^generators modulo the subgroup spanned
/// by the rows of the relation matrix.
inline FGAbelianGroup group_from_presentation(unsigned generators, const IntMatrix& relations) {
    if (relations.cols() != generators && !(relations.rows() == 0 && relations.cols() == 0))
        fail(errc::malformed_input, "relation matrix must have one column per generator");
    if (generators == 0) return FGAbelianGroup::trivial();
    if (relations.rows() == 0) return FGAbelianGroup::free(generators);
    SmithResult s = smith_normal_form(relations);
    std::vector<Int> torsion;
    std::size_t rank = 0;
    const std::size_t k = std::min(relations.rows(), relations.cols());
    for (std::size_t i = 0; i < k; ++i) {
        if (s.d(i, i) == 0) break;
        ++rank;
        if (s.d(i, i) > 1) torsion.push_back(s.d(i, i));
    }
    return FGAbelianGroup(static_cast<unsigned>(generators - rank), std::move(torsion));
}

inline FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& o) const {
    // Renormalize the combined torsion via a diagonal presentation.
    const std::size_t t = torsion_.size() + o.torsion_.size();
    IntMatrix rel(t, t);
    std::size_t i = 0;
    for (const Int& d : torsion_) rel(i, i) = d, ++i;
    for (const Int& d : o.torsion_) rel(i, i) = d, ++i;
    FGAbelianGroup tors = group_from_presentation(static_cast<unsigned>(t), rel);
    return FGAbelianGroup(free_rank_ + o.free_rank_ + tors.free_rank(), tors.torsion());
}

/// Relation rows that present the group on its canonical generators.
inline IntMatrix presentation_relations(const FGAbelianGroup& g) {
    IntMatrix rel(g.torsion().size(), g.generator_count());
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        rel(i, g.free_rank() + i) = g.torsion()[i];
    return rel;
}

/// Quotient of g by the subgroup generated by the given elements, each a
/// coordinate vector in the canonical generator basis.
inline FGAbelianGroup quotient_by_elements(const FGAbelianGroup& g,
                                           const std::vector<std::vector<Int>>& elements) {
    const std::size_t gens = g.generator_count();
    if (gens == 0) return FGAbelianGroup::trivial();
    IntMatrix rel(g.torsion().size() + elements.size(), gens);
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        rel(i, g.free_rank() + i) = g.torsion()[i];
    for (std::size_t e = 0; e < elements.size(); ++e) {
        if (elements[e].size() != gens)
            fail(errc::malformed_input, "element coordinate length mismatch");
        for (std::size_t j = 0; j < gens; ++j) rel(g.torsion().size() + e, j) = elements[e][j];
    }
    return group_from_presentation(static_cast<unsigned>(gens), rel);
}

/// Isomorphism type of the kernel of a homomorphism f: dom -> tgt given by
/// a matrix in canonical bases (columns indexed by dom generators).
///
/// The kernel is computed as a lattice quotient: L = {x : f(x) = 0 in tgt}
/// is the projection of the integer kernel of [M | R_tgt], and the kernel
/// subgroup is L modulo the relation lattice of dom.
inline FGAbelianGroup hom_kernel(const FGAbelianGroup& dom, const FGAbelianGroup& tgt,
                                 const IntMatrix& m) {
    const std::size_t p = dom.generator_count();
    const std::size_t q = tgt.generator_count();
    if (m.rows() != q || m.cols() != p)
        fail(errc::malformed_input, "homomorphism matrix shape mismatch");
    if (p == 0) return FGAbelianGroup::trivial();
    if (q == 0 || m.is_zero()) return dom;  // whole domain

    // Columns: p domain coordinates, then one per torsion relation of tgt.
    const std::size_t tq = tgt.torsion().size();
    IntMatrix big(q, p + tq);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < p; ++j) big(i, j) = m(i, j);
    for (std::size_t i = 0; i < tq; ++i)
        big(tgt.free_rank() + i, p + i) = tgt.torsion()[i];
    auto ker = kernel_basis(big);

    // Projections onto the domain coordinates generate L.
    std::vector<std::vector<Int>> w;
    for (const auto& x : ker) {
        std::vector<Int> head(x.begin(), x.begin() + p);
        bool zero = true;
        for (const Int& c : head)
            if (c != 0) {
                zero = false;
                break;
            }
        if (!zero) w.push_back(std::move(head));
    }
    if (w.empty()) {
        // L is contained in the relation lattice only if dom relations map
        // to zero, which they do; the kernel subgroup is then trivial.
        return FGAbelianGroup::trivial();
    }

    // K = Z^t / {v : W v lies in the relation lattice of dom}.
    const std::size_t t = w.size();
    const std::size_t td = dom.torsion().size();
    IntMatrix big2(p, t + td);
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < p; ++i) big2(i, j) = w[j][i];
    for (std::size_t i = 0; i < td; ++i) big2(dom.free_rank() + i, t + i) = dom.torsion()[i];
    auto ker2 = kernel_basis(big2);
    IntMatrix rel(ker2.size(), t);
    for (std::size_t r2 = 0; r2 < ker2.size(); ++r2)
        for (std::size_t j = 0; j < t; ++j) rel(r2, j) = ker2[r2][j];
    return group_from_presentation(static_cast<unsigned>(t), rel);
}

}  // namespace immgate
