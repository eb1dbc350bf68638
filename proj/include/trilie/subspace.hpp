#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/error.hpp"
#include "trilie/matrix.hpp"

namespace trilie {

/// Subspace of an algebra carrier, stored as a basis matrix whose columns
/// span it. Columns are validated to be linearly independent.
class Subspace {
public:
    Subspace(int ambient_dim, Mat basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
        if (basis_.rows() != ambient_) throw DimensionMismatch("subspace basis rows must equal ambient dimension");
        if (basis_.rank() != basis_.cols()) throw DimensionMismatch("subspace basis columns must be independent");
    }

    static Subspace span_of_basis_vectors(int ambient_dim, const std::vector<int>& indices) {
        Mat m(ambient_dim, int(indices.size()));
        for (int j = 0; j < int(indices.size()); ++j) {
            if (indices[j] < 0 || indices[j] >= ambient_dim) throw IndexOutOfRange("basis vector index out of range");
            m(indices[j], j) = 1;
        }
        return Subspace(ambient_dim, std::move(m));
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(int j) const { return basis_.col(j); }

    /// Coordinates of v in this basis; nullopt when v is outside the span.
    std::optional<Vec> coords(const Vec& v) const { return basis_.solve(v); }

private:
    int ambient_;
    Mat basis_;
};

/// Projection/section pair for g -> g/H. The quotient is identified with the
/// span of a complement basis; p vanishes exactly on H and p o s = id.
struct QuotientSplit {
    Mat h_basis;     // d x k
    Mat complement;  // d x q, columns span a complement of H
    Mat projection;  // q x d, quotient coordinates
    Mat section;     // d x q, equals the complement matrix

    int ambient_dim() const { return h_basis.rows(); }
    int sub_dim() const { return h_basis.cols(); }
    int quotient_dim() const { return complement.cols(); }

    Vec project(const Vec& v) const { return projection.apply(v); }
    Vec section_of(const Vec& qv) const { return section.apply(qv); }
};

/// Split with an explicitly chosen complement; [H | C] must be invertible.
inline QuotientSplit quotient_split_with_complement(const Subspace& h, Mat complement) {
    const int d = h.ambient_dim();
    const int k = h.dim();
    if (complement.rows() != d || complement.cols() != d - k)
        throw DimensionMismatch("complement must have ambient rows and d-k columns");
    Mat full = h.basis().hcat(complement);
    Mat aug = full.hcat(Mat::identity(d));
    Mat::Echelon e = aug.reduced_echelon();
    if (e.rank < d) throw DimensionMismatch("chosen complement does not complement the subspace");
    // inverse of [H | C] sits in the right block of the rref
    Mat inv(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) inv(i, j) = e.rref(i, d + j);
    Mat proj(d - k, d);
    for (int i = 0; i < d - k; ++i)
        for (int j = 0; j < d; ++j) proj(i, j) = inv(k + i, j);
    return QuotientSplit{h.basis(), complement, std::move(proj), complement};
}

/// Deterministic split: the complement consists of the standard basis vectors
/// whose coordinates are not pivot columns of the row-echelon form of H.
inline QuotientSplit quotient_split(const Subspace& h) {
    const int d = h.ambient_dim();
    Mat rows = h.basis().transposed();  // k x d, basis vectors as rows
    Mat::Echelon e = rows.reduced_echelon();
    std::vector<int> non_pivots;
    {
        std::size_t t = 0;
        for (int c = 0; c < d; ++c) {
            if (t < e.pivot_cols.size() && e.pivot_cols[t] == c)
                ++t;
            else
                non_pivots.push_back(c);
        }
    }
    Mat comp(d, int(non_pivots.size()));
    for (int j = 0; j < int(non_pivots.size()); ++j) comp(non_pivots[j], j) = 1;
    return quotient_split_with_complement(h, std::move(comp));
}

struct ClosureReport {
    bool closed = true;
    std::array<int, 3> witness{};  // 1-based positions in the subspace basis
    Vec residual;                  // quotient coordinates of the escaping bracket
};

/// True iff pi(u,v,w) stays in span(H) for all basis triples of H.
inline ClosureReport subspace_closure_check(const ThreeLieAlgebra& a, const Subspace& h) {
    if (h.ambient_dim() != a.dim()) throw DimensionMismatch("subspace lives in a different carrier");
    ClosureReport rep;
    const int k = h.dim();
    QuotientSplit split = quotient_split(h);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                Vec value = a.bracket(h.basis_vector(i), h.basis_vector(j), h.basis_vector(l));
                Vec q = split.project(value);
                if (!is_zero(q)) {
                    rep.closed = false;
                    rep.witness = {i + 1, j + 1, l + 1};
                    rep.residual = std::move(q);
                    return rep;
                }
            }
    rep.residual.assign(h.ambient_dim() - k, Rational(0));
    return rep;
}

/// The subalgebra (H, pi restricted) in its own basis coordinates.
inline ThreeLieAlgebra restrict_to_subalgebra(const ThreeLieAlgebra& a, const Subspace& h) {
    ClosureReport c = subspace_closure_check(a, h);
    if (!c.closed)
        throw NotASubalgebra("subspace is not closed under the bracket, witness basis triple (" +
                                 std::to_string(c.witness[0]) + "," + std::to_string(c.witness[1]) + "," +
                                 std::to_string(c.witness[2]) + ")",
                             c.witness, c.residual);
    const int k = h.dim();
    std::vector<StructureEntry> entries;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                Vec value = a.bracket(h.basis_vector(i), h.basis_vector(j), h.basis_vector(l));
                auto coords = h.coords(value);
                if (!is_zero(*coords)) entries.push_back({i, j, l, std::move(*coords)});
            }
    return ThreeLieAlgebra::make(k, entries);
}

}  // namespace trilie
