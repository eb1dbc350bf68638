#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/error.hpp"
#include "trilie/matrix.hpp"
#include "trilie/pair_basis.hpp"
#include "trilie/subspace.hpp"

namespace trilie {

/// Representation rho: wedge^2 g -> End(V), stored pair-indexed (i < j) so
/// antisymmetry in the wedge slot is structural. Column b of the action
/// matrix is the image of the b-th module basis vector.
class Representation {
public:
    Representation(int algebra_dim, int module_dim, std::vector<Mat> actions)
        : pairs_(algebra_dim), module_dim_(module_dim), rho_(std::move(actions)) {
        if (int(rho_.size()) != pairs_.count()) throw DimensionMismatch("one action matrix per basis pair required");
        for (const auto& m : rho_)
            if (m.rows() != module_dim_ || m.cols() != module_dim_)
                throw DimensionMismatch("action matrix shape must be module_dim x module_dim");
    }

    int algebra_dim() const { return pairs_.dim(); }
    int module_dim() const { return module_dim_; }
    const PairBasis& pairs() const { return pairs_; }

    const Mat& action_by_rank(int pair_rank) const { return rho_[pair_rank]; }

    /// rho(e_i, e_j) with the wedge sign; zero matrix when i == j.
    Mat action(int i, int j) const {
        auto [r, s] = pairs_.rank_signed(i, j);
        if (s == 0) return Mat(module_dim_, module_dim_);
        if (s == 1) return rho_[r];
        return Rational(-1) * rho_[r];
    }

    /// Bilinear extension rho(x, y) for coordinate vectors.
    Mat action_bilinear(const Vec& x, const Vec& y) const {
        Mat m(module_dim_, module_dim_);
        const int d = pairs_.dim();
        for (int i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (y[j] == 0 || i == j) continue;
                auto [r, s] = pairs_.rank_signed(i, j);
                m = m + (s * x[i] * y[j]) * rho_[r];
            }
        }
        return m;
    }

private:
    PairBasis pairs_;
    int module_dim_;
    std::vector<Mat> rho_;
};

namespace detail {

/// Validates both representation axioms exhaustively on basis 4-tuples.
inline void validate_representation(const ThreeLieAlgebra& a, const Representation& rho) {
    const int d = a.dim();
    auto act = [&](int i, int j) { return rho.action(i, j); };
    // rho(pi(e_i,e_j,e_k), e_l) expanded over the structure constants
    auto act_bracket_left = [&](int i, int j, int k, int l) {
        Mat m(rho.module_dim(), rho.module_dim());
        for (int t = 0; t < d; ++t) {
            const Rational& c = a.tensor().at(i, j, k, t);
            if (c != 0) m = m + c * rho.action(t, l);
        }
        return m;
    };
    auto act_bracket_right = [&](int l, int i, int j, int k) {
        Mat m(rho.module_dim(), rho.module_dim());
        for (int t = 0; t < d; ++t) {
            const Rational& c = a.tensor().at(i, j, k, t);
            if (c != 0) m = m + c * rho.action(l, t);
        }
        return m;
    };
    for (int x1 = 0; x1 < d; ++x1)
        for (int x2 = 0; x2 < d; ++x2)
            for (int x3 = 0; x3 < d; ++x3)
                for (int x4 = 0; x4 < d; ++x4) {
                    Mat lhs1 = act(x1, x2) * act(x3, x4);
                    Mat rhs1 = act_bracket_left(x1, x2, x3, x4) + act_bracket_right(x3, x1, x2, x4) +
                               act(x3, x4) * act(x1, x2);
                    if (!(lhs1 - rhs1).is_zero())
                        throw RepresentationAxiomViolation(
                            "representation axiom 1 fails at basis tuple (" + std::to_string(x1 + 1) + "," +
                                std::to_string(x2 + 1) + "," + std::to_string(x3 + 1) + "," + std::to_string(x4 + 1) +
                                ")",
                            1, {x1 + 1, x2 + 1, x3 + 1, x4 + 1});
                    Mat lhs2 = act_bracket_right(x1, x2, x3, x4);
                    Mat rhs2 = act(x3, x4) * act(x1, x2) - act(x2, x4) * act(x1, x3) + act(x2, x3) * act(x1, x4);
                    if (!(lhs2 - rhs2).is_zero())
                        throw RepresentationAxiomViolation(
                            "representation axiom 2 fails at basis tuple (" + std::to_string(x1 + 1) + "," +
                                std::to_string(x2 + 1) + "," + std::to_string(x3 + 1) + "," + std::to_string(x4 + 1) +
                                ")",
                            2, {x1 + 1, x2 + 1, x3 + 1, x4 + 1});
                }
}

}  // namespace detail

/// Builds and validates a representation from pair-indexed action matrices.
inline Representation make_representation(const ThreeLieAlgebra& a, int module_dim, std::vector<Mat> actions) {
    Representation rho(a.dim(), module_dim, std::move(actions));
    detail::validate_representation(a, rho);
    return rho;
}

/// ad_{x^y} z = pi(x, y, z); valid by the fundamental identity.
inline Representation adjoint_rep(const ThreeLieAlgebra& a) {
    const int d = a.dim();
    PairBasis pb(d);
    std::vector<Mat> actions;
    actions.reserve(pb.count());
    for (int r = 0; r < pb.count(); ++r) {
        auto [i, j] = pb.unrank(r);
        Mat m(d, d);
        for (int b = 0; b < d; ++b) m.set_col(b, a.bracket_basis(i, j, b));
        actions.push_back(std::move(m));
    }
    return make_representation(a, d, std::move(actions));
}

/// Representation of the subalgebra H on g/H by bracket-then-project:
/// the action of u ^ v sends a quotient class to p(pi(u, v, s(class))).
/// Independent of the chosen split.
inline Representation induced_quotient_rep(const ThreeLieAlgebra& a, const Subspace& h, const QuotientSplit& split) {
    ThreeLieAlgebra sub = restrict_to_subalgebra(a, h);  // throws NotASubalgebra
    const int k = h.dim();
    const int q = split.quotient_dim();
    PairBasis pb(k);
    std::vector<Mat> actions;
    actions.reserve(pb.count());
    for (int r = 0; r < pb.count(); ++r) {
        auto [i, j] = pb.unrank(r);
        Mat m(q, q);
        for (int b = 0; b < q; ++b) {
            Vec ambient = split.section.col(b);
            m.set_col(b, split.project(a.bracket(h.basis_vector(i), h.basis_vector(j), ambient)));
        }
        actions.push_back(std::move(m));
    }
    return make_representation(sub, q, std::move(actions));
}

}  // namespace trilie
