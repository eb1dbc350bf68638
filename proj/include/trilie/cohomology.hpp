#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/cochain.hpp"
#include "trilie/error.hpp"
#include "trilie/matrix.hpp"
#include "trilie/nr_bracket.hpp"
#include "trilie/representation.hpp"
#include "trilie/subspace.hpp"

namespace trilie {

/// delta on C^0(f) = (g^g) (+) (h^h):
///   z |-> sum mu(u_i, v_i, f z) - sum f(pi(x_j, y_j, z)).
inline Cochain morphism_delta0(const Wedge2& x_part, const Wedge2& u_part, const LinearMap& f,
                               const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    if (x_part.dim() != a.dim() || u_part.dim() != b.dim() || f.source_dim != a.dim() || f.target_dim != b.dim())
        throw DimensionMismatch("delta0 inputs do not match the algebra pair");
    PairBasis pa(a.dim()), pb(b.dim());
    Cochain out(0, a.dim(), b.dim(), CochainSpace::Hom);
    for (int z = 0; z < a.dim(); ++z) {
        Vec fz = f.apply_basis(z);
        Vec val(b.dim());
        for (int r = 0; r < pb.count(); ++r) {
            if (u_part[r] == 0) continue;
            auto [u, v] = pb.unrank(r);
            add_scaled(val, u_part[r], b.bracket_partial(u, v, fz));
        }
        Vec xbr(a.dim());
        for (int r = 0; r < pa.count(); ++r) {
            if (x_part[r] == 0) continue;
            auto [x, y] = pa.unrank(r);
            add_scaled(xbr, x_part[r], a.bracket_basis(x, y, z));
        }
        val = val - f.apply(xbr);
        std::size_t pos = out.flat({}, z);
        for (int c = 0; c < b.dim(); ++c) out.entry(pos, c) = std::move(val[c]);
    }
    return out;
}

/// Coboundary of the morphism complex on C^n(f), n >= 1, by its explicit
/// five-sum expansion. theta carries n-1 wedge slots; the output carries n.
inline Cochain morphism_delta(const Cochain& theta, const LinearMap& f, const ThreeLieAlgebra& a,
                              const ThreeLieAlgebra& b) {
    const int d = a.dim(), e = b.dim();
    if (theta.src_dim() != d || theta.tgt_dim() != e || f.source_dim != d || f.target_dim != e)
        throw DimensionMismatch("morphism coboundary input does not match the algebra pair");
    const int n = theta.degree() + 1;
    PairBasis pairs(d);
    std::vector<Vec> fcol(d);
    for (int i = 0; i < d; ++i) fcol[i] = f.apply_basis(i);

    Cochain out(n, d, e, CochainSpace::Hom);
    std::vector<int> ranks;
    int basis;
    std::vector<int> args(n > 0 ? n - 1 : 0);
    for (std::size_t pos = 0; pos < out.position_count(); ++pos) {
        out.decode(pos, ranks, basis);
        std::vector<std::pair<int, int>> xy(n);
        for (int t = 0; t < n; ++t) xy[t] = pairs.unrank(ranks[t]);
        Vec acc(e);

        // insertions of pi(X_i, .) into a later wedge slot
        for (int i = 0; i < n; ++i) {
            const Rational si = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1} in 1-based indexing
            for (int j = i + 1; j < n; ++j) {
                int w = 0;
                for (int t = 0; t < n; ++t)
                    if (t != i && t != j) args[w++] = ranks[t];
                // keep slot order: the modified wedge sits where X_j was
                for (int t = n - 2; t > j - 1; --t) args[t] = args[t - 1];
                args[j - 1] = 0;
                Wedge2 mod = Wedge2::of_vectors(a.bracket_basis(xy[i].first, xy[i].second, xy[j].first),
                                                basis_vec(d, xy[j].second));
                mod += Wedge2::of_vectors(basis_vec(d, xy[j].first),
                                          a.bracket_basis(xy[i].first, xy[i].second, xy[j].second));
                add_scaled(acc, si, theta.eval_replace(std::span<const int>(args.data(), n - 1), j - 1, mod, basis));
            }
        }
        // insertion of pi(X_i, x) into the last slot
        for (int i = 0; i < n; ++i) {
            const Rational si = (i % 2 == 0) ? -1 : 1;
            int w = 0;
            for (int t = 0; t < n; ++t)
                if (t != i) args[w++] = ranks[t];
            Vec last = a.bracket_basis(xy[i].first, xy[i].second, basis);
            add_scaled(acc, si, theta.eval_last_general(std::span<const int>(args.data(), n - 1), last));
        }
        // mu(f x_i, f y_i, theta(...))
        for (int i = 0; i < n; ++i) {
            const Rational si = (i % 2 == 0) ? 1 : -1;  // (-1)^{i+1} with the extra sign flip
            int w = 0;
            for (int t = 0; t < n; ++t)
                if (t != i) args[w++] = ranks[t];
            Vec v = theta.eval_basis(std::span<const int>(args.data(), n - 1), basis);
            add_scaled(acc, si, b.bracket(fcol[xy[i].first], fcol[xy[i].second], v));
        }
        // boundary terms feeding theta's value into mu
        {
            const Rational sn = ((n - 1) % 2 == 0) ? 1 : -1;
            std::span<const int> prefix(ranks.data(), n - 1);
            Vec v1 = theta.eval_basis(prefix, xy[n - 1].first);
            add_scaled(acc, sn, b.bracket(v1, fcol[xy[n - 1].second], fcol[basis]));
            Vec v2 = theta.eval_basis(prefix, xy[n - 1].second);
            add_scaled(acc, sn, b.bracket(fcol[xy[n - 1].first], v2, fcol[basis]));
        }
        for (int c = 0; c < e; ++c) out.entry(pos, c) = std::move(acc[c]);
    }
    return out;
}

/// Coboundary of the representation complex on C^n(g, V), n >= 1, with the
/// action terms supplied by rho.
inline Cochain rep_partial(const Cochain& theta, const ThreeLieAlgebra& a, const Representation& rho) {
    const int d = a.dim(), m = rho.module_dim();
    if (theta.src_dim() != d || theta.tgt_dim() != m || rho.algebra_dim() != d)
        throw DimensionMismatch("representation coboundary input does not match the algebra/module pair");
    const int n = theta.degree() + 1;
    PairBasis pairs(d);

    Cochain out(n, d, m, CochainSpace::Hom);
    std::vector<int> ranks;
    int basis;
    std::vector<int> args(n > 0 ? n - 1 : 0);
    for (std::size_t pos = 0; pos < out.position_count(); ++pos) {
        out.decode(pos, ranks, basis);
        std::vector<std::pair<int, int>> xy(n);
        for (int t = 0; t < n; ++t) xy[t] = pairs.unrank(ranks[t]);
        Vec acc(m);

        for (int i = 0; i < n; ++i) {
            const Rational si = (i % 2 == 0) ? -1 : 1;
            for (int j = i + 1; j < n; ++j) {
                int w = 0;
                for (int t = 0; t < n; ++t)
                    if (t != i && t != j) args[w++] = ranks[t];
                for (int t = n - 2; t > j - 1; --t) args[t] = args[t - 1];
                args[j - 1] = 0;
                Wedge2 mod = Wedge2::of_vectors(a.bracket_basis(xy[i].first, xy[i].second, xy[j].first),
                                                basis_vec(d, xy[j].second));
                mod += Wedge2::of_vectors(basis_vec(d, xy[j].first),
                                          a.bracket_basis(xy[i].first, xy[i].second, xy[j].second));
                add_scaled(acc, si, theta.eval_replace(std::span<const int>(args.data(), n - 1), j - 1, mod, basis));
            }
        }
        for (int i = 0; i < n; ++i) {
            const Rational si = (i % 2 == 0) ? -1 : 1;
            int w = 0;
            for (int t = 0; t < n; ++t)
                if (t != i) args[w++] = ranks[t];
            Vec last = a.bracket_basis(xy[i].first, xy[i].second, basis);
            add_scaled(acc, si, theta.eval_last_general(std::span<const int>(args.data(), n - 1), last));
        }
        for (int i = 0; i < n; ++i) {
            const Rational si = (i % 2 == 0) ? 1 : -1;
            int w = 0;
            for (int t = 0; t < n; ++t)
                if (t != i) args[w++] = ranks[t];
            Vec v = theta.eval_basis(std::span<const int>(args.data(), n - 1), basis);
            add_scaled(acc, si, rho.action_by_rank(ranks[i]).apply(v));
        }
        {
            const Rational sn = ((n - 1) % 2 == 0) ? 1 : -1;
            std::span<const int> prefix(ranks.data(), n - 1);
            Vec v1 = theta.eval_basis(prefix, xy[n - 1].first);
            acc = acc + sn * rho.action(xy[n - 1].second, basis).apply(v1);
            Vec v2 = theta.eval_basis(prefix, xy[n - 1].second);
            acc = acc + sn * rho.action(basis, xy[n - 1].first).apply(v2);
        }
        for (int c = 0; c < m; ++c) out.entry(pos, c) = std::move(acc[c]);
    }
    return out;
}

/// Morphism cochain complex descriptor; the map is validated on construction.
struct MorphismComplex {
    ThreeLieAlgebra source, target;
    LinearMap map;

    MorphismComplex(ThreeLieAlgebra src, ThreeLieAlgebra tgt, LinearMap f)
        : source(std::move(src)), target(std::move(tgt)), map(std::move(f)) {
        MorphismReport rep = check_morphism(map, source, target);
        if (!rep.is_morphism)
            throw NotAMorphism("cohomology of a morphism requires a bracket-preserving map");
    }
};

/// Representation cochain complex descriptor.
struct RepresentationComplex {
    ThreeLieAlgebra algebra;
    Representation rho;

    RepresentationComplex(ThreeLieAlgebra alg, Representation r) : algebra(std::move(alg)), rho(std::move(r)) {
        if (rho.algebra_dim() != algebra.dim())
            throw DimensionMismatch("representation does not act for this algebra");
    }
};

inline long long dim_cochain(const MorphismComplex& mc, int n) {
    const long long pd = pair_count(mc.source.dim()), pe = pair_count(mc.target.dim());
    if (n == 0) return pd + pe;
    long long dim = (long long)mc.source.dim() * mc.target.dim();
    for (int i = 0; i < n - 1; ++i) dim *= pd;
    return dim;
}

inline long long dim_cochain(const RepresentationComplex& rc, int n) {
    if (n == 0) return 0;
    const long long pd = pair_count(rc.algebra.dim());
    long long dim = (long long)rc.algebra.dim() * rc.rho.module_dim();
    for (int i = 0; i < n - 1; ++i) dim *= pd;
    return dim;
}

namespace detail {

inline void guard_degree(int out_degree, int max_degree) {
    if (out_degree > max_degree)
        throw DegreeOverflowGuard("cochain degree " + std::to_string(out_degree) +
                                      " exceeds the configured maximum",
                                  out_degree, max_degree);
}

inline void scatter_column(SparseMat& m, const Cochain& image, long long col) {
    const auto& tab = image.table();
    for (std::size_t r = 0; r < tab.size(); ++r)
        if (tab[r] != 0) m.add(int(r), int(col), tab[r]);
}

}  // namespace detail

/// Matrix of delta_n : C^n(f) -> C^{n+1}(f). Column b holds the image of the
/// b-th canonical basis cochain; bases are ordered lexicographically over
/// (pair tuple, source basis, target coordinate).
inline SparseMat assemble_matrix(const MorphismComplex& mc, int n, int max_degree = kDefaultMaxDegree) {
    detail::guard_degree(n + 1, max_degree);
    const int d = mc.source.dim(), e = mc.target.dim();
    SparseMat m(int(dim_cochain(mc, n + 1)), int(dim_cochain(mc, n)));
    if (n == 0) {
        PairBasis pa(d), pb(e);
        for (int r = 0; r < pa.count(); ++r) {
            Cochain img = morphism_delta0(Wedge2::basis(d, r), Wedge2(e), mc.map, mc.source, mc.target);
            detail::scatter_column(m, img, r);
        }
        for (int r = 0; r < pb.count(); ++r) {
            Cochain img = morphism_delta0(Wedge2(d), Wedge2::basis(e, r), mc.map, mc.source, mc.target);
            detail::scatter_column(m, img, pa.count() + r);
        }
        m.coalesce();
        return m;
    }
    Cochain unitc(n - 1, d, e, CochainSpace::Hom);
    const long long cols = dim_cochain(mc, n);
    std::vector<int> ranks;
    int basis;
    for (long long col = 0; col < cols; ++col) {
        const std::size_t pos = std::size_t(col) / e;
        const int coord = int(col % e);
        unitc.decode(pos, ranks, basis);
        Cochain unit = Cochain::unit(n - 1, d, e, CochainSpace::Hom, ranks, basis, coord);
        Cochain img = morphism_delta(unit, mc.map, mc.source, mc.target);
        detail::scatter_column(m, img, col);
    }
    m.coalesce();
    return m;
}

/// Matrix of partial_n : C^n(g, V) -> C^{n+1}(g, V), n >= 1.
inline SparseMat assemble_matrix(const RepresentationComplex& rc, int n, int max_degree = kDefaultMaxDegree) {
    if (n < 1) throw IndexOutOfRange("representation complex starts at degree 1");
    detail::guard_degree(n + 1, max_degree);
    const int d = rc.algebra.dim(), m0 = rc.rho.module_dim();
    SparseMat m(int(dim_cochain(rc, n + 1)), int(dim_cochain(rc, n)));
    Cochain unitc(n - 1, d, m0, CochainSpace::Hom);
    const long long cols = dim_cochain(rc, n);
    std::vector<int> ranks;
    int basis;
    for (long long col = 0; col < cols; ++col) {
        const std::size_t pos = std::size_t(col) / m0;
        const int coord = int(col % m0);
        unitc.decode(pos, ranks, basis);
        Cochain unit = Cochain::unit(n - 1, d, m0, CochainSpace::Hom, ranks, basis, coord);
        Cochain img = rep_partial(unit, rc.algebra, rc.rho);
        detail::scatter_column(m, img, col);
    }
    m.coalesce();
    return m;
}

struct CohomologyReport {
    int degree = 0;
    long long dim_cochain = 0;
    long long dim_cocycle = 0;
    long long dim_coboundary = 0;
    long long dim_cohomology = 0;
};

inline CohomologyReport cohomology_report(const MorphismComplex& mc, int n, int max_degree = kDefaultMaxDegree) {
    CohomologyReport r;
    r.degree = n;
    r.dim_cochain = dim_cochain(mc, n);
    r.dim_cocycle = r.dim_cochain - assemble_matrix(mc, n, max_degree).rank();
    r.dim_coboundary = (n == 0) ? 0 : assemble_matrix(mc, n - 1, max_degree).rank();
    r.dim_cohomology = r.dim_cocycle - r.dim_coboundary;
    return r;
}

inline CohomologyReport cohomology_report(const RepresentationComplex& rc, int n, int max_degree = kDefaultMaxDegree) {
    CohomologyReport r;
    r.degree = n;
    if (n == 0) return r;  // the complex starts at degree 1
    r.dim_cochain = dim_cochain(rc, n);
    r.dim_cocycle = r.dim_cochain - assemble_matrix(rc, n, max_degree).rank();
    r.dim_coboundary = (n == 1) ? 0 : assemble_matrix(rc, n - 1, max_degree).rank();
    r.dim_cohomology = r.dim_cocycle - r.dim_coboundary;
    return r;
}

/// f^* from the adjoint complex of the target into the morphism complex:
/// every slot is precomposed with f.
inline Cochain pullback(const Cochain& theta, const LinearMap& f) {
    const int d = f.source_dim, e = f.target_dim;
    if (theta.src_dim() != e || theta.tgt_dim() != e)
        throw DimensionMismatch("pullback expects a cochain on the target algebra");
    std::vector<Vec> fcol(d);
    for (int i = 0; i < d; ++i) fcol[i] = f.apply_basis(i);
    const int deg = theta.degree();
    PairBasis pairs(d);
    Cochain out(deg, d, e, CochainSpace::Hom);
    std::vector<int> ranks;
    int basis;
    std::vector<Wedge2> wedges;
    for (std::size_t pos = 0; pos < out.position_count(); ++pos) {
        out.decode(pos, ranks, basis);
        wedges.clear();
        for (int t = 0; t < deg; ++t) {
            auto [i, j] = pairs.unrank(ranks[t]);
            wedges.push_back(Wedge2::of_vectors(fcol[i], fcol[j]));
        }
        Vec v = theta.eval(wedges, fcol[basis]);
        for (int c = 0; c < e; ++c) out.entry(pos, c) = std::move(v[c]);
    }
    return out;
}

/// Bundle-map form of the degree-2 coboundary for a subalgebra H: bracket
/// values are pulled back into H through (1 - s p) before feeding alpha, and
/// alpha's values travel through the section before the final projection.
/// Coincides entrywise with rep_partial for the induced quotient
/// representation.
inline Cochain tilde_partial(const Cochain& alpha, const ThreeLieAlgebra& a, const Subspace& h,
                             const QuotientSplit& split) {
    ClosureReport cl = subspace_closure_check(a, h);
    if (!cl.closed)
        throw NotASubalgebra("tilde coboundary requires a subalgebra", cl.witness, cl.residual);
    const int k = h.dim();
    const int q = split.quotient_dim();
    if (alpha.degree() != 1 || alpha.src_dim() != k || alpha.tgt_dim() != q)
        throw DimensionMismatch("tilde coboundary expects a degree-2 cochain on the subalgebra");
    PairBasis pairs(k);
    std::vector<Vec> u(k);
    for (int i = 0; i < k; ++i) u[i] = h.basis_vector(i);

    // value - s(p(value)), expressed in H coordinates
    auto into_h = [&](const Vec& v) {
        Vec w = v - split.section_of(split.project(v));
        return *h.coords(w);
    };

    Cochain out(2, k, q, CochainSpace::Hom);
    std::vector<int> ranks;
    int basis;
    for (std::size_t pos = 0; pos < out.position_count(); ++pos) {
        out.decode(pos, ranks, basis);
        auto [u1, v1] = pairs.unrank(ranks[0]);
        auto [u2, v2] = pairs.unrank(ranks[1]);
        const int w = basis;
        Vec acc(q);

        Wedge2 mod = Wedge2::of_vectors(into_h(a.bracket(u[u1], u[v1], u[u2])), basis_vec(k, v2));
        mod += Wedge2::of_vectors(basis_vec(k, u2), into_h(a.bracket(u[u1], u[v1], u[v2])));
        {
            const int slot_ranks[1] = {0};
            add_scaled(acc, Rational(-1), alpha.eval_replace(slot_ranks, 0, mod, w));
        }
        {
            const int r2[1] = {ranks[1]};
            add_scaled(acc, Rational(-1), alpha.eval_last_general(r2, into_h(a.bracket(u[u1], u[v1], u[w]))));
            const int r1[1] = {ranks[0]};
            add_scaled(acc, Rational(1), alpha.eval_last_general(r1, into_h(a.bracket(u[u2], u[v2], u[w]))));
        }
        {
            const int r1[1] = {ranks[0]};
            const int r2[1] = {ranks[1]};
            Vec t = a.bracket(u[u1], u[v1], split.section_of(alpha.eval_basis(r2, w)));
            t = t - a.bracket(u[u2], u[v2], split.section_of(alpha.eval_basis(r1, w)));
            t = t - a.bracket(u[v2], u[w], split.section_of(alpha.eval_basis(r1, u2)));
            t = t - a.bracket(u[w], u[u2], split.section_of(alpha.eval_basis(r1, v2)));
            acc = acc + split.project(t);
        }
        for (int c = 0; c < q; ++c) out.entry(pos, c) = std::move(acc[c]);
    }
    return out;
}

/// Comparison of the morphism complex of f with the quotient complex of its
/// graph inside the direct sum, through the explicit degreewise bijection.
struct GraphCorrespondence {
    CohomologyReport morphism_side;
    CohomologyReport subalgebra_side;
    bool xi_bijective = false;
    bool intertwines = false;
};

inline SparseMat graph_xi_matrix(const Mat& pmat, long long positions, int e) {
    const int q = pmat.rows();
    SparseMat xi(int(positions * q), int(positions * e));
    for (long long pos = 0; pos < positions; ++pos)
        for (int b = 0; b < e; ++b)
            for (int c = 0; c < q; ++c)
                if (pmat(c, b) != 0) xi.add(int(pos * q + c), int(pos * e + b), pmat(c, b));
    xi.coalesce();
    return xi;
}

inline GraphCorrespondence graph_correspondence(const LinearMap& f, const ThreeLieAlgebra& a,
                                                const ThreeLieAlgebra& b, int k,
                                                int max_degree = kDefaultMaxDegree) {
    if (k < 1) throw IndexOutOfRange("graph correspondence needs degree k >= 1");
    const int d = a.dim(), e = b.dim();
    MorphismComplex mc(a, b, f);
    ThreeLieAlgebra sum = direct_sum(a, b);
    Mat gb(d + e, d);
    for (int j = 0; j < d; ++j) {
        gb(j, j) = 1;
        for (int i = 0; i < e; ++i) gb(d + i, j) = f.mat(i, j);
    }
    Subspace graph(d + e, std::move(gb));
    QuotientSplit split = quotient_split(graph);
    Representation rho = induced_quotient_rep(sum, graph, split);
    RepresentationComplex rc(restrict_to_subalgebra(sum, graph), rho);

    GraphCorrespondence gc;
    gc.morphism_side = cohomology_report(mc, k, max_degree);
    gc.subalgebra_side = cohomology_report(rc, k, max_degree);

    // [(0, e_b)] in quotient coordinates, one column per target basis vector
    Mat pmat(split.quotient_dim(), e);
    for (int bcol = 0; bcol < e; ++bcol) {
        Vec amb(d + e);
        amb[d + bcol] = 1;
        pmat.set_col(bcol, split.project(amb));
    }
    gc.xi_bijective = (pmat.rank() == e);

    const long long pos_k = dim_cochain(mc, k) / e;
    const long long pos_k1 = dim_cochain(mc, k + 1) / e;
    SparseMat xi_k = graph_xi_matrix(pmat, pos_k, e);
    SparseMat xi_k1 = graph_xi_matrix(pmat, pos_k1, e);
    SparseMat delta_k = assemble_matrix(mc, k, max_degree);
    SparseMat partial_k = assemble_matrix(rc, k, max_degree);
    Mat lhs = (xi_k1 * delta_k).to_dense();
    Mat rhs = (partial_k * xi_k).to_dense();
    gc.intertwines = (lhs == rhs);
    return gc;
}

/// Cohomological hypothesis of the rigidity statement: vanishing first
/// cohomology. A nonzero dimension only means the criterion is inconclusive.
struct RigidityReport {
    CohomologyReport h1;
    bool rigid = false;
};

inline RigidityReport rigidity_verdict(const MorphismComplex& mc, int max_degree = kDefaultMaxDegree) {
    RigidityReport r;
    r.h1 = cohomology_report(mc, 1, max_degree);
    r.rigid = (r.h1.dim_cohomology == 0);
    return r;
}

/// Cohomological hypothesis of the stability statements: vanishing second
/// cohomology, together with the dimension of the first cocycle space (the
/// local manifold dimension when the criterion applies).
struct StabilityReport {
    CohomologyReport h1;
    CohomologyReport h2;
    bool stable = false;
};

inline StabilityReport stability_verdict(const MorphismComplex& mc, int max_degree = kDefaultMaxDegree) {
    StabilityReport r;
    r.h1 = cohomology_report(mc, 1, max_degree);
    r.h2 = cohomology_report(mc, 2, max_degree);
    r.stable = (r.h2.dim_cohomology == 0);
    return r;
}

inline StabilityReport subalgebra_stability_verdict(const ThreeLieAlgebra& a, const Subspace& h,
                                                    int max_degree = kDefaultMaxDegree) {
    QuotientSplit split = quotient_split(h);
    Representation rho = induced_quotient_rep(a, h, split);
    RepresentationComplex rc(restrict_to_subalgebra(a, h), rho);
    StabilityReport r;
    r.h1 = cohomology_report(rc, 1, max_degree);
    r.h2 = cohomology_report(rc, 2, max_degree);
    r.stable = (r.h2.dim_cohomology == 0);
    return r;
}

}  // namespace trilie
