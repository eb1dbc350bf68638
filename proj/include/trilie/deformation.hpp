#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/cochain.hpp"
#include "trilie/cohomology.hpp"
#include "trilie/error.hpp"
#include "trilie/subspace.hpp"

namespace trilie {

/// First-order deformation f + t*alpha of a morphism, with t^2 = 0.
struct Jet1Map {
    LinearMap base;
    LinearMap velocity;

    Jet1Map(LinearMap b, LinearMap v) : base(std::move(b)), velocity(std::move(v)) {
        if (base.source_dim != velocity.source_dim || base.target_dim != velocity.target_dim)
            throw DimensionMismatch("jet base and velocity must share their shape");
    }
};

struct JetDefectEntry {
    int i, j, k;  // 0-based basis triple, i < j < k
    Vec value;
};

struct JetReport {
    bool flat = true;  // all first-order defects vanish
    std::vector<JetDefectEntry> entries;
};

/// t-coefficient of mu(f_t x, f_t y, f_t z) - f_t(pi(x,y,z)) over basis
/// triples; zero exactly when the velocity is a 1-cocycle.
inline JetReport jet_morphism_residual(const Jet1Map& jet, const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    MorphismReport base = check_morphism(jet.base, a, b);
    if (!base.is_morphism) throw BaseNotMorphism("jet base map is not a morphism");
    const int d = a.dim();
    std::vector<Vec> fcol(d), acol(d);
    for (int i = 0; i < d; ++i) {
        fcol[i] = jet.base.apply_basis(i);
        acol[i] = jet.velocity.apply_basis(i);
    }
    JetReport rep;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                Vec v = b.bracket(acol[i], fcol[j], fcol[k]);
                v = v + b.bracket(fcol[i], acol[j], fcol[k]);
                v = v + b.bracket(fcol[i], fcol[j], acol[k]);
                v = v - jet.velocity.apply(a.bracket_basis(i, j, k));
                if (!is_zero(v)) rep.flat = false;
                rep.entries.push_back({i, j, k, std::move(v)});
            }
    return rep;
}

/// Velocity of a flat jet as an element of C^1(f), cross-checked against the
/// assembled coboundary: the direct first-order residual and delta(alpha)
/// must agree entry by entry.
inline Cochain tangent_cocycle(const Jet1Map& jet, const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    JetReport rep = jet_morphism_residual(jet, a, b);
    Cochain alpha = cochain_of_linear_map(jet.velocity);
    Cochain da = morphism_delta(alpha, jet.base, a, b);
    PairBasis pairs(a.dim());
    for (const auto& entry : rep.entries) {
        const int ranks[1] = {pairs.rank(entry.i, entry.j)};
        Vec via_delta = da.eval_basis(ranks, entry.k);
        if (via_delta != entry.value)
            throw TrilieError("first-order residual disagrees with the coboundary route");
    }
    if (!rep.flat) {
        const auto& bad = *std::find_if(rep.entries.begin(), rep.entries.end(),
                                        [](const JetDefectEntry& e) { return !is_zero(e.value); });
        throw NotFirstOrderDeformation("jet velocity is not a 1-cocycle, witness basis triple (" +
                                           std::to_string(bad.i + 1) + "," + std::to_string(bad.j + 1) + "," +
                                           std::to_string(bad.k + 1) + ")",
                                       {bad.i + 1, bad.j + 1, bad.k + 1});
    }
    return alpha;
}

/// Coboundary by which the tangents of two equivalent deformations differ.
inline Cochain gauge_difference(const Wedge2& x_part, const Wedge2& u_part, const LinearMap& f,
                                const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    return morphism_delta0(x_part, u_part, f, a, b);
}

/// First-order deformation of a subalgebra: spanning set u_i + t s(alpha(u_i))
/// with t^2 = 0. The velocity maps H-coordinates to quotient coordinates.
struct Jet1Subspace {
    Subspace h;
    Mat velocity;  // (d-k) x k

    Jet1Subspace(Subspace sub, Mat v) : h(std::move(sub)), velocity(std::move(v)) {
        if (velocity.rows() != h.ambient_dim() - h.dim() || velocity.cols() != h.dim())
            throw DimensionMismatch("subspace jet velocity must map H coordinates to quotient coordinates");
    }
};

/// Reduces the bracket of the deformed spanning set modulo the deformed span
/// and reports the t-coefficient per basis triple; zero exactly when the
/// velocity is a 1-cocycle of the induced quotient representation.
inline JetReport jet_subalgebra_check(const Jet1Subspace& jet, const ThreeLieAlgebra& a) {
    ClosureReport cl = subspace_closure_check(a, jet.h);
    if (!cl.closed) throw NotASubalgebra("jet base subspace is not a subalgebra", cl.witness, cl.residual);
    const Subspace& h = jet.h;
    const int k = h.dim();
    QuotientSplit split = quotient_split(h);
    std::vector<Vec> u(k), su(k);  // basis vectors and their deformed t-parts
    for (int i = 0; i < k; ++i) {
        u[i] = h.basis_vector(i);
        su[i] = split.section_of(jet.velocity.col(i));
    }
    JetReport rep;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                // t-coefficient of the deformed bracket
                Vec t1 = a.bracket(su[i], u[j], u[l]);
                t1 = t1 + a.bracket(u[i], su[j], u[l]);
                t1 = t1 + a.bracket(u[i], u[j], su[l]);
                // base part lies in H; subtract its deformed tail
                Vec base = a.bracket(u[i], u[j], u[l]);
                Vec coords = *h.coords(base);
                for (int t = 0; t < k; ++t)
                    if (coords[t] != 0) t1 = t1 - coords[t] * su[t];
                Vec residual = split.project(t1);
                if (!is_zero(residual)) rep.flat = false;
                rep.entries.push_back({i, j, l, std::move(residual)});
            }
    return rep;
}

}  // namespace trilie
