#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/cochain.hpp"
#include "trilie/error.hpp"
#include "trilie/pair_basis.hpp"

namespace trilie {

inline constexpr int kDefaultMaxDegree = 4;

/// Enumerates all (a,b)-shuffles of {0..a+b-1}: the first block ascending,
/// the complement ascending. Sign is the ordinary permutation signature of
/// the arrangement [first block, second block].
template <class Fn>
void for_each_shuffle(int a, int b, Fn&& fn) {
    const int n = a + b;
    std::vector<int> first(a);
    for (int i = 0; i < a; ++i) first[i] = i;
    std::vector<int> second(b);
    while (true) {
        int inv = 0;
        {
            std::size_t t = 0;
            second.clear();
            for (int v = 0; v < n; ++v) {
                if (t < first.size() && first[t] == v)
                    ++t;
                else
                    second.push_back(v);
            }
            for (int i = 0; i < a; ++i) inv += first[i] - i;
        }
        fn(std::span<const int>(first), std::span<const int>(second), (inv % 2 == 0) ? 1 : -1);
        // next lexicographic a-combination of {0..n-1}
        int i = a - 1;
        while (i >= 0 && first[i] == n - a + i) --i;
        if (i < 0) break;
        ++first[i];
        for (int j = i + 1; j < a; ++j) first[j] = first[j - 1] + 1;
    }
}

/// The bracket tensor as a degree-1 endomorphism-valued cochain.
inline Cochain structure_cochain(const BracketTensor& t) {
    const int d = t.dim();
    Cochain c(1, d, d, CochainSpace::Endo);
    PairBasis pb(d);
    for (int r = 0; r < pb.count(); ++r) {
        auto [i, j] = pb.unrank(r);
        for (int k = 0; k < d; ++k) {
            const int ranks[1] = {r};
            std::size_t p = c.flat(ranks, k);
            for (int l = 0; l < d; ++l) c.entry(p, l) = t.at(i, j, k, l);
        }
    }
    return c;
}

/// A linear map as a degree-0 target-valued cochain.
inline Cochain cochain_of_linear_map(const LinearMap& f) {
    Cochain c(0, f.source_dim, f.target_dim, CochainSpace::Hom);
    for (int b = 0; b < f.source_dim; ++b) {
        std::size_t p = c.flat({}, b);
        for (int l = 0; l < f.target_dim; ++l) c.entry(p, l) = f.mat(l, b);
    }
    return c;
}

namespace detail {

inline Wedge2 wedge_vec_basis(const Vec& v, int j) {
    Vec e(v.size());
    e[j] = 1;
    return Wedge2::of_vectors(v, e);
}

inline Wedge2 wedge_basis_vec(int i, const Vec& v) {
    Vec e(v.size());
    e[i] = 1;
    return Wedge2::of_vectors(e, v);
}

}  // namespace detail

/// Pointwise Nijenhuis-Richardson product (P o Q) evaluated at a canonical
/// basis tuple. Both factors must take values in their common carrier; the
/// three shuffle sums follow the graded-Lie product on 3-Lie cochains.
template <class CP, class CQ>
Vec nr_product_at(const CP& P, const CQ& Q, std::span<const int> ranks, int basis) {
    const int p = P.degree(), q = Q.degree();
    const int n = p + q;
    const int D = P.src_dim();
    PairBasis pb(D);
    Vec out(D);

    std::vector<std::pair<int, int>> xy(n);
    for (int t = 0; t < n; ++t) xy[t] = pb.unrank(ranks[t]);

    std::vector<int> args(p > 0 ? p : 1);
    // sums over insertions into a wedge slot of P
    for (int k = 1; k <= p; ++k) {
        const int head = k + q - 1;             // wedge indices 0..head-1 get shuffled
        const int mod = head;                   // 0-based index of the wedge supplying x,y
        const int base = ((k - 1) * q) % 2 ? -1 : 1;
        for_each_shuffle(k - 1, q, [&](std::span<const int> pblk, std::span<const int> qblk, int sgn) {
            std::vector<int> qranks(q);
            for (int t = 0; t < q; ++t) qranks[t] = ranks[qblk[t]];
            for (int t = 0; t < k - 1; ++t) args[t] = ranks[pblk[t]];
            args[k - 1] = 0;  // replaced slot
            for (int t = mod + 1; t < n; ++t) args[k + (t - mod - 1)] = ranks[t];
            std::span<const int> pargs(args.data(), p);

            Vec qx = Q.eval_basis(qranks, xy[mod].first);
            Wedge2 w1 = detail::wedge_vec_basis(qx, xy[mod].second);
            Vec v1 = P.eval_replace(pargs, k - 1, w1, basis);
            Vec qy = Q.eval_basis(qranks, xy[mod].second);
            Wedge2 w2 = detail::wedge_basis_vec(xy[mod].first, qy);
            Vec v2 = P.eval_replace(pargs, k - 1, w2, basis);

            add_scaled(out, Rational(base * sgn), v1);
            add_scaled(out, Rational(base * sgn), v2);
        });
    }
    // sum over insertion into the last slot of P
    {
        const int base = (p * q) % 2 ? -1 : 1;
        for_each_shuffle(p, q, [&](std::span<const int> pblk, std::span<const int> qblk, int sgn) {
            std::vector<int> qranks(q);
            for (int t = 0; t < q; ++t) qranks[t] = ranks[qblk[t]];
            Vec qv = Q.eval_basis(qranks, basis);
            std::vector<int> pranks(p);
            for (int t = 0; t < p; ++t) pranks[t] = ranks[pblk[t]];
            Vec v = P.eval_last_general(pranks, qv);
            add_scaled(out, Rational(base * sgn), v);
        });
    }
    return out;
}

/// Materialised NR product P o Q of carrier-valued cochains.
template <class CP, class CQ>
Cochain nr_product(const CP& P, const CQ& Q, int max_degree = kDefaultMaxDegree) {
    if (P.src_dim() != Q.src_dim()) throw DimensionMismatch("NR product factors live on different carriers");
    const int n = P.degree() + Q.degree();
    if (n > max_degree)
        throw DegreeOverflowGuard("NR product output degree " + std::to_string(n) + " exceeds the configured maximum",
                                  n, max_degree);
    const int D = P.src_dim();
    Cochain out(n, D, D, CochainSpace::Endo);
    std::vector<int> ranks;
    int basis;
    for (std::size_t pos = 0; pos < out.position_count(); ++pos) {
        out.decode(pos, ranks, basis);
        Vec v = nr_product_at(P, Q, ranks, basis);
        for (int c = 0; c < D; ++c) out.entry(pos, c) = std::move(v[c]);
    }
    return out;
}

/// [P,Q] = P o Q - (-1)^{pq} Q o P.
template <class CP, class CQ>
Cochain nr_bracket(const CP& P, const CQ& Q, int max_degree = kDefaultMaxDegree) {
    Cochain pq = nr_product(P, Q, max_degree);
    Cochain qp = nr_product(Q, P, max_degree);
    int sign = (P.degree() * Q.degree()) % 2 ? -1 : 1;
    if (sign == 1)
        pq -= qp;
    else
        pq += qp;
    return pq;
}

/// Half of [pi, pi]; vanishes exactly when the tensor is a 3-Lie bracket.
inline Cochain structure_mc_residual(const BracketTensor& t) {
    Cochain pi = structure_cochain(t);
    Cochain r = nr_bracket(pi, pi);
    r *= Rational(1, 2);
    return r;
}

/// The direct-sum carrier g (+) h with both promoted brackets.
inline Cochain promote_structures(const BracketTensor& a, const BracketTensor& b) {
    const int da = a.dim(), db = b.dim();
    const int D = da + db;
    Cochain c(1, D, D, CochainSpace::Endo);
    PairBasis pb(D);
    for (int r = 0; r < pb.count(); ++r) {
        auto [i, j] = pb.unrank(r);
        const int ranks[1] = {r};
        if (i < da && j < da) {
            for (int k = 0; k < da; ++k) {
                std::size_t p = c.flat(ranks, k);
                for (int l = 0; l < da; ++l) c.entry(p, l) = a.at(i, j, k, l);
            }
        } else if (i >= da && j >= da) {
            for (int k = 0; k < db; ++k) {
                std::size_t p = c.flat(ranks, da + k);
                for (int l = 0; l < db; ++l) c.entry(p, da + l) = b.at(i - da, j - da, k, l);
            }
        }
    }
    return c;
}

/// Only the target bracket, promoted to the direct-sum carrier.
inline Cochain promote_target_structure(const BracketTensor& b, int da) {
    const int db = b.dim();
    const int D = da + db;
    Cochain c(1, D, D, CochainSpace::Endo);
    PairBasis pb(D);
    for (int r = 0; r < pb.count(); ++r) {
        auto [i, j] = pb.unrank(r);
        if (i < da || j < da) continue;
        const int ranks[1] = {r};
        for (int k = 0; k < db; ++k) {
            std::size_t p = c.flat(ranks, da + k);
            for (int l = 0; l < db; ++l) c.entry(p, da + l) = b.at(i - da, j - da, k, l);
        }
    }
    return c;
}

/// View of a target-valued cochain as a carrier-valued cochain on the direct
/// sum g (+) h: wedge slots keep only their g-parts and values land in the
/// h-block. Evaluation reads the underlying table, nothing is materialised.
class EmbeddedHom {
public:
    EmbeddedHom(const Cochain& theta, int src_dim, int tgt_dim)
        : theta_(&theta), da_(src_dim), db_(tgt_dim), dpairs_(da_ + db_), gpairs_(da_) {
        if (theta.src_dim() != da_ || theta.tgt_dim() != db_)
            throw DimensionMismatch("embedded cochain dims do not match the carriers");
        gmap_.assign(dpairs_.count(), -1);
        for (int r = 0; r < dpairs_.count(); ++r) {
            auto [i, j] = dpairs_.unrank(r);
            if (i < da_ && j < da_) gmap_[r] = gpairs_.rank(i, j);
        }
    }

    int degree() const { return theta_->degree(); }
    int src_dim() const { return da_ + db_; }
    int tgt_dim() const { return da_ + db_; }

    Vec eval_basis(std::span<const int> ranks, int basis) const {
        Vec out(da_ + db_);
        if (basis >= da_) return out;
        std::vector<int> g(ranks.size());
        for (std::size_t t = 0; t < ranks.size(); ++t) {
            if (gmap_[ranks[t]] < 0) return out;
            g[t] = gmap_[ranks[t]];
        }
        place(theta_->eval_basis(g, basis), out);
        return out;
    }

    Vec eval_replace(std::span<const int> ranks, int slot, const Wedge2& w, int basis) const {
        Vec out(da_ + db_);
        if (basis >= da_) return out;
        std::vector<int> g(ranks.size());
        for (int t = 0; t < int(ranks.size()); ++t) {
            if (t == slot) continue;
            if (gmap_[ranks[t]] < 0) return out;
            g[t] = gmap_[ranks[t]];
        }
        Wedge2 wg(da_);
        bool any = false;
        for (int r = 0; r < w.pair_count(); ++r) {
            if (w[r] == 0 || gmap_[r] < 0) continue;
            wg[gmap_[r]] = w[r];
            any = true;
        }
        if (!any) return out;
        place(theta_->eval_replace(g, slot, wg, basis), out);
        return out;
    }

    Vec eval_last_general(std::span<const int> ranks, const Vec& last) const {
        Vec out(da_ + db_);
        std::vector<int> g(ranks.size());
        for (std::size_t t = 0; t < ranks.size(); ++t) {
            if (gmap_[ranks[t]] < 0) return out;
            g[t] = gmap_[ranks[t]];
        }
        Vec gl(da_);
        bool any = false;
        for (int i = 0; i < da_; ++i) {
            gl[i] = last[i];
            if (gl[i] != 0) any = true;
        }
        if (!any) return out;
        place(theta_->eval_last_general(g, gl), out);
        return out;
    }

private:
    void place(Vec&& hval, Vec& out) const {
        for (int l = 0; l < db_; ++l) out[da_ + l] = std::move(hval[l]);
    }

    const Cochain* theta_;
    int da_, db_;
    PairBasis dpairs_, gpairs_;
    std::vector<int> gmap_;
};

namespace detail {

inline void require_hom_shape(const Cochain& c, int da, int db, const char* what) {
    if (c.src_dim() != da || c.tgt_dim() != db)
        throw DimensionMismatch(std::string(what) + ": cochain dims do not match the algebra pair");
}

/// Projects the NR bracket [L, R] back onto target-valued cochains by
/// evaluating only at source-carrier tuples and keeping the target block.
template <class CL, class CR>
Cochain bracket_projected(const CL& lhs, const CR& rhs, int da, int db, int max_degree) {
    const int n = lhs.degree() + rhs.degree();
    if (n > max_degree)
        throw DegreeOverflowGuard("derived bracket output degree " + std::to_string(n) +
                                      " exceeds the configured maximum",
                                  n, max_degree);
    const int sign = (lhs.degree() * rhs.degree()) % 2 ? -1 : 1;
    PairBasis dpairs(da + db), gpairs(da);
    Cochain out(n, da, db, CochainSpace::Hom);
    std::vector<int> granks;
    int basis;
    std::vector<int> dranks(n);
    for (std::size_t pos = 0; pos < out.position_count(); ++pos) {
        out.decode(pos, granks, basis);
        for (int t = 0; t < n; ++t) {
            auto [i, j] = gpairs.unrank(granks[t]);
            dranks[t] = dpairs.rank(i, j);
        }
        Vec v = nr_product_at(lhs, rhs, dranks, basis);
        Vec w = nr_product_at(rhs, lhs, dranks, basis);
        for (int c = 0; c < db; ++c) out.entry(pos, c) = v[da + c] - Rational(sign) * w[da + c];
    }
    return out;
}

}  // namespace detail

/// l_1(theta) = [pi + mu, theta] computed on the direct-sum carrier and
/// projected back to target-valued cochains.
inline Cochain derived_l1(const Cochain& theta, const ThreeLieAlgebra& a, const ThreeLieAlgebra& b,
                          int max_degree = kDefaultMaxDegree) {
    detail::require_hom_shape(theta, a.dim(), b.dim(), "derived_l1");
    Cochain delta = promote_structures(a.tensor(), b.tensor());
    EmbeddedHom e(theta, a.dim(), b.dim());
    return detail::bracket_projected(delta, e, a.dim(), b.dim(), max_degree);
}

/// l_3(a1, a2, a3) = [[[mu, a1], a2], a3], projected. Symmetric in its
/// arguments up to the Koszul signs of the grading.
inline Cochain derived_l3(const Cochain& a1, const Cochain& a2, const Cochain& a3, const ThreeLieAlgebra& a,
                          const ThreeLieAlgebra& b, int max_degree = kDefaultMaxDegree) {
    detail::require_hom_shape(a1, a.dim(), b.dim(), "derived_l3");
    detail::require_hom_shape(a2, a.dim(), b.dim(), "derived_l3");
    detail::require_hom_shape(a3, a.dim(), b.dim(), "derived_l3");
    const int out_deg = 1 + a1.degree() + a2.degree() + a3.degree();
    if (out_deg > max_degree)
        throw DegreeOverflowGuard("derived_l3 output degree " + std::to_string(out_deg) +
                                      " exceeds the configured maximum",
                                  out_deg, max_degree);
    Cochain mu = promote_target_structure(b.tensor(), a.dim());
    EmbeddedHom e1(a1, a.dim(), b.dim());
    EmbeddedHom e2(a2, a.dim(), b.dim());
    EmbeddedHom e3(a3, a.dim(), b.dim());
    Cochain b1 = nr_bracket(mu, e1, max_degree);
    Cochain b2 = nr_bracket(b1, e2, max_degree);
    return detail::bracket_projected(b2, e3, a.dim(), b.dim(), max_degree);
}

/// l_1(f) + 1/6 l_3(f,f,f); entrywise equal to the morphism defect
/// mu(f x, f y, f z) - f(pi(x, y, z)) on basis tuples.
inline Cochain morphism_mc_residual(const LinearMap& f, const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    if (f.source_dim != a.dim() || f.target_dim != b.dim())
        throw DimensionMismatch("morphism candidate does not match the algebra pair");
    Cochain tf = cochain_of_linear_map(f);
    Cochain r = derived_l1(tf, a, b);
    Cochain cubic = derived_l3(tf, tf, tf, a, b);
    cubic *= Rational(1, 6);
    r += cubic;
    return r;
}

/// Brackets of the Maurer-Cartan twist around a morphism f. The series
/// terminates: l^f_1 = l_1 + 1/2 l_3(f,f,.), l^f_2 = l_3(f,.,.),
/// l^f_3 = l_3 and everything of arity >= 4 vanishes.
inline Cochain twisted_bracket(int k, const LinearMap& f, std::span<const Cochain> args, const ThreeLieAlgebra& a,
                               const ThreeLieAlgebra& b, int max_degree = kDefaultMaxDegree) {
    if (int(args.size()) != k) throw DimensionMismatch("twisted bracket arity does not match argument count");
    if (k < 1) throw DimensionMismatch("twisted bracket arity must be at least 1");
    Cochain tf = cochain_of_linear_map(f);
    if (k == 1) {
        Cochain r = derived_l1(args[0], a, b, max_degree);
        Cochain s = derived_l3(tf, tf, args[0], a, b, max_degree);
        s *= Rational(1, 2);
        r += s;
        return r;
    }
    if (k == 2) return derived_l3(tf, args[0], args[1], a, b, max_degree);
    if (k == 3) return derived_l3(args[0], args[1], args[2], a, b, max_degree);
    int deg = 1;
    for (const Cochain& c : args) deg += c.degree();
    return Cochain(deg, a.dim(), b.dim(), CochainSpace::Hom);
}

}  // namespace trilie
