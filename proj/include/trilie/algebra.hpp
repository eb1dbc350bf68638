#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trilie/error.hpp"
#include "trilie/matrix.hpp"
#include "trilie/rational.hpp"

namespace trilie {

/// One structure constant entry: pi(e_i, e_j, e_k) = value, for i < j < k.
/// Indices are 0-based everywhere inside the library.
struct StructureEntry {
    int i, j, k;
    Vec value;  // length = algebra dimension
};

/// Totally antisymmetric trilinear bracket candidate. Not validated; the
/// fundamental identity is checked when a ThreeLieAlgebra is built from it.
class BracketTensor {
public:
    explicit BracketTensor(int dim) : dim_(dim), c_(std::size_t(dim) * dim * dim * dim) {
        if (dim <= 0) throw IndexOutOfRange("algebra dimension must be positive");
    }

    static BracketTensor from_entries(int dim, const std::vector<StructureEntry>& entries) {
        BracketTensor t(dim);
        for (const auto& e : entries) {
            if (!(0 <= e.i && e.i < e.j && e.j < e.k && e.k < dim))
                throw IndexOutOfRange("structure entry indices must satisfy 0 <= i < j < k < dim, got (" +
                                      std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + "," +
                                      std::to_string(e.k + 1) + ")");
            if (int(e.value.size()) != dim) throw DimensionMismatch("structure entry value has wrong length");
            for (int l = 0; l < dim; ++l) t.set_antisymmetric(e.i, e.j, e.k, l, e.value[l]);
        }
        return t;
    }

    int dim() const { return dim_; }

    const Rational& at(int i, int j, int k, int l) const {
        return c_[((std::size_t(i) * dim_ + j) * dim_ + k) * dim_ + l];
    }

    /// pi(e_i, e_j, e_k) as a coordinate vector.
    Vec bracket_basis(int i, int j, int k) const {
        Vec v(dim_);
        for (int l = 0; l < dim_; ++l) v[l] = at(i, j, k, l);
        return v;
    }

    /// Trilinear evaluation on arbitrary coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y, const Vec& z) const {
        if (int(x.size()) != dim_ || int(y.size()) != dim_ || int(z.size()) != dim_)
            throw DimensionMismatch("bracket arguments must have the algebra dimension");
        Vec v(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                Rational xy = x[i] * y[j];
                for (int k = 0; k < dim_; ++k) {
                    if (z[k] == 0) continue;
                    for (int l = 0; l < dim_; ++l) {
                        const Rational& c = at(i, j, k, l);
                        if (c != 0) v[l] += xy * z[k] * c;
                    }
                }
            }
        }
        return v;
    }

    /// pi(e_i, e_j, w) for a general third slot.
    Vec bracket_partial(int i, int j, const Vec& w) const {
        Vec v(dim_);
        for (int k = 0; k < dim_; ++k) {
            if (w[k] == 0) continue;
            for (int l = 0; l < dim_; ++l) {
                const Rational& c = at(i, j, k, l);
                if (c != 0) v[l] += w[k] * c;
            }
        }
        return v;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

private:
    void set_antisymmetric(int i, int j, int k, int l, const Rational& v) {
        static constexpr int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        static constexpr int sign[6] = {1, 1, 1, -1, -1, -1};
        const int idx[3] = {i, j, k};
        for (int p = 0; p < 6; ++p)
            mut(idx[perm[p][0]], idx[perm[p][1]], idx[perm[p][2]], l) = sign[p] * v;
    }

    Rational& mut(int i, int j, int k, int l) { return c_[((std::size_t(i) * dim_ + j) * dim_ + k) * dim_ + l]; }

    int dim_;
    std::vector<Rational> c_;
};

struct FiReport {
    bool ok = true;
    std::array<int, 5> tuple{};  // first failing basis 5-tuple, 1-based
    Vec residual;
    long long tuples_checked = 0;
};

/// Exhaustive fundamental-identity check over all basis 5-tuples, scanned in
/// lexicographic order:
///   pi(a,b,pi(x,y,z)) - pi(pi(a,b,x),y,z) - pi(x,pi(a,b,y),z) - pi(x,y,pi(a,b,z)).
inline FiReport check_fundamental_identity(const BracketTensor& t) {
    const int d = t.dim();
    FiReport rep;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int z = 0; z < d; ++z) {
                        ++rep.tuples_checked;
                        Vec res = t.bracket_partial(a, b, t.bracket_basis(x, y, z));
                        for (int m = 0; m < d; ++m) {
                            const Rational& r1 = t.at(a, b, x, m);
                            if (r1 != 0)
                                for (int l = 0; l < d; ++l) res[l] -= r1 * t.at(m, y, z, l);
                            const Rational& r2 = t.at(a, b, y, m);
                            if (r2 != 0)
                                for (int l = 0; l < d; ++l) res[l] -= r2 * t.at(x, m, z, l);
                            const Rational& r3 = t.at(a, b, z, m);
                            if (r3 != 0)
                                for (int l = 0; l < d; ++l) res[l] -= r3 * t.at(x, y, m, l);
                        }
                        if (!is_zero(res)) {
                            rep.ok = false;
                            rep.tuple = {a + 1, b + 1, x + 1, y + 1, z + 1};
                            rep.residual = std::move(res);
                            // keep counting so the report carries the full tuple count
                            rep.tuples_checked = (long long)d * d * d * d * d;
                            return rep;
                        }
                    }
    return rep;
}

/// A finite-dimensional 3-Lie algebra: validated bracket tensor.
class ThreeLieAlgebra {
public:
    explicit ThreeLieAlgebra(BracketTensor t) : t_(std::move(t)) {
        FiReport r = check_fundamental_identity(t_);
        if (!r.ok)
            throw FundamentalIdentityViolation(
                "fundamental identity fails at basis tuple (" + std::to_string(r.tuple[0]) + "," +
                    std::to_string(r.tuple[1]) + "," + std::to_string(r.tuple[2]) + "," + std::to_string(r.tuple[3]) +
                    "," + std::to_string(r.tuple[4]) + ")",
                r.tuple, r.residual);
    }

    static ThreeLieAlgebra make(int dim, const std::vector<StructureEntry>& entries) {
        return ThreeLieAlgebra(BracketTensor::from_entries(dim, entries));
    }

    static ThreeLieAlgebra abelian(int dim) { return ThreeLieAlgebra(BracketTensor(dim)); }

    int dim() const { return t_.dim(); }
    const BracketTensor& tensor() const { return t_; }

    Vec bracket(const Vec& x, const Vec& y, const Vec& z) const { return t_.bracket(x, y, z); }
    Vec bracket_basis(int i, int j, int k) const { return t_.bracket_basis(i, j, k); }
    Vec bracket_partial(int i, int j, const Vec& w) const { return t_.bracket_partial(i, j, w); }

private:
    BracketTensor t_;
};

/// Componentwise bracket on the direct sum; mixed brackets vanish.
inline ThreeLieAlgebra direct_sum(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    const int da = a.dim(), db = b.dim();
    std::vector<StructureEntry> entries;
    for (int i = 0; i < da; ++i)
        for (int j = i + 1; j < da; ++j)
            for (int k = j + 1; k < da; ++k) {
                Vec v = a.bracket_basis(i, j, k);
                if (is_zero(v)) continue;
                Vec w(da + db);
                for (int l = 0; l < da; ++l) w[l] = v[l];
                entries.push_back({i, j, k, std::move(w)});
            }
    for (int i = 0; i < db; ++i)
        for (int j = i + 1; j < db; ++j)
            for (int k = j + 1; k < db; ++k) {
                Vec v = b.bracket_basis(i, j, k);
                if (is_zero(v)) continue;
                Vec w(da + db);
                for (int l = 0; l < db; ++l) w[da + l] = v[l];
                entries.push_back({da + i, da + j, da + k, std::move(w)});
            }
    return ThreeLieAlgebra::make(da + db, entries);
}

/// Linear map between algebra carriers; column j is the image of e_j.
struct LinearMap {
    int source_dim = 0;
    int target_dim = 0;
    Mat mat;

    LinearMap() = default;
    LinearMap(int src, int tgt, Mat m) : source_dim(src), target_dim(tgt), mat(std::move(m)) {
        if (mat.rows() != target_dim || mat.cols() != source_dim)
            throw DimensionMismatch("linear map matrix shape does not match declared dimensions");
    }

    static LinearMap identity(int dim) { return LinearMap(dim, dim, Mat::identity(dim)); }
    static LinearMap zero(int src, int tgt) { return LinearMap(src, tgt, Mat(tgt, src)); }

    Vec apply(const Vec& v) const { return mat.apply(v); }
    Vec apply_basis(int j) const { return mat.col(j); }
};

struct MorphismDefect {
    int i, j, k;  // 0-based basis triple, i < j < k
    Vec value;    // mu(f e_i, f e_j, f e_k) - f(pi(e_i, e_j, e_k))
};

struct MorphismReport {
    bool is_morphism = true;
    std::vector<MorphismDefect> defects;  // all triples i < j < k, in order
};

inline MorphismReport check_morphism(const LinearMap& f, const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    if (f.source_dim != a.dim() || f.target_dim != b.dim())
        throw DimensionMismatch("morphism candidate does not map the source carrier to the target carrier");
    MorphismReport rep;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            for (int k = j + 1; k < a.dim(); ++k) {
                Vec lhs = b.bracket(f.apply_basis(i), f.apply_basis(j), f.apply_basis(k));
                Vec rhs = f.apply(a.bracket_basis(i, j, k));
                Vec defect = lhs - rhs;
                if (!is_zero(defect)) rep.is_morphism = false;
                rep.defects.push_back({i, j, k, std::move(defect)});
            }
    return rep;
}

}  // namespace trilie
