#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trilie/error.hpp"
#include "trilie/pair_basis.hpp"
#include "trilie/rational.hpp"

namespace trilie {

/// Element of wedge^2 of a d-dimensional space, as a coefficient vector over
/// the canonical pair basis. Reordered wedges pick up their sign here, so
/// consumers never deal with non-canonical pairs.
class Wedge2 {
public:
    explicit Wedge2(int dim) : dim_(dim), coeffs_(trilie::pair_count(dim)) {}

    static Wedge2 basis(int dim, int rank) {
        Wedge2 w(dim);
        w.coeffs_[rank] = 1;
        return w;
    }

    static Wedge2 of_basis_vectors(int dim, int i, int j) {
        Wedge2 w(dim);
        PairBasis pb(dim);
        auto [r, s] = pb.rank_signed(i, j);
        if (s != 0) w.coeffs_[r] = s;
        return w;
    }

    static Wedge2 of_vectors(const Vec& x, const Vec& y) {
        const int d = int(x.size());
        Wedge2 w(d);
        PairBasis pb(d);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                Rational c = x[i] * y[j] - x[j] * y[i];
                if (c != 0) w.coeffs_[pb.rank(i, j)] = std::move(c);
            }
        return w;
    }

    int dim() const { return dim_; }
    int pair_count() const { return int(coeffs_.size()); }
    const Rational& operator[](int rank) const { return coeffs_[rank]; }
    Rational& operator[](int rank) { return coeffs_[rank]; }
    const Vec& coeffs() const { return coeffs_; }

    Wedge2& operator+=(const Wedge2& o) {
        for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += o.coeffs_[r];
        return *this;
    }

    Wedge2& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    bool is_zero() const { return trilie::is_zero(coeffs_); }

private:
    int dim_;
    Vec coeffs_;
};

/// Whether a cochain's values land back in its own carrier or in a separate
/// target space.
enum class CochainSpace { Endo, Hom };

/// Degree-p multilinear map (wedge^2 g)^p (x) g -> target, held as a dense
/// coefficient table over canonical basis tuples and extended multilinearly
/// by the evaluation helpers. Degree counts wedge slots.
class Cochain {
public:
    Cochain(int degree, int src_dim, int tgt_dim, CochainSpace space)
        : degree_(degree), src_(src_dim), tgt_(tgt_dim), space_(space), pairs_(src_dim) {
        std::size_t n = std::size_t(tgt_);
        for (int i = 0; i < degree_; ++i) n *= pairs_.count();
        n *= src_;
        table_.assign(n, Rational(0));
    }

    static Cochain unit(int degree, int src, int tgt, CochainSpace space, std::span<const int> ranks, int basis,
                        int coord) {
        Cochain c(degree, src, tgt, space);
        c.table_[c.flat(ranks, basis) * c.tgt_ + coord] = 1;
        return c;
    }

    int degree() const { return degree_; }
    int src_dim() const { return src_; }
    int tgt_dim() const { return tgt_; }
    CochainSpace space() const { return space_; }
    const PairBasis& pairs() const { return pairs_; }

    std::size_t position_count() const { return table_.size() / tgt_; }

    /// Lexicographic flat position of (pair-rank tuple, basis index).
    std::size_t flat(std::span<const int> ranks, int basis) const {
        std::size_t p = 0;
        for (int i = 0; i < degree_; ++i) p = p * pairs_.count() + ranks[i];
        return p * src_ + basis;
    }

    void decode(std::size_t pos, std::vector<int>& ranks, int& basis) const {
        basis = int(pos % src_);
        pos /= src_;
        ranks.assign(degree_, 0);
        for (int i = degree_ - 1; i >= 0; --i) {
            ranks[i] = int(pos % pairs_.count());
            pos /= pairs_.count();
        }
    }

    const Rational& entry(std::size_t pos, int coord) const { return table_[pos * tgt_ + coord]; }
    Rational& entry(std::size_t pos, int coord) { return table_[pos * tgt_ + coord]; }
    const std::vector<Rational>& table() const { return table_; }

    Vec eval_basis(std::span<const int> ranks, int basis) const {
        Vec v(tgt_);
        std::size_t p = flat(ranks, basis) * tgt_;
        for (int c = 0; c < tgt_; ++c) v[c] = table_[p + c];
        return v;
    }

    /// Evaluation with the wedge slot `slot` replaced by a general element.
    Vec eval_replace(std::span<const int> ranks, int slot, const Wedge2& w, int basis) const {
        Vec v(tgt_);
        std::vector<int> args(ranks.begin(), ranks.end());
        for (int r = 0; r < w.pair_count(); ++r) {
            if (w[r] == 0) continue;
            args[slot] = r;
            std::size_t p = flat(args, basis) * tgt_;
            for (int c = 0; c < tgt_; ++c) v[c] += w[r] * table_[p + c];
        }
        return v;
    }

    /// Evaluation with a general last slot.
    Vec eval_last_general(std::span<const int> ranks, const Vec& last) const {
        Vec v(tgt_);
        for (int b = 0; b < src_; ++b) {
            if (last[b] == 0) continue;
            std::size_t p = flat(ranks, b) * tgt_;
            for (int c = 0; c < tgt_; ++c) v[c] += last[b] * table_[p + c];
        }
        return v;
    }

    /// Fully general multilinear evaluation.
    Vec eval(std::span<const Wedge2> wedges, const Vec& last) const {
        Vec v(tgt_);
        std::vector<int> args(degree_, 0);
        eval_rec(wedges, last, 0, Rational(1), args, v);
        return v;
    }

    Cochain& operator+=(const Cochain& o) {
        for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += o.table_[i];
        return *this;
    }

    Cochain& operator-=(const Cochain& o) {
        for (std::size_t i = 0; i < table_.size(); ++i) table_[i] -= o.table_[i];
        return *this;
    }

    Cochain& operator*=(const Rational& s) {
        for (auto& x : table_) x *= s;
        return *this;
    }

    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }

    bool operator==(const Cochain& o) const {
        return degree_ == o.degree_ && src_ == o.src_ && tgt_ == o.tgt_ && table_ == o.table_;
    }

    bool is_zero() const { return trilie::is_zero(table_); }

private:
    void eval_rec(std::span<const Wedge2> wedges, const Vec& last, int slot, const Rational& acc,
                  std::vector<int>& args, Vec& out) const {
        if (slot == degree_) {
            for (int b = 0; b < src_; ++b) {
                if (last[b] == 0) continue;
                std::size_t p = flat(args, b) * tgt_;
                for (int c = 0; c < tgt_; ++c) out[c] += acc * last[b] * table_[p + c];
            }
            return;
        }
        const Wedge2& w = wedges[slot];
        for (int r = 0; r < w.pair_count(); ++r) {
            if (w[r] == 0) continue;
            args[slot] = r;
            eval_rec(wedges, last, slot + 1, acc * w[r], args, out);
        }
    }

    int degree_, src_, tgt_;
    CochainSpace space_;
    PairBasis pairs_;
    std::vector<Rational> table_;
};

}  // namespace trilie
