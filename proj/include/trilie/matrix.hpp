#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trilie/error.hpp"
#include "trilie/rational.hpp"

namespace trilie {

/// Dense matrix of exact rationals. Row reduction divides only by pivot
/// entries, so every intermediate value stays an exact rational in lowest
/// terms.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j) != 0) r(i, j) += v * o(k, j);
                }
            }
        return r;
    }

    friend Mat operator*(const Rational& s, Mat m) {
        for (auto& x : m.a_) x *= s;
        return m;
    }

    Vec apply(const Vec& v) const {
        if (int(v.size()) != cols_) throw DimensionMismatch("matrix apply shape mismatch");
        Vec r(rows_);
        for (int j = 0; j < cols_; ++j) {
            if (v[j] == 0) continue;
            for (int i = 0; i < rows_; ++i) r[i] += (*this)(i, j) * v[j];
        }
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Vec col(int j) const {
        Vec v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(int j, const Vec& v) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    static Mat from_cols(int rows, const std::vector<Vec>& cols) {
        Mat m(rows, int(cols.size()));
        for (int j = 0; j < int(cols.size()); ++j) m.set_col(j, cols[j]);
        return m;
    }

    Mat hcat(const Mat& o) const {
        Mat r(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    struct Echelon;

    /// Reduced row echelon form. Pivots are the first nonzero entry of each
    /// remaining row scanned column by column, so the result is deterministic.
    Echelon reduced_echelon() const;

    int rank() const;

    /// Columns spanning the null space, in the standard rref parameterisation
    /// (one column per free variable, ordered by free-column index).
    Mat kernel_basis() const;

    /// One solution of (*this) x = b, or nullopt when inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

    /// True when b lies in the column span.
    bool contains_in_span(const Vec& b) const { return solve(b).has_value(); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Mat::Echelon {
    Mat rref;
    std::vector<int> pivot_cols;
    int rank = 0;
};

inline Mat::Echelon Mat::reduced_echelon() const {
    Echelon e{*this, {}, 0};
    Mat& m = e.rref;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int i = row; i < rows_; ++i)
            if (m(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (int j = col; j < cols_; ++j) m(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (int j = col; j < cols_; ++j) m(i, j) -= f * m(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rank = row;
    return e;
}

inline int Mat::rank() const { return reduced_echelon().rank; }

inline Mat Mat::kernel_basis() const {
    Echelon e = reduced_echelon();
    std::vector<int> free_cols;
    {
        std::size_t t = 0;
        for (int c = 0; c < cols_; ++c) {
            if (t < e.pivot_cols.size() && e.pivot_cols[t] == c)
                ++t;
            else
                free_cols.push_back(c);
        }
    }
    Mat k(cols_, int(free_cols.size()));
    for (int j = 0; j < int(free_cols.size()); ++j) {
        int fc = free_cols[j];
        k(fc, j) = 1;
        for (int pi = 0; pi < int(e.pivot_cols.size()); ++pi) k(e.pivot_cols[pi], j) = -e.rref(pi, fc);
    }
    return k;
}

inline std::optional<Vec> Mat::solve(const Vec& b) const {
    if (int(b.size()) != rows_) throw DimensionMismatch("solve rhs shape mismatch");
    Mat aug = hcat(Mat::from_cols(rows_, {b}));
    Echelon e = aug.reduced_echelon();
    for (int c : e.pivot_cols)
        if (c == cols_) return std::nullopt;
    Vec x(cols_);
    for (int pi = 0; pi < int(e.pivot_cols.size()); ++pi) x[e.pivot_cols[pi]] = e.rref(pi, cols_);
    return x;
}

/// Sparse matrix in triplet form; assembled coboundary operators live here
/// since most entries vanish. Rank uses the same pivot-division elimination
/// as Mat but on compressed rows.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, Rational v) {
        if (v == 0) return;
        trip_.push_back({r, c, std::move(v)});
        coalesced_ = false;
    }

    void coalesce() const {
        if (coalesced_) return;
        std::sort(trip_.begin(), trip_.end(), [](const Entry& a, const Entry& b) {
            return a.r != b.r ? a.r < b.r : a.c < b.c;
        });
        std::vector<Entry> out;
        out.reserve(trip_.size());
        for (auto& e : trip_) {
            if (!out.empty() && out.back().r == e.r && out.back().c == e.c)
                out.back().v += e.v;
            else
                out.push_back(e);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Entry& e) { return e.v == 0; }), out.end());
        trip_ = std::move(out);
        coalesced_ = true;
    }

    std::size_t nonzero_count() const {
        coalesce();
        return trip_.size();
    }

    bool is_zero() const { return nonzero_count() == 0; }

    Mat to_dense() const {
        coalesce();
        Mat m(rows_, cols_);
        for (const auto& e : trip_) m(e.r, e.c) += e.v;
        return m;
    }

    SparseMat operator*(const SparseMat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("sparse product shape mismatch");
        coalesce();
        o.coalesce();
        // row index of the right factor
        std::vector<std::vector<std::pair<int, Rational>>> right(o.rows_);
        for (const auto& e : o.trip_) right[e.r].push_back({e.c, e.v});
        SparseMat r(rows_, o.cols_);
        for (const auto& e : trip_)
            for (const auto& [c, v] : right[e.c]) r.add(e.r, c, e.v * v);
        r.coalesce();
        return r;
    }

    int rank() const {
        coalesce();
        using Row = std::vector<std::pair<int, Rational>>;  // sorted by col
        std::vector<Row> rows(rows_);
        for (const auto& e : trip_) rows[e.r].push_back({e.c, e.v});
        std::vector<Row> live;
        for (auto& r : rows)
            if (!r.empty()) live.push_back(std::move(r));
        int rank = 0;
        while (!live.empty()) {
            // deterministic pivot: smallest leading column, then sparsest row
            int best = 0;
            for (int i = 1; i < int(live.size()); ++i) {
                if (live[i][0].first < live[best][0].first ||
                    (live[i][0].first == live[best][0].first && live[i].size() < live[best].size()))
                    best = i;
            }
            Row piv = std::move(live[best]);
            live.erase(live.begin() + best);
            ++rank;
            const int pc = piv[0].first;
            const Rational inv = 1 / piv[0].second;
            for (auto& [c, v] : piv) v *= inv;
            std::vector<Row> next;
            next.reserve(live.size());
            for (auto& r : live) {
                if (r[0].first != pc) {
                    next.push_back(std::move(r));
                    continue;
                }
                Row merged = axpy(r, -r[0].second, piv);
                if (!merged.empty()) next.push_back(std::move(merged));
            }
            live = std::move(next);
        }
        return rank;
    }

private:
    struct Entry {
        int r, c;
        Rational v;
    };

    // r + s*piv over sorted sparse rows
    static std::vector<std::pair<int, Rational>> axpy(const std::vector<std::pair<int, Rational>>& r,
                                                      const Rational& s,
                                                      const std::vector<std::pair<int, Rational>>& piv) {
        std::vector<std::pair<int, Rational>> out;
        out.reserve(r.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < piv.size()) {
            if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || piv[j].first < r[i].first) {
                out.push_back({piv[j].first, s * piv[j].second});
                ++j;
            } else {
                Rational v = r[i].second + s * piv[j].second;
                if (v != 0) out.push_back({r[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }), out.end());
        return out;
    }

    int rows_ = 0, cols_ = 0;
    mutable std::vector<Entry> trip_;
    mutable bool coalesced_ = true;
};

}  // namespace trilie
