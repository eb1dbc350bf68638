#pragma once

#include <utility>
#include <vector>

#include "trilie/error.hpp"

namespace trilie {

/// Canonical basis of the second exterior power of a d-dimensional space:
/// wedges e_i ^ e_j with 0 <= i < j < d, enumerated lexicographically.
class PairBasis {
public:
    explicit PairBasis(int dim) : dim_(dim) {
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) pairs_.push_back({i, j});
    }

    int dim() const { return dim_; }
    int count() const { return int(pairs_.size()); }

    int rank(int i, int j) const {
        // i < j required
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

    /// Canonical rank plus the sign picked up by reordering; zero coefficient
    /// is signalled by sign 0 when i == j.
    struct Ranked {
        int rank;
        int sign;
    };
    Ranked rank_signed(int i, int j) const {
        if (i == j) return {0, 0};
        if (i < j) return {rank(i, j), 1};
        return {rank(j, i), -1};
    }

    std::pair<int, int> unrank(int r) const { return pairs_[r]; }

private:
    int dim_;
    std::vector<std::pair<int, int>> pairs_;
};

inline int pair_count(int d) { return d * (d - 1) / 2; }

}  // namespace trilie
