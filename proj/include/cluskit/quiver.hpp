#pragma once

// Skew-symmetric exchange matrices: mutation, acyclicity, canonical forms up
// to vertex permutation, and simply laced Dynkin classification.

#include <optional>
#include <string>
#include <vector>

namespace cluskit {

/// n x n skew-symmetric integer matrix encoding a quiver with no loops or
/// 2-cycles.  b(i,j) > 0 means b(i,j) arrows i -> j.
class ExchangeMatrix {
public:
    ExchangeMatrix(int n, const std::vector<std::vector<int>>& rows);

    int n() const { return n_; }
    int at(int i, int j) const { return b_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Fomin-Zelevinsky matrix mutation at vertex k.
    ExchangeMatrix mutated(int k) const;

    /// c(i,j) = b(perm[i], perm[j]); perm[i] is the original index placed at i.
    ExchangeMatrix permuted(const std::vector<int>& perm) const;

    std::vector<std::vector<int>> rows() const;

    bool operator==(const ExchangeMatrix& o) const { return n_ == o.n_ && b_ == o.b_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }
    bool operator<(const ExchangeMatrix& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return b_ < o.b_;  // row-major flattening
    }

private:
    ExchangeMatrix(int n, std::vector<int> flat) : n_(n), b_(std::move(flat)) {}

    int n_;
    std::vector<int> b_;
};

/// True iff the digraph with an edge i -> j whenever b(i,j) > 0 has no
/// oriented cycle.
bool is_acyclic(const ExchangeMatrix& b);

struct CanonicalQuiver {
    ExchangeMatrix matrix;
    std::vector<int> perm;  // one permutation achieving the canonical form
};

/// Lexicographically minimal matrix over all simultaneous row/column
/// permutations (brute force; n <= 10).
CanonicalQuiver canonical_form(const ExchangeMatrix& b);

inline constexpr int kCanonicalFormMaxVertices = 10;

struct DynkinType {
    char family;  // 'A', 'D' or 'E'
    int rank;

    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const DynkinType& o) const {
        return family == o.family && rank == o.rank;
    }
};

/// Simply laced Dynkin classification of the underlying multiplicity graph;
/// nullopt when the graph is not an ADE tree with all multiplicities 1.
std::optional<DynkinType> classify_dynkin(const ExchangeMatrix& b);

}  // namespace cluskit
