#include "cluskit/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace cluskit {

ExchangeMatrix::ExchangeMatrix(int n, const std::vector<std::vector<int>>& rows) : n_(n) {
    if (n <= 0) throw std::invalid_argument("exchange matrix needs at least one vertex");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("exchange matrix row count does not match n");
    b_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("exchange matrix row " + std::to_string(i) +
                                        " has wrong length");
        for (int j = 0; j < n; ++j) b_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
    }
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0)
            throw std::invalid_argument("exchange matrix has nonzero diagonal at vertex " +
                                        std::to_string(i));
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != -at(j, i))
                throw std::invalid_argument("exchange matrix not skew-symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

ExchangeMatrix ExchangeMatrix::mutated(int k) const {
    if (k < 0 || k >= n_) throw std::invalid_argument("mutation vertex out of range");
    std::vector<int> nb(b_.size());
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            int v;
            if (i == k || j == k) {
                v = -at(i, j);
            } else {
                // |b_ik|*b_kj + b_ik*|b_kj| is 0 or twice the product, so /2 is exact
                v = at(i, j) + (std::abs(at(i, k)) * at(k, j) + at(i, k) * std::abs(at(k, j))) / 2;
            }
            nb[static_cast<std::size_t>(i) * n_ + j] = v;
        }
    }
    return ExchangeMatrix(n_, std::move(nb));
}

ExchangeMatrix ExchangeMatrix::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation length does not match n");
    std::vector<int> nb(b_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            nb[static_cast<std::size_t>(i) * n_ + j] = at(perm[i], perm[j]);
    return ExchangeMatrix(n_, std::move(nb));
}

std::vector<std::vector<int>> ExchangeMatrix::rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
    return out;
}

bool is_acyclic(const ExchangeMatrix& b) {
    const int n = b.n();
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.at(i, j) > 0) ++indeg[j];
    std::queue<int> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    int seen = 0;
    while (!ready.empty()) {
        int i = ready.front();
        ready.pop();
        ++seen;
        for (int j = 0; j < n; ++j)
            if (b.at(i, j) > 0 && --indeg[j] == 0) ready.push(j);
    }
    return seen == n;
}

CanonicalQuiver canonical_form(const ExchangeMatrix& b) {
    const int n = b.n();
    if (n > kCanonicalFormMaxVertices)
        throw std::length_error("canonical_form: vertex count exceeds brute-force bound");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm = perm;
    ExchangeMatrix best = b;
    while (std::next_permutation(perm.begin(), perm.end())) {
        ExchangeMatrix cand = b.permuted(perm);
        if (cand < best) {
            best = cand;
            best_perm = perm;
        }
    }
    return CanonicalQuiver{best, best_perm};
}

std::optional<DynkinType> classify_dynkin(const ExchangeMatrix& b) {
    const int n = b.n();
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int mult = std::abs(b.at(i, j));
            if (mult == 0) continue;
            if (mult > 1) return std::nullopt;  // simply laced only
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
        }
    }
    if (edges != n - 1) return std::nullopt;  // a tree has exactly n-1 edges

    // connectivity
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    if (count != n) return std::nullopt;

    int trivalent = -1;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() >= 4) return std::nullopt;
        if (adj[i].size() == 3) {
            if (trivalent >= 0) return std::nullopt;
            trivalent = i;
        }
    }
    if (trivalent < 0) return DynkinType{'A', n};  // path (n = 1 included)

    // branch lengths from the unique trivalent vertex
    std::vector<int> lengths;
    for (int start : adj[trivalent]) {
        int len = 1, prev = trivalent, cur = start;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths[0] == 1 && lengths[1] == 1) return DynkinType{'D', n};
    if (lengths[0] == 1 && lengths[1] == 2 && lengths[2] >= 2 && lengths[2] <= 4)
        return DynkinType{'E', n};
    return std::nullopt;
}

}  // namespace cluskit
