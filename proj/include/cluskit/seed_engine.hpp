#pragma once

// Seeds, seed mutation via the binomial exchange relation, breadth-first
// exploration of the mutation graph with canonical deduplication, and the
// cluster-determines-seed / exchange-uniqueness verifiers.

#include <stdexcept>
#include <utility>
#include <vector>

#include "cluskit/laurent.hpp"
#include "cluskit/quiver.hpp"
#include "cluskit/verify.hpp"

namespace cluskit {

/// Thrown when an exchange division is not exact.  That would contradict the
/// Laurent phenomenon, so it is a fatal invariant breach, never repaired.
struct LaurentPhenomenonBreach : std::runtime_error {
    explicit LaurentPhenomenonBreach(const std::string& what) : std::runtime_error(what) {}
};

struct Seed {
    std::vector<LaurentPoly> cluster;  // ordered; entry i sits at vertex i
    ExchangeMatrix matrix;
};

/// Seed with cluster (x1,...,xn).  B must be acyclic (the standing
/// hypothesis of everything downstream).
Seed initial_seed(const ExchangeMatrix& b);

/// Replaces cluster entry k by (m+ + m-) / x_k where m+- are the column-k
/// exchange monomials, and mutates the matrix.  Involutive.
Seed mutate_seed(const Seed& s, int k);

/// Relabeling-invariant encoding: cluster sorted by the total order on
/// LaurentPoly, matrix permuted along and (under ties) minimized over the
/// permutations fixing the sorted cluster.
struct CanonicalSeed {
    std::vector<LaurentPoly> cluster;
    ExchangeMatrix matrix;

    bool operator==(const CanonicalSeed& o) const {
        return cluster == o.cluster && matrix == o.matrix;
    }
    bool operator<(const CanonicalSeed& o) const;
};

CanonicalSeed canonicalize_seed(const Seed& s);

struct ExploreLimits {
    int max_depth = 8;
    long long max_seeds = 100000;
    long long max_terms = 200000;  // per-variable support guard
};

struct MutationGraph {
    std::vector<CanonicalSeed> seeds;          // sorted canonically
    std::vector<std::pair<int, int>> edges;    // mutation adjacencies, i < j, sorted
    std::vector<LaurentPoly> variables;        // distinct cluster variables, sorted
    int depth_reached = 0;
    bool truncated = false;
    long long mutations_performed = 0;
    long long division_failures = 0;           // nonzero is unreachable: mutation throws
    std::vector<std::string> notable_events;

    int nvars() const { return seeds.empty() ? 0 : seeds.front().matrix.n(); }
    /// Index into variables, or -1.
    int variable_index(const LaurentPoly& v) const;
    /// Clusters as sorted variable-index vectors, one per seed.
    std::vector<std::vector<int>> clusters_as_ids() const;
};

/// BFS from the initial seed, children in vertex order, deduplicated by
/// CanonicalSeed.  Closes on finite type; otherwise a limit trips and the
/// truncation flag is set.  Output is canonically sorted, so it is
/// independent of traversal schedule.
MutationGraph explore(const ExchangeMatrix& b, const ExploreLimits& limits = {});

/// Groups seeds by cluster-as-set; PASS iff every group carries exactly one
/// canonical exchange matrix.
VerifyReport verify_cluster_determines_seed(const MutationGraph& g);

/// Every (n-1)-subset of a cluster must extend to a cluster in exactly 2
/// ways.  Requires a closed graph for a definitive verdict.
VerifyReport verify_exchange_uniqueness(const MutationGraph& g);

/// Every explored variable's reduced-form numerator passes the positivity
/// check and has per-variable minimum exponent 0; coefficients are flagged
/// (not assumed) to be positive.
VerifyReport verify_positivity_pipeline(const MutationGraph& g);

}  // namespace cluskit
