#include "cluskit/seed_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace cluskit {

Seed initial_seed(const ExchangeMatrix& b) {
    if (!is_acyclic(b))
        throw std::invalid_argument(
            "initial exchange matrix has an oriented cycle; only acyclic initial seeds are "
            "supported");
    std::vector<LaurentPoly> cluster;
    cluster.reserve(b.n());
    for (int i = 0; i < b.n(); ++i) cluster.push_back(LaurentPoly::variable(b.n(), i));
    return Seed{std::move(cluster), b};
}

namespace {

// m+ and m- of the exchange relation at vertex k, read off column k.
std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int k) {
    const int n = s.matrix.n();
    LaurentPoly pos = LaurentPoly::constant(n, 1);
    LaurentPoly neg = LaurentPoly::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        int bik = s.matrix.at(i, k);
        if (bik > 0)
            pos = pos * s.cluster[i].pow(bik);
        else if (bik < 0)
            neg = neg * s.cluster[i].pow(-bik);
    }
    return {std::move(pos), std::move(neg)};
}

enum class MutateStatus { ok, term_limit };

MutateStatus mutate_guarded(const Seed& s, int k, long long max_terms, Seed* out) {
    const int n = s.matrix.n();
    if (k < 0 || k >= n) throw std::invalid_argument("mutation vertex out of range");
    auto [pos, neg] = exchange_monomials(s, k);
    if (max_terms > 0 && (static_cast<long long>(pos.term_count()) > max_terms ||
                          static_cast<long long>(neg.term_count()) > max_terms))
        return MutateStatus::term_limit;
    LaurentPoly rhs = pos + neg;
    LaurentPoly remainder(n);
    auto quotient = exact_div(rhs, s.cluster[k], &remainder);
    if (!quotient)
        throw LaurentPhenomenonBreach(
            "exchange division not exact at vertex " + std::to_string(k) + ": (" + rhs.str() +
            ") / (" + s.cluster[k].str() + "), remainder " + remainder.str());
    if (max_terms > 0 && static_cast<long long>(quotient->term_count()) > max_terms)
        return MutateStatus::term_limit;
    Seed next{s.cluster, s.matrix.mutated(k)};
    next.cluster[k] = std::move(*quotient);
    *out = std::move(next);
    return MutateStatus::ok;
}

}  // namespace

Seed mutate_seed(const Seed& s, int k) {
    Seed out{{}, s.matrix};
    mutate_guarded(s, k, 0, &out);
    return out;
}

bool CanonicalSeed::operator<(const CanonicalSeed& o) const {
    if (cluster.size() != o.cluster.size()) return cluster.size() < o.cluster.size();
    for (std::size_t i = 0; i < cluster.size(); ++i) {
        int c = compare(cluster[i], o.cluster[i]);
        if (c != 0) return c < 0;
    }
    return matrix < o.matrix;
}

CanonicalSeed canonicalize_seed(const Seed& s) {
    const int n = s.matrix.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return compare(s.cluster[a], s.cluster[b]) < 0;
    });

    std::vector<LaurentPoly> sorted;
    sorted.reserve(n);
    for (int i : order) sorted.push_back(s.cluster[i]);
    ExchangeMatrix best = s.matrix.permuted(order);

    // Tie blocks of equal variables leave the sort permutation ambiguous;
    // minimize the matrix over within-block permutations.  Real clusters
    // have distinct entries, so this loop is normally skipped.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i + 1;
        while (j < n && compare(sorted[i], sorted[j]) == 0) ++j;
        if (j - i > 1) blocks.emplace_back(i, j);
        i = j;
    }
    if (!blocks.empty()) {
        std::vector<int> perm = order;
        bool more = true;
        while (more) {
            more = false;
            for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
                if (std::next_permutation(perm.begin() + it->first, perm.begin() + it->second)) {
                    more = true;
                    break;
                }
                // block rolled over to its first permutation; carry to next block
            }
            if (!more) break;
            ExchangeMatrix cand = s.matrix.permuted(perm);
            if (cand < best) best = cand;
        }
    }
    return CanonicalSeed{std::move(sorted), std::move(best)};
}

int MutationGraph::variable_index(const LaurentPoly& v) const {
    auto it = std::lower_bound(variables.begin(), variables.end(), v,
                               [](const LaurentPoly& a, const LaurentPoly& b) { return a < b; });
    if (it == variables.end() || !(*it == v)) return -1;
    return static_cast<int>(it - variables.begin());
}

std::vector<std::vector<int>> MutationGraph::clusters_as_ids() const {
    std::vector<std::vector<int>> out;
    out.reserve(seeds.size());
    for (const auto& s : seeds) {
        std::vector<int> ids;
        ids.reserve(s.cluster.size());
        for (const auto& v : s.cluster) ids.push_back(variable_index(v));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    return out;
}

MutationGraph explore(const ExchangeMatrix& b, const ExploreLimits& limits) {
    Seed root = initial_seed(b);
    const int n = b.n();

    std::map<CanonicalSeed, int> registry;
    std::vector<std::pair<Seed, int>> work;  // representative seed + depth, indexed by id
    std::set<std::pair<int, int>> edge_set;

    MutationGraph g;
    registry.emplace(canonicalize_seed(root), 0);
    work.emplace_back(root, 0);

    std::size_t head = 0;
    while (head < work.size()) {
        auto [seed, depth] = work[head];
        int id = static_cast<int>(head);
        ++head;
        for (int k = 0; k < n; ++k) {
            Seed child{{}, seed.matrix};
            if (mutate_guarded(seed, k, limits.max_terms, &child) == MutateStatus::term_limit) {
                g.truncated = true;
                continue;
            }
            ++g.mutations_performed;
            CanonicalSeed key = canonicalize_seed(child);
            auto it = registry.find(key);
            if (it != registry.end()) {
                int other = it->second;
                edge_set.emplace(std::min(id, other), std::max(id, other));
                continue;
            }
            if (depth + 1 > limits.max_depth ||
                static_cast<long long>(registry.size()) >= limits.max_seeds) {
                g.truncated = true;
                continue;
            }
            int nid = static_cast<int>(work.size());
            registry.emplace(std::move(key), nid);
            work.emplace_back(std::move(child), depth + 1);
            edge_set.emplace(id, nid);
            g.depth_reached = std::max(g.depth_reached, depth + 1);
        }
    }

    // Re-key everything to the canonical (sorted) order so results do not
    // depend on discovery order.
    std::vector<int> new_index(registry.size());
    g.seeds.reserve(registry.size());
    {
        int pos = 0;
        for (const auto& [cs, old_id] : registry) {
            new_index[old_id] = pos++;
            g.seeds.push_back(cs);
        }
    }
    for (const auto& [a, bidx] : edge_set) {
        int x = new_index[a], y = new_index[bidx];
        g.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    std::set<LaurentPoly> vars;
    for (const auto& s : g.seeds)
        for (const auto& v : s.cluster) vars.insert(v);
    g.variables.assign(vars.begin(), vars.end());

    for (const auto& v : g.variables)
        if (v.is_polynomial() && !v.as_single_variable())
            g.notable_events.push_back("polynomial cluster variable other than an initial one: " +
                                       v.str());
    return g;
}

VerifyReport verify_cluster_determines_seed(const MutationGraph& g) {
    VerifyReport report;
    report.name = "cluster-determines-seed";
    std::map<std::vector<LaurentPoly>, std::vector<int>> by_cluster;
    for (int i = 0; i < static_cast<int>(g.seeds.size()); ++i)
        by_cluster[g.seeds[i].cluster].push_back(i);
    for (const auto& [cluster, ids] : by_cluster) {
        if (ids.size() == 1) continue;
        std::string what = "cluster {";
        for (std::size_t i = 0; i < cluster.size(); ++i)
            what += (i ? ", " : "") + cluster[i].str();
        what += "} carried by " + std::to_string(ids.size()) + " distinct exchange matrices";
        report.violation(what);
    }
    report.count("seeds", static_cast<long long>(g.seeds.size()));
    report.count("cluster_groups", static_cast<long long>(by_cluster.size()));
    if (g.truncated) {
        report.inconclusive = true;
        report.notes.push_back("graph truncated: verdict is 'no counterexample found'");
    }
    return report;
}

VerifyReport verify_exchange_uniqueness(const MutationGraph& g) {
    VerifyReport report;
    report.name = "exchange-uniqueness";
    if (g.truncated) {
        report.inconclusive = true;
        report.notes.push_back("graph truncated: boundary faces would miscount; skipping");
        return report;
    }
    std::map<std::vector<int>, std::set<int>> completions;
    for (const auto& cluster : g.clusters_as_ids()) {
        for (std::size_t drop = 0; drop < cluster.size(); ++drop) {
            std::vector<int> face;
            face.reserve(cluster.size() - 1);
            for (std::size_t i = 0; i < cluster.size(); ++i)
                if (i != drop) face.push_back(cluster[i]);
            completions[face].insert(cluster[drop]);
        }
    }
    for (const auto& [face, comp] : completions) {
        if (comp.size() == 2) continue;
        std::string what = "face {";
        for (std::size_t i = 0; i < face.size(); ++i)
            what += (i ? ", " : "") + g.variables[face[i]].str();
        what += "} has " + std::to_string(comp.size()) + " completions (expected 2)";
        report.violation(what);
    }
    report.count("faces", static_cast<long long>(completions.size()));
    return report;
}

VerifyReport verify_positivity_pipeline(const MutationGraph& g) {
    VerifyReport report;
    report.name = "positivity-pipeline";
    long long checked = 0;
    for (const auto& v : g.variables) {
        ReducedForm rf = reduced_form(v);
        ++checked;
        if (!positivity_check(rf.numerator))
            report.violation("numerator fails positivity: " + v.str());
        ExponentVec mins = rf.numerator.min_exponents();
        for (int i = 0; i < rf.numerator.nvars(); ++i)
            if (mins[i] != 0)
                report.violation("numerator of " + v.str() + " divisible by x" +
                                 std::to_string(i + 1));
        for (const auto& [e, c] : v.terms())
            if (c <= 0) {
                report.notes.push_back("nonpositive coefficient observed in " + v.str());
                break;
            }
    }
    report.count("variables", checked);
    if (g.truncated) report.inconclusive = true;
    return report;
}

}  // namespace cluskit
