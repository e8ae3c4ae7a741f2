#include "cluskit/quiver_reps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cluskit {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch in product");
    RatMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> row_echelon(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        mpq_class inv = m.at(row, col);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) /= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            mpq_class f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Scale a rational vector to a primitive integer vector (shared across the
// basis of a kernel/cokernel so arrow matrices stay integral).
void make_primitive(std::vector<mpq_class>& v) {
    mpz_class den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    if (g == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mpq_class(ints[i] / g);
}

}  // namespace

int rat_rank(RatMatrix m) {
    return static_cast<int>(row_echelon(m).size());
}

RatMatrix rat_kernel(const RatMatrix& m) {
    RatMatrix e = m;
    std::vector<int> pivots = row_echelon(e);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    int nullity = m.cols - static_cast<int>(pivots.size());
    RatMatrix k(m.cols, nullity);
    int out = 0;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<mpq_class> v(m.cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(static_cast<int>(r), free_col);
        make_primitive(v);
        for (int r = 0; r < m.cols; ++r) k.at(r, out) = v[r];
        ++out;
    }
    return k;
}

RatMatrix rat_cokernel_projection(const RatMatrix& m) {
    // Column echelon of m = row echelon of m^T.
    RatMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    std::vector<int> pivots = row_echelon(t);  // pivot indices into m's rows
    std::vector<char> is_pivot(m.rows, 0);
    for (int c : pivots) is_pivot[c] = 1;
    int codim = m.rows - static_cast<int>(pivots.size());
    RatMatrix p(codim, m.rows);
    int out = 0;
    for (int free_row = 0; free_row < m.rows; ++free_row) {
        if (is_pivot[free_row]) continue;
        // v - sum over pivot rows of (echelon coefficient) reproduces the
        // free coordinate of v modulo the column span.
        std::vector<mpq_class> row(m.rows, 0);
        row[free_row] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            row[pivots[r]] = -t.at(static_cast<int>(r), free_row);
        make_primitive(row);
        for (int c = 0; c < m.rows; ++c) p.at(out, c) = row[c];
        ++out;
    }
    return p;
}

std::vector<Arrow> arrows_of(const ExchangeMatrix& q) {
    std::vector<Arrow> arrows;
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j)
            for (int c = 0; c < std::max(q.at(i, j), 0); ++c) arrows.push_back(Arrow{i, j, c});
    return arrows;
}

QuiverRep::QuiverRep(ExchangeMatrix quiver, DimVec dims, std::vector<RatMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (static_cast<int>(dims_.size()) != quiver_.n())
        throw std::invalid_argument("dimension vector length does not match quiver");
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("negative vertex dimension");
    auto arrows = arrows_of(quiver_);
    if (arrows.size() != maps_.size())
        throw std::invalid_argument("arrow map count does not match quiver");
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (maps_[a].rows != dims_[arrows[a].to] || maps_[a].cols != dims_[arrows[a].from])
            throw std::invalid_argument("arrow map shape does not match dimension vector");
}

int QuiverRep::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

bool QuiverRep::is_thin() const {
    return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d <= 1; });
}

QuiverRep simple_rep(const ExchangeMatrix& q, int i) {
    if (i < 0 || i >= q.n()) throw std::invalid_argument("simple_rep vertex out of range");
    DimVec dims(q.n(), 0);
    dims[i] = 1;
    std::vector<RatMatrix> maps;
    for (const Arrow& a : arrows_of(q)) maps.emplace_back(dims[a.to], dims[a.from]);
    return QuiverRep(q, std::move(dims), std::move(maps));
}

long long hom_dim(const QuiverRep& x, const QuiverRep& y) {
    if (x.quiver() != y.quiver())
        throw std::invalid_argument("hom_dim requires representations of the same quiver");
    const int n = x.quiver().n();
    auto arrows = arrows_of(x.quiver());

    // Unknowns: entries of phi_i (dims_y[i] x dims_x[i]), concatenated.
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + y.dims()[i] * x.dims()[i];
    int unknowns = offset[n];
    auto idx = [&](int vertex, int r, int c) {
        return offset[vertex] + r * x.dims()[vertex] + c;
    };

    int equations = 0;
    for (const Arrow& a : arrows) equations += y.dims()[a.to] * x.dims()[a.from];
    if (unknowns == 0) return 0;
    RatMatrix sys(std::max(equations, 1), unknowns);
    int eq = 0;
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
        const Arrow& a = arrows[ai];
        const RatMatrix& xa = x.map(static_cast<int>(ai));
        const RatMatrix& ya = y.map(static_cast<int>(ai));
        // phi_to * X_a - Y_a * phi_from = 0, entrywise.
        for (int r = 0; r < y.dims()[a.to]; ++r) {
            for (int c = 0; c < x.dims()[a.from]; ++c) {
                for (int s = 0; s < x.dims()[a.to]; ++s)
                    sys.at(eq, idx(a.to, r, s)) += xa.at(s, c);
                for (int t = 0; t < y.dims()[a.from]; ++t)
                    sys.at(eq, idx(a.from, t, c)) -= ya.at(r, t);
                ++eq;
            }
        }
    }
    return unknowns - rat_rank(sys);
}

long long ext1_dim(const QuiverRep& x, const QuiverRep& y) {
    long long value = hom_dim(x, y) - euler_form(x.quiver(), x.dims(), y.dims());
    if (value < 0)
        throw std::logic_error("negative Ext^1 dimension: Euler form conventions are broken");
    return value;
}

namespace {

bool is_sink(const ExchangeMatrix& q, int k) {
    for (int j = 0; j < q.n(); ++j)
        if (q.at(k, j) > 0) return false;
    return true;
}

bool is_source(const ExchangeMatrix& q, int k) {
    for (int j = 0; j < q.n(); ++j)
        if (q.at(k, j) < 0) return false;
    return true;
}

// Simple reflection on dimension vectors: s_k(d)_k = -d_k + sum over edges
// at k of d_neighbor (with multiplicity); orientation-independent.
DimVec simple_reflection(const ExchangeMatrix& q, int k, const DimVec& d) {
    DimVec out = d;
    long long s = -static_cast<long long>(d[k]);
    for (int j = 0; j < q.n(); ++j) s += static_cast<long long>(std::abs(q.at(k, j))) * d[j];
    out[k] = static_cast<int>(s);
    return out;
}

}  // namespace

QuiverRep reflect(const QuiverRep& x, int k) {
    const ExchangeMatrix& q = x.quiver();
    const int n = q.n();
    if (k < 0 || k >= n) throw std::invalid_argument("reflection vertex out of range");
    auto arrows = arrows_of(q);
    ExchangeMatrix reflected = q.mutated(k);  // at a sink/source this is arrow reversal
    auto new_arrows = arrows_of(reflected);

    if (is_sink(q, k)) {
        // Incoming arrows i -> k; new space at k is ker(sum of maps).
        std::vector<int> in;
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].to == k) in.push_back(static_cast<int>(a));
        int stacked = 0;
        for (int a : in) stacked += x.dims()[arrows[a].from];
        RatMatrix summed(x.dims()[k], std::max(stacked, 0));
        int col = 0;
        for (int a : in) {
            const RatMatrix& m = x.map(a);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) summed.at(r, col + c) = m.at(r, c);
            col += m.cols;
        }
        RatMatrix kernel = rat_kernel(summed);

        DimVec dims = x.dims();
        dims[k] = kernel.cols;
        std::vector<RatMatrix> maps;
        maps.reserve(new_arrows.size());
        // slot offsets into the stacked domain, keyed by (from, copy)
        std::map<std::pair<int, int>, int> slot;
        col = 0;
        for (int a : in) {
            slot[{arrows[a].from, arrows[a].copy}] = col;
            col += x.dims()[arrows[a].from];
        }
        for (const Arrow& na : new_arrows) {
            if (na.from == k) {
                int base = slot.at({na.to, na.copy});
                RatMatrix m(dims[na.to], dims[k]);
                for (int r = 0; r < m.rows; ++r)
                    for (int c = 0; c < m.cols; ++c) m.at(r, c) = kernel.at(base + r, c);
                maps.push_back(std::move(m));
            } else {
                // untouched arrow; find it in the original list
                auto it = std::find(arrows.begin(), arrows.end(), na);
                maps.push_back(x.map(static_cast<int>(it - arrows.begin())));
            }
        }
        return QuiverRep(reflected, std::move(dims), std::move(maps));
    }

    if (is_source(q, k)) {
        // Outgoing arrows k -> j; new space at k is coker(stacked maps).
        std::vector<int> out;
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].from == k) out.push_back(static_cast<int>(a));
        int stacked = 0;
        for (int a : out) stacked += x.dims()[arrows[a].to];
        RatMatrix column(std::max(stacked, 0), x.dims()[k]);
        int row = 0;
        for (int a : out) {
            const RatMatrix& m = x.map(a);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) column.at(row + r, c) = m.at(r, c);
            row += m.rows;
        }
        RatMatrix proj = rat_cokernel_projection(column);

        DimVec dims = x.dims();
        dims[k] = proj.rows;
        std::vector<RatMatrix> maps;
        maps.reserve(new_arrows.size());
        std::map<std::pair<int, int>, int> slot;
        row = 0;
        for (int a : out) {
            slot[{arrows[a].to, arrows[a].copy}] = row;
            row += x.dims()[arrows[a].to];
        }
        for (const Arrow& na : new_arrows) {
            if (na.to == k) {
                int base = slot.at({na.from, na.copy});
                RatMatrix m(dims[k], dims[na.from]);
                for (int r = 0; r < m.rows; ++r)
                    for (int c = 0; c < m.cols; ++c) m.at(r, c) = proj.at(r, base + c);
                maps.push_back(std::move(m));
            } else {
                auto it = std::find(arrows.begin(), arrows.end(), na);
                maps.push_back(x.map(static_cast<int>(it - arrows.begin())));
            }
        }
        return QuiverRep(reflected, std::move(dims), std::move(maps));
    }

    throw std::invalid_argument("reflection vertex is neither a sink nor a source");
}

QuiverRep build_indecomposable(const ExchangeMatrix& q, const DimVec& d) {
    if (!classify_dynkin(q))
        throw std::domain_error("build_indecomposable requires a Dynkin quiver");
    if (static_cast<int>(d.size()) != q.n())
        throw std::invalid_argument("dimension vector length does not match quiver");
    bool positive = std::any_of(d.begin(), d.end(), [](int x) { return x > 0; }) &&
                    std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
    if (!positive || tits_form(q, d) != 1)
        throw std::domain_error("dimension vector is not a positive root");

    auto unit_at = [](const DimVec& v) -> int {
        int at = -1;
        for (int i = 0; i < static_cast<int>(v.size()); ++i) {
            if (v[i] == 0) continue;
            if (v[i] != 1 || at >= 0) return -1;
            at = i;
        }
        return at;
    };

    // Admissible sink ordering: reverse topological order of q.  Reflecting
    // through one full pass realizes the Coxeter transformation; any positive
    // root reaches a simple root after finitely many passes.
    const int n = q.n();
    std::vector<int> topo;
    {
        std::vector<int> indeg(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (q.at(i, j) > 0) ++indeg[j];
        std::vector<int> ready;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.push_back(i);
        while (!ready.empty()) {
            int v = ready.back();
            ready.pop_back();
            topo.push_back(v);
            for (int j = 0; j < n; ++j)
                if (q.at(v, j) > 0 && --indeg[j] == 0) ready.push_back(j);
        }
    }

    std::vector<int> chain;
    ExchangeMatrix cur = q;
    DimVec curd = d;
    constexpr int kMaxPasses = 64;  // Coxeter number of E8 is 30
    for (int pass = 0; pass < kMaxPasses && unit_at(curd) < 0; ++pass) {
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            if (unit_at(curd) >= 0) break;
            int k = *it;
            curd = simple_reflection(cur, k, curd);
            cur = cur.mutated(k);
            chain.push_back(k);
        }
    }
    int simple_vertex = unit_at(curd);
    if (simple_vertex < 0)
        throw std::logic_error("reflection chain failed to reach a simple root");

    QuiverRep rep = simple_rep(cur, simple_vertex);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) rep = reflect(rep, *it);

    if (rep.dims() != d || hom_dim(rep, rep) != 1 || ext1_dim(rep, rep) != 0)
        throw std::logic_error("constructed representation is not an exceptional brick");
    return rep;
}

std::vector<int> type_a_path_order(const ExchangeMatrix& q) {
    auto type = classify_dynkin(q);
    if (!type || type->family != 'A')
        throw std::domain_error("path order requires a type A quiver");
    const int n = q.n();
    if (n == 1) return {0};
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && q.at(i, j) != 0) adj[i].push_back(j);
    int start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

QuiverRep interval_module(const ExchangeMatrix& q, int a, int b) {
    auto order = type_a_path_order(q);
    const int n = q.n();
    if (a < 0 || b >= n || a > b) throw std::invalid_argument("bad interval");
    DimVec dims(n, 0);
    for (int p = a; p <= b; ++p) dims[order[p]] = 1;
    std::vector<RatMatrix> maps;
    for (const Arrow& ar : arrows_of(q)) {
        RatMatrix m(dims[ar.to], dims[ar.from]);
        if (m.rows == 1 && m.cols == 1) m.at(0, 0) = 1;
        maps.push_back(std::move(m));
    }
    return QuiverRep(q, std::move(dims), std::move(maps));
}

std::vector<std::vector<long long>> cluster_ext1(const std::vector<ClusterObject>& objects,
                                                 const ExchangeMatrix& q) {
    const int m = static_cast<int>(objects.size());
    for (const auto& obj : objects)
        if (!obj.is_shifted() && obj.rep->quiver() != q)
            throw std::invalid_argument("cluster objects over different quivers");
    std::vector<std::vector<long long>> e(m, std::vector<long long>(m, 0));
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            long long value = 0;
            const auto& oa = objects[a];
            const auto& ob = objects[b];
            if (oa.is_shifted() && ob.is_shifted()) {
                value = 0;
            } else if (oa.is_shifted()) {
                // Ext^1_C(P_i[1], M) = Hom_H(P_i, M), of dimension (dim M)_i
                value = ob.rep->dims()[oa.shifted_vertex];
            } else if (ob.is_shifted()) {
                value = oa.rep->dims()[ob.shifted_vertex];
            } else if (a == b) {
                value = 2 * ext1_dim(*oa.rep, *ob.rep);
            } else {
                value = ext1_dim(*oa.rep, *ob.rep) + ext1_dim(*ob.rep, *oa.rep);
            }
            e[a][b] = e[b][a] = value;
        }
    }
    return e;
}

VerifyReport verify_tilting_image(const MutationGraph& g, const ExchangeMatrix& q) {
    VerifyReport report;
    report.name = "tilting-image";
    if (!classify_dynkin(q))
        throw std::domain_error("verify_tilting_image requires a Dynkin quiver");
    if (g.truncated) {
        report.inconclusive = true;
        report.notes.push_back("graph truncated: tilting check skipped");
        return report;
    }

    std::map<DimVec, QuiverRep> module_cache;
    std::set<std::vector<ObjectLabel>> images;
    long long clusters_checked = 0;

    for (const auto& seed : g.seeds) {
        std::vector<ClusterObject> objects;
        std::vector<ObjectLabel> labels;
        bool realizable = true;
        for (const auto& v : seed.cluster) {
            std::string anomaly;
            auto label = alpha_map(v, &anomaly);
            if (!label) {
                report.violation(anomaly);
                realizable = false;
                break;
            }
            labels.push_back(*label);
            if (label->kind == ObjectLabel::Kind::shifted_projective) {
                objects.push_back(ClusterObject::shifted_projective(label->vertex));
            } else {
                auto it = module_cache.find(label->dim);
                if (it == module_cache.end())
                    it = module_cache.emplace(label->dim, build_indecomposable(q, label->dim))
                             .first;
                objects.push_back(ClusterObject::module(it->second));
            }
        }
        if (!realizable) continue;
        ++clusters_checked;
        auto ext = cluster_ext1(objects, q);
        for (std::size_t a = 0; a < ext.size(); ++a)
            for (std::size_t b = a; b < ext.size(); ++b)
                if (ext[a][b] != 0)
                    report.violation("Ext^1_C(" + labels[a].str() + ", " + labels[b].str() +
                                     ") = " + std::to_string(ext[a][b]) + " in cluster image");
        std::sort(labels.begin(), labels.end());
        if (!images.insert(labels).second)
            report.violation("two distinct clusters share the object set of " + labels[0].str() +
                             " ...");
    }
    report.count("clusters", clusters_checked);
    report.count("distinct_images", static_cast<long long>(images.size()));
    return report;
}

}  // namespace cluskit
