#include "cluskit/cc_map.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cluskit {

namespace {

bool box_contains(const DimVec& e, const DimVec& dims) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > dims[i]) return false;
    return true;
}

void require_thin(const QuiverRep& m) {
    if (!m.is_thin())
        throw std::invalid_argument("chi_thin requires a thin module (all dims <= 1)");
}

long long mod_pos(long long v, long long p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// Integer arrow matrices reduced mod p.
struct FpMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

FpMatrix reduce_map(const RatMatrix& m, long long p) {
    FpMatrix f;
    f.rows = m.rows;
    f.cols = m.cols;
    f.a.resize(m.a.size());
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        const mpq_class& x = m.a[i];
        if (x.get_den() != 1)
            throw std::invalid_argument("count_subreps_fq requires integer arrow maps");
        mpz_class r = x.get_num() % p;
        long long v = r.get_si();
        f.a[i] = mod_pos(v, p);
    }
    return f;
}

long long pow_mod(long long b, long long e, long long p) {
    long long r = 1;
    b = mod_pos(b, p);
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long p) { return pow_mod(a, p - 2, p); }

int fp_rank(FpMatrix m, long long p) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        long long inv = inv_mod(m.at(rank, col), p);
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = m.at(rank, c) * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            long long f = m.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = mod_pos(m.at(r, c) - f * m.at(rank, c), p);
        }
        ++rank;
    }
    return rank;
}

// All reduced-row-echelon bases of e-dimensional subspaces of F_p^d,
// emitted as e x d row matrices.
void enumerate_subspaces(int d, int e, long long p,
                         const std::function<void(const std::vector<std::vector<long long>>&)>& emit) {
    if (e == 0) {
        emit({});
        return;
    }
    std::vector<int> pivots(e);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
        // free entries: (r, c) with c > pivots[r] and c not a pivot column
        std::vector<std::pair<int, int>> free_cells;
        std::vector<char> is_pivot(d, 0);
        for (int c : pivots) is_pivot[c] = 1;
        for (int r = 0; r < e; ++r)
            for (int c = pivots[r] + 1; c < d; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(r, c);

        std::vector<std::vector<long long>> basis(e, std::vector<long long>(d, 0));
        for (int r = 0; r < e; ++r) basis[r][pivots[r]] = 1;
        std::vector<long long> odo(free_cells.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free_cells.size(); ++i)
                basis[free_cells[i].first][free_cells[i].second] = odo[i];
            emit(basis);
            std::size_t pos = 0;
            while (pos < odo.size() && odo[pos] == p - 1) odo[pos++] = 0;
            if (pos == odo.size()) break;
            ++odo[pos];
        }

        // next pivot combination
        int i = e - 1;
        while (i >= 0 && pivots[i] == d - e + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < e; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

// Reduce w by the rref rows of the target subspace; zero iff w lies in it.
bool in_span(std::vector<long long> w, const std::vector<std::vector<long long>>& basis,
             long long p) {
    for (const auto& row : basis) {
        int pivot = -1;
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            if (row[c] != 0) {
                pivot = c;
                break;
            }
        if (pivot < 0) continue;
        long long f = w[pivot];  // rref rows have pivot entry 1
        if (f == 0) continue;
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = mod_pos(w[c] - f * row[c], p);
    }
    return std::all_of(w.begin(), w.end(), [](long long v) { return v == 0; });
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int chi_thin(const QuiverRep& m, const DimVec& e) {
    require_thin(m);
    for (const auto& mat : m.maps())
        if (mat.rows == 1 && mat.cols == 1 && mat.at(0, 0) != 0 && mat.at(0, 0).get_den() != 1)
            throw std::invalid_argument("chi_thin requires scalar integer maps");
    if (static_cast<int>(e.size()) != m.quiver().n())
        throw std::invalid_argument("sub-dimension vector length mismatch");
    if (!box_contains(e, m.dims())) return 0;
    auto arrows = arrows_of(m.quiver());
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const RatMatrix& mat = m.map(static_cast<int>(a));
        bool nonzero = mat.rows == 1 && mat.cols == 1 && mat.at(0, 0) != 0;
        if (nonzero && e[arrows[a].from] == 1 && e[arrows[a].to] == 0) return 0;
    }
    return 1;
}

bool maps_rank_stable_mod(const QuiverRep& m, long long p) {
    for (const auto& mat : m.maps()) {
        if (mat.rows == 0 || mat.cols == 0) continue;
        if (fp_rank(reduce_map(mat, p), p) != rat_rank(mat)) return false;
    }
    return true;
}

long long count_subreps_fq(const QuiverRep& m, const DimVec& e, long long q) {
    if (m.total_dim() > kSubrepTotalDimGuard)
        throw std::length_error("count_subreps_fq: total dimension exceeds the guard");
    if (!is_prime(q)) throw std::invalid_argument("count_subreps_fq: modulus must be prime");
    if (static_cast<int>(e.size()) != m.quiver().n())
        throw std::invalid_argument("sub-dimension vector length mismatch");
    if (!maps_rank_stable_mod(m, q))
        throw std::invalid_argument("arrow map drops rank mod q; choose another prime");
    if (!box_contains(e, m.dims())) return 0;

    const int n = m.quiver().n();
    auto arrows = arrows_of(m.quiver());
    std::vector<FpMatrix> fp_maps;
    fp_maps.reserve(arrows.size());
    for (const auto& mat : m.maps()) fp_maps.push_back(reduce_map(mat, q));

    // per-vertex subspace lists
    std::vector<std::vector<std::vector<std::vector<long long>>>> choices(n);
    for (int i = 0; i < n; ++i)
        enumerate_subspaces(m.dims()[i], e[i], q,
                            [&](const std::vector<std::vector<long long>>& basis) {
                                choices[i].push_back(basis);
                            });

    long long count = 0;
    std::vector<std::size_t> odo(n, 0);
    while (true) {
        bool closed = true;
        for (std::size_t a = 0; a < arrows.size() && closed; ++a) {
            int from = arrows[a].from, to = arrows[a].to;
            const auto& sfrom = choices[from][odo[from]];
            const auto& sto = choices[to][odo[to]];
            for (const auto& v : sfrom) {
                std::vector<long long> w(m.dims()[to], 0);
                for (int r = 0; r < fp_maps[a].rows; ++r) {
                    long long acc = 0;
                    for (int c = 0; c < fp_maps[a].cols; ++c) acc += fp_maps[a].at(r, c) * v[c] % q;
                    w[r] = mod_pos(acc, q);
                }
                if (!in_span(w, sto, q)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) ++count;
        int pos = 0;
        while (pos < n && odo[pos] + 1 == choices[pos].size()) odo[pos++] = 0;
        if (pos == n) break;
        ++odo[pos];
    }
    return count;
}

long long chi_interpolated(const QuiverRep& m, const DimVec& e) {
    if (!box_contains(e, m.dims())) return 0;
    long long degree_bound = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        degree_bound += static_cast<long long>(e[i]) * (m.dims()[i] - e[i]);

    // D+1 sample primes plus one held-out validator, skipping primes where a
    // map drops rank.
    std::vector<long long> primes;
    for (long long p = 2; static_cast<long long>(primes.size()) < degree_bound + 2; ++p)
        if (is_prime(p) && maps_rank_stable_mod(m, p)) primes.push_back(p);

    std::vector<long long> counts;
    counts.reserve(primes.size());
    for (long long p : primes) counts.push_back(count_subreps_fq(m, e, p));

    // Lagrange interpolation through the first D+1 points, coefficient form.
    int npts = static_cast<int>(degree_bound) + 1;
    std::vector<mpq_class> poly(1, 0);
    for (int j = 0; j < npts; ++j) {
        std::vector<mpq_class> basis(1, 1);
        mpq_class denom = 1;
        for (int l = 0; l < npts; ++l) {
            if (l == j) continue;
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t] -= basis[t] * primes[l];
                next[t + 1] += basis[t];
            }
            basis = std::move(next);
            denom *= mpq_class(primes[j] - primes[l]);
        }
        mpq_class scale = mpq_class(counts[j]) / denom;
        if (basis.size() > poly.size()) poly.resize(basis.size(), 0);
        for (std::size_t t = 0; t < basis.size(); ++t) poly[t] += basis[t] * scale;
    }

    for (const auto& c : poly)
        if (c.get_den() != 1)
            throw std::runtime_error(
                "subrepresentation counts are not an integer polynomial in q");
    // held-out prime validates the polynomial model
    long long held_out = primes[npts];
    mpq_class predicted = 0, power = 1;
    for (const auto& c : poly) {
        predicted += c * power;
        power *= held_out;
    }
    if (predicted != counts[npts])
        throw std::runtime_error("point counts fail the held-out prime check (non-polynomial)");

    mpq_class at_one = 0;
    for (const auto& c : poly) at_one += c;
    mpz_class chi = at_one.get_num();
    if (!chi.fits_slong_p()) throw std::overflow_error("Euler characteristic overflow");
    return chi.get_si();
}

GrassmannianProfile grassmannian_profile(const QuiverRep& m) {
    GrassmannianProfile profile;
    profile.dims = m.dims();
    const int n = m.quiver().n();
    DimVec e(n, 0);
    bool thin = m.is_thin();
    while (true) {
        long long chi = thin ? chi_thin(m, e) : chi_interpolated(m, e);
        if (chi != 0) profile.chi[e] = chi;
        int pos = 0;
        while (pos < n && e[pos] == m.dims()[pos]) e[pos++] = 0;
        if (pos == n) break;
        ++e[pos];
    }
    return profile;
}

LaurentPoly cc_variable(const QuiverRep& m) {
    if (ext1_dim(m, m) != 0)
        throw std::invalid_argument("cc_variable requires an exceptional module");
    const ExchangeMatrix& q = m.quiver();
    const int n = q.n();
    const DimVec& dims = m.dims();
    GrassmannianProfile profile = grassmannian_profile(m);

    LaurentPoly x(n);
    DimVec unit(n, 0), rest(n, 0);
    for (const auto& [e, chi] : profile.chi) {
        ExponentVec expo(n, 0);
        for (int i = 0; i < n; ++i) rest[i] = dims[i] - e[i];
        for (int i = 0; i < n; ++i) {
            unit.assign(n, 0);
            unit[i] = 1;
            expo[i] = static_cast<int>(-euler_form(q, e, unit) - euler_form(q, unit, rest));
        }
        x += LaurentPoly::monomial(n, expo, mpz_class(chi));
    }

    ExponentVec denom = reduced_form(x).denom_vector;
    for (int i = 0; i < n; ++i)
        if (denom[i] != dims[i])
            throw std::runtime_error("CC variable denominator " + x.str() +
                                     " does not match the dimension vector");
    return x;
}

LaurentPoly beta_shifted_projective(int nvars, int i) {
    return LaurentPoly::variable(nvars, i);
}

VerifyReport verify_alpha_beta_inverse(const MutationGraph& g, const ExchangeMatrix& q) {
    VerifyReport report;
    report.name = "alpha-beta-inverse";
    if (!classify_dynkin(q))
        throw std::domain_error("verify_alpha_beta_inverse requires a Dynkin quiver");
    if (g.truncated) {
        report.inconclusive = true;
        report.notes.push_back("graph truncated: bijection check skipped");
        return report;
    }
    const int n = q.n();
    long long matched = 0;
    for (const auto& d : positive_roots(q)) {
        QuiverRep module = build_indecomposable(q, d);
        LaurentPoly x = cc_variable(module);
        bool found = g.variable_index(x) >= 0;
        bool denom_ok = reduced_form(x).denom_vector == ExponentVec(d.begin(), d.end());
        if (found && denom_ok) {
            ++matched;
        } else {
            report.violation("root " + ObjectLabel::module(d).str() + ": CC variable " + x.str() +
                             (found ? " has wrong denominator" : " not among explored variables"));
        }
    }
    for (int i = 0; i < n; ++i)
        if (g.variable_index(beta_shifted_projective(n, i)) < 0)
            report.violation("initial variable x" + std::to_string(i + 1) +
                             " missing from explored variables");

    long long non_initial = 0;
    for (const auto& v : g.variables)
        if (!v.as_single_variable()) ++non_initial;
    if (non_initial != matched)
        report.violation("non-initial variable count " + std::to_string(non_initial) +
                         " does not match matched roots " + std::to_string(matched));
    report.count("roots_matched", matched);
    report.count("non_initial_variables", non_initial);
    return report;
}

}  // namespace cluskit
