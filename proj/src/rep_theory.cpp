#include "cluskit/rep_theory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cluskit {

namespace {

void require_acyclic(const ExchangeMatrix& q) {
    if (!is_acyclic(q)) throw std::domain_error("operation requires an acyclic quiver");
}

int arrow_count(const ExchangeMatrix& q, int i, int j) {
    return std::max(q.at(i, j), 0);
}

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix identity(int n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    int n = static_cast<int>(a.size());
    IntMatrix c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// (I - A)^{-1} = I + A + A^2 + ... ; entry [i][j] counts paths i -> j.
IntMatrix path_count_matrix(const ExchangeMatrix& q) {
    const int n = q.n();
    IntMatrix arrows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) arrows[i][j] = arrow_count(q, i, j);
    IntMatrix total = identity(n);
    IntMatrix power = identity(n);
    for (int step = 1; step < n; ++step) {
        power = multiply(power, arrows);
        bool all_zero = true;
        for (int i = 0; i < n && all_zero; ++i)
            for (int j = 0; j < n; ++j)
                if (power[i][j] != 0) {
                    all_zero = false;
                    break;
                }
        if (all_zero) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) total[i][j] += power[i][j];
    }
    return total;
}

std::vector<long long> apply(const IntMatrix& m, const std::vector<long long>& v) {
    int n = static_cast<int>(m.size());
    std::vector<long long> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace

long long euler_form(const ExchangeMatrix& q, const DimVec& a, const DimVec& b) {
    require_acyclic(q);
    const int n = q.n();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("dimension vector length does not match quiver");
    long long value = 0;
    for (int i = 0; i < n; ++i) value += static_cast<long long>(a[i]) * b[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int m = arrow_count(q, i, j);
            if (m) value -= static_cast<long long>(m) * a[i] * b[j];
        }
    return value;
}

long long tits_form(const ExchangeMatrix& q, const DimVec& d) {
    return euler_form(q, d, d);
}

std::vector<DimVec> projective_dims(const ExchangeMatrix& q) {
    require_acyclic(q);
    IntMatrix paths = path_count_matrix(q);
    const int n = q.n();
    std::vector<DimVec> out(n, DimVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = static_cast<int>(paths[i][j]);
    return out;  // dim P_i = row i of the path-count matrix
}

std::vector<DimVec> injective_dims(const ExchangeMatrix& q) {
    require_acyclic(q);
    IntMatrix paths = path_count_matrix(q);
    const int n = q.n();
    std::vector<DimVec> out(n, DimVec(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out[j][i] = static_cast<int>(paths[i][j]);
    return out;  // dim I_j = column j
}

CoxeterMatrix coxeter_matrix(const ExchangeMatrix& q) {
    require_acyclic(q);
    const int n = q.n();
    // Euler matrix E = I - A, so <a,b> = a^T E b.  With N = E^{-1} (the
    // path-count matrix), phi = -N E^T and phi^{-1} = -N^T E.
    IntMatrix euler(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            euler[i][j] = (i == j ? 1 : 0) - arrow_count(q, i, j);
    IntMatrix paths = path_count_matrix(q);
    IntMatrix euler_t(n, std::vector<long long>(n));
    IntMatrix paths_t(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            euler_t[i][j] = euler[j][i];
            paths_t[i][j] = paths[j][i];
        }
    CoxeterMatrix out{multiply(paths, euler_t), multiply(paths_t, euler)};
    for (auto& row : out.phi)
        for (auto& v : row) v = -v;
    for (auto& row : out.phi_inv)
        for (auto& v : row) v = -v;

    // Convention check: phi * dim P_i = -dim I_i for every vertex.
    auto projs = projective_dims(q);
    auto injs = injective_dims(q);
    for (int i = 0; i < n; ++i) {
        std::vector<long long> p(projs[i].begin(), projs[i].end());
        std::vector<long long> image = apply(out.phi, p);
        for (int j = 0; j < n; ++j)
            if (image[j] != -static_cast<long long>(injs[i][j]))
                throw std::logic_error("Coxeter matrix convention check failed");
        std::vector<long long> inj(injs[i].begin(), injs[i].end());
        std::vector<long long> back = apply(out.phi_inv, apply(out.phi, inj));
        for (int j = 0; j < n; ++j)
            if (back[j] != inj[j]) throw std::logic_error("Coxeter inverse check failed");
    }
    return out;
}

std::vector<long long> coxeter_tau(const ExchangeMatrix& q, const DimVec& d,
                                   TauDirection direction) {
    CoxeterMatrix phi = coxeter_matrix(q);
    std::vector<long long> v(d.begin(), d.end());
    return apply(direction == TauDirection::forward ? phi.phi : phi.phi_inv, v);
}

std::vector<DimVec> positive_roots(const ExchangeMatrix& q) {
    auto type = classify_dynkin(q);
    if (!type) throw std::domain_error("positive_roots requires a simply laced Dynkin quiver");
    const int n = q.n();
    constexpr int kMaxCoord = 6;  // largest coordinate of any ADE root (E8)
    std::vector<DimVec> roots;
    DimVec d(n, 0);
    // odometer over {0..6}^n
    while (true) {
        bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
        if (!zero && tits_form(q, d) == 1) roots.push_back(d);
        int pos = 0;
        while (pos < n && d[pos] == kMaxCoord) d[pos++] = 0;
        if (pos == n) break;
        ++d[pos];
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string ObjectLabel::str() const {
    if (kind == Kind::shifted_projective) return "P" + std::to_string(vertex + 1) + "[1]";
    std::string s = "M(";
    for (std::size_t i = 0; i < dim.size(); ++i) s += (i ? "," : "") + std::to_string(dim[i]);
    return s + ")";
}

std::optional<ObjectLabel> alpha_map(const LaurentPoly& u, std::string* anomaly) {
    if (u.is_zero()) throw std::domain_error("alpha_map of zero");
    ReducedForm rf = reduced_form(u);
    const ExponentVec& d = rf.denom_vector;
    bool nonneg = std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
    bool nonzero = std::any_of(d.begin(), d.end(), [](int x) { return x != 0; });
    if (nonneg && nonzero) return ObjectLabel::module(DimVec(d.begin(), d.end()));
    int neg_at = -1;
    bool minus_unit = true;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        if (d[i] == 0) continue;
        if (d[i] == -1 && neg_at < 0)
            neg_at = i;
        else
            minus_unit = false;
    }
    if (minus_unit && neg_at >= 0) return ObjectLabel::shifted_projective(neg_at);
    if (anomaly)
        *anomaly = "denominator vector of " + u.str() +
                   " is neither nonnegative-nonzero nor -e_i (would contradict the "
                   "denominator theorem)";
    return std::nullopt;
}

VerifyReport verify_denominator_theorem(const MutationGraph& g, const ExchangeMatrix& q) {
    VerifyReport report;
    report.name = "denominator-theorem";
    const int n = q.n();
    auto dynkin = classify_dynkin(q);

    std::set<DimVec> module_labels;
    std::set<int> shifted_labels;
    std::set<ObjectLabel> all_labels;
    long long label_count = 0;

    for (const auto& v : g.variables) {
        std::string anomaly;
        auto label = alpha_map(v, &anomaly);
        if (!label) {
            report.violation(anomaly);
            continue;
        }
        ++label_count;
        if (!all_labels.insert(*label).second)
            report.violation("alpha not injective: label " + label->str() +
                             " repeats at variable " + v.str());
        bool initial = v.as_single_variable().has_value();
        if (label->kind == ObjectLabel::Kind::shifted_projective) {
            if (!initial)
                report.violation("non-initial variable " + v.str() + " labelled " + label->str());
            shifted_labels.insert(label->vertex);
        } else {
            if (initial)
                report.violation("initial variable " + v.str() + " labelled " + label->str());
            if (tits_form(q, label->dim) != 1)
                report.violation("denominator vector of " + v.str() +
                                 " is not a root: tits = " +
                                 std::to_string(tits_form(q, label->dim)));
            module_labels.insert(label->dim);
        }
    }
    report.count("variables", static_cast<long long>(g.variables.size()));
    report.count("module_labels", static_cast<long long>(module_labels.size()));
    report.count("shifted_labels", static_cast<long long>(shifted_labels.size()));

    if (dynkin && !g.truncated) {
        auto roots = positive_roots(q);
        std::set<DimVec> root_set(roots.begin(), roots.end());
        for (const auto& d : module_labels)
            if (!root_set.count(d))
                report.violation("module label " + ObjectLabel::module(d).str() +
                                 " is not a positive root");
        for (const auto& d : root_set)
            if (!module_labels.count(d))
                report.violation("positive root " + ObjectLabel::module(d).str() +
                                 " missed by every cluster variable");
        if (static_cast<int>(shifted_labels.size()) != n)
            report.violation("expected " + std::to_string(n) + " shifted projectives, saw " +
                             std::to_string(shifted_labels.size()));
        report.count("positive_roots", static_cast<long long>(roots.size()));
    }
    if (g.truncated) {
        report.inconclusive = true;
        report.notes.push_back("graph truncated: root-bijection check skipped");
    }
    (void)label_count;
    return report;
}

}  // namespace cluskit
