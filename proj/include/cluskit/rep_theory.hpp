#pragma once

// Numerical representation theory of the hereditary path algebra of an
// acyclic quiver: Euler/Tits forms, Coxeter transformation, positive-root
// enumeration, and the denominator map alpha with its verifier.

#include <optional>
#include <string>
#include <vector>

#include "cluskit/laurent.hpp"
#include "cluskit/quiver.hpp"
#include "cluskit/seed_engine.hpp"
#include "cluskit/verify.hpp"

namespace cluskit {

/// Composition-factor multiplicities of a module; entries >= 0.
using DimVec = std::vector<int>;

/// Euler form <a,b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j, arrows
/// counted with multiplicity.  Requires an acyclic quiver.
long long euler_form(const ExchangeMatrix& q, const DimVec& a, const DimVec& b);

/// Tits quadratic form q(d) = <d,d>; real roots satisfy q(d) = 1.
long long tits_form(const ExchangeMatrix& q, const DimVec& d);

/// Dimension vectors of the indecomposable projectives / injectives
/// (entry j of projective_dims()[i] counts paths i -> j).
std::vector<DimVec> projective_dims(const ExchangeMatrix& q);
std::vector<DimVec> injective_dims(const ExchangeMatrix& q);

enum class TauDirection { forward, backward };

/// Coxeter transformation acting as the AR-translate on dimension vectors.
/// The construction asserts phi * dim P_i = -dim I_i, pinning conventions.
struct CoxeterMatrix {
    std::vector<std::vector<long long>> phi;      // tau
    std::vector<std::vector<long long>> phi_inv;  // tau^{-1}
};

CoxeterMatrix coxeter_matrix(const ExchangeMatrix& q);

/// phi*d (forward) or phi^{-1}*d (backward).  A non-positive result means
/// the orbit left the module category (projective/injective boundary).
std::vector<long long> coxeter_tau(const ExchangeMatrix& q, const DimVec& d,
                                   TauDirection direction);

/// All positive roots of a simply laced Dynkin quiver, by brute-force scan
/// of the Tits form over 0 <= d_i <= 6 (the ADE coordinate bound).
std::vector<DimVec> positive_roots(const ExchangeMatrix& q);

/// Codomain of the denominator map: an exceptional module identified by its
/// dimension vector, or the shifted projective P_i[1] standing in for an
/// initial variable.
struct ObjectLabel {
    enum class Kind { module, shifted_projective };
    Kind kind;
    DimVec dim;  // module only
    int vertex = -1;  // shifted projective only

    static ObjectLabel module(DimVec d) {
        return ObjectLabel{Kind::module, std::move(d), -1};
    }
    static ObjectLabel shifted_projective(int i) {
        return ObjectLabel{Kind::shifted_projective, {}, i};
    }
    bool operator==(const ObjectLabel& o) const {
        return kind == o.kind && dim == o.dim && vertex == o.vertex;
    }
    bool operator<(const ObjectLabel& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (dim != o.dim) return dim < o.dim;
        return vertex < o.vertex;
    }
    std::string str() const;
};

/// Denominator map: d >= 0 nonzero -> Module(d); d = -e_i -> P_i[1]; any
/// other denominator shape is an anomaly (reported via *anomaly, nullopt
/// returned).
std::optional<ObjectLabel> alpha_map(const LaurentPoly& u, std::string* anomaly = nullptr);

/// Checks (a) every non-initial variable labels an exceptional-module
/// candidate (d >= 0, tits = 1); (b) on closed Dynkin graphs the labels are
/// exactly the almost positive roots; (c) alpha is injective on explored
/// variables.
VerifyReport verify_denominator_theorem(const MutationGraph& g, const ExchangeMatrix& q);

}  // namespace cluskit
