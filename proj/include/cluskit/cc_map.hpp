#pragma once

// The Caldero-Chapoton map from modules to Laurent polynomials.  Euler
// characteristics of quiver Grassmannians come from an exact combinatorial
// rule for thin modules and from finite-field point counting plus Lagrange
// interpolation for small general modules.

#include <map>

#include "cluskit/laurent.hpp"
#include "cluskit/quiver.hpp"
#include "cluskit/quiver_reps.hpp"
#include "cluskit/rep_theory.hpp"
#include "cluskit/seed_engine.hpp"
#include "cluskit/verify.hpp"

namespace cluskit {

/// Thin-module Grassmannians are points or empty: chi = 1 iff 0 <= e <= dim
/// and every nonzero arrow map out of a chosen vertex lands in a chosen one.
int chi_thin(const QuiverRep& m, const DimVec& e);

/// Number of subrepresentation tuples of dimension vector e over F_q,
/// enumerated via row-echelon subspace representatives.  Guarded to total
/// dimension <= 6; maps must be integral and keep their rank mod q.
long long count_subreps_fq(const QuiverRep& m, const DimVec& e, long long q);

inline constexpr int kSubrepTotalDimGuard = 6;

/// True when every arrow matrix keeps its rational rank after reduction
/// mod p (the usability test for the prime pool).
bool maps_rank_stable_mod(const QuiverRep& m, long long p);

/// chi = P(1) where P interpolates the point counts at D+1 usable primes
/// (D = sum e_i (dim_i - e_i)); a held-out prime validates P and coefficient
/// integrality is asserted.
long long chi_interpolated(const QuiverRep& m, const DimVec& e);

/// All Euler characteristics of Gr_e(M) for 0 <= e <= dim M.
struct GrassmannianProfile {
    DimVec dims;
    std::map<DimVec, long long> chi;
};

GrassmannianProfile grassmannian_profile(const QuiverRep& m);

/// X_M = sum_e chi(Gr_e(M)) prod_i x_i^(-<e,a_i> - <a_i, m-e>).  M must be
/// exceptional; the result's denominator vector is checked to equal dim M.
LaurentPoly cc_variable(const QuiverRep& m);

/// beta(P_{i+1}[1]) = x_{i+1}.
LaurentPoly beta_shifted_projective(int nvars, int i);

/// For every positive root d: the CC variable of the indecomposable with
/// dimension vector d must occur verbatim among the explored variables with
/// denominator vector d; conversely the non-initial variable count must
/// match.  Requires a closed graph over a Dynkin quiver.
VerifyReport verify_alpha_beta_inverse(const MutationGraph& g, const ExchangeMatrix& q);

}  // namespace cluskit
