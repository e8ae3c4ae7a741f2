#pragma once

// Explicit finite dimensional quiver representations over exact rationals:
// Hom/Ext dimensions by linear algebra, BGP reflection functors, constructive
// Gabriel correspondence for ADE roots, and cluster-category Ext^1 matrices
// for tilting verification.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cluskit/quiver.hpp"
#include "cluskit/rep_theory.hpp"
#include "cluskit/seed_engine.hpp"
#include "cluskit/verify.hpp"

namespace cluskit {

/// Dense matrix over exact rationals.  Zero rows/cols are legal (maps in and
/// out of zero-dimensional vertex spaces).
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpq_class> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    mpq_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const mpq_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static RatMatrix identity(int n);
    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// Gaussian elimination rank.
int rat_rank(RatMatrix m);
/// Columns spanning ker(m), scaled to primitive integer vectors.
RatMatrix rat_kernel(const RatMatrix& m);
/// Projection p with p*m = 0 realizing coker(m); rows scaled to primitive
/// integer vectors.  p has full row rank m.rows - rank(m).
RatMatrix rat_cokernel_projection(const RatMatrix& m);

struct Arrow {
    int from;
    int to;
    int copy;  // 0-based among parallel arrows
    bool operator==(const Arrow& o) const {
        return from == o.from && to == o.to && copy == o.copy;
    }
};

/// Arrows of the quiver in canonical (from, to, copy) order.
std::vector<Arrow> arrows_of(const ExchangeMatrix& q);

class QuiverRep {
public:
    QuiverRep(ExchangeMatrix quiver, DimVec dims, std::vector<RatMatrix> maps);

    const ExchangeMatrix& quiver() const { return quiver_; }
    const DimVec& dims() const { return dims_; }
    const std::vector<RatMatrix>& maps() const { return maps_; }
    const RatMatrix& map(int arrow_index) const { return maps_[arrow_index]; }
    int total_dim() const;

    /// True when every vertex space has dimension <= 1; thin modules admit
    /// the combinatorial Grassmannian shortcut.
    bool is_thin() const;

private:
    ExchangeMatrix quiver_;
    DimVec dims_;
    std::vector<RatMatrix> maps_;
};

/// The simple module S_{i+1}: one-dimensional at vertex i, zero maps.
QuiverRep simple_rep(const ExchangeMatrix& q, int i);

/// dim_k Hom(X, Y): solution-space dimension of the arrow-commutation system.
long long hom_dim(const QuiverRep& x, const QuiverRep& y);

/// dim Ext^1 via the hereditary Euler identity hom - <dim X, dim Y>;
/// a negative value is a conventions bug and throws.
long long ext1_dim(const QuiverRep& x, const QuiverRep& y);

/// BGP reflection at a sink (kernel construction) or source (cokernel
/// construction); the result lives over the quiver with arrows at k
/// reversed.  k must be a sink or source.
QuiverRep reflect(const QuiverRep& x, int k);

/// Indecomposable representation with dimension vector d (a positive root of
/// the Dynkin quiver q) built by a chain of reflections from a simple.
/// Postconditions End = k and Ext^1(X,X) = 0 are asserted.
QuiverRep build_indecomposable(const ExchangeMatrix& q, const DimVec& d);

/// Vertices of a type A quiver in path order (either end first).
std::vector<int> type_a_path_order(const ExchangeMatrix& q);

/// Independent constructor for type A: the interval module supported on path
/// positions [a..b] with identity maps inside the interval.
QuiverRep interval_module(const ExchangeMatrix& q, int a, int b);

/// An object of the cluster category in the fundamental domain: a module or
/// a shifted projective P_{i+1}[1].
struct ClusterObject {
    std::optional<QuiverRep> rep;  // module case
    int shifted_vertex = -1;       // P_i[1] case

    static ClusterObject module(QuiverRep r) { return ClusterObject{std::move(r), -1}; }
    static ClusterObject shifted_projective(int i) { return ClusterObject{std::nullopt, i}; }
    bool is_shifted() const { return !rep.has_value(); }
};

/// Symmetric matrix of cluster-category Ext^1 dimensions:
///   module pairs:    ext1(X,Y) + ext1(Y,X)
///   P_i[1] vs module M:  (dim M)_i
///   P_i[1] vs P_j[1]:    0
std::vector<std::vector<long long>> cluster_ext1(const std::vector<ClusterObject>& objects,
                                                 const ExchangeMatrix& q);

/// Realizes every cluster's alpha-image as explicit objects and checks the
/// cluster-category Ext^1 matrix vanishes; also checks distinct clusters map
/// to distinct object sets.  Requires a closed graph over a Dynkin quiver.
VerifyReport verify_tilting_image(const MutationGraph& g, const ExchangeMatrix& q);

}  // namespace cluskit
