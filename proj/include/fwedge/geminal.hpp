#pragma once

// 2-particle antisymmetric functions g² and their canonical decomposition
// g² = Σ ξ_i |2i-1,2i⟩ into pair amplitudes and natural orbitals.

#include <vector>

#include "fwedge/basis.hpp"
#include "fwedge/la.hpp"

namespace fwedge {

/// Canonical pair-amplitude data (ξ_1..ξ_s on ambient dimension n), the
/// input shared by every downstream formula evaluator. Complex ξ are
/// accepted so the conjugate-bearing expressions can be exercised
/// directly; canonicalize() itself always produces real positive ξ.
struct PairAmplitudes {
    int n = 0;
    std::vector<cplx> xi;

    int s() const noexcept { return static_cast<int>(xi.size()); }
    int one_rank() const noexcept { return 2 * s(); }  // r = 2s

    /// Σ_{i≠k} |ξ_i|², the pair eigenvalue 1-|ξ_k|² computed without
    /// cancellation (k is 1-based).
    double tail_weight(int k) const;

    /// Throws when Σ|ξ|² strays from 1 beyond tol, any ξ vanishes,
    /// s < 1, or 2s > n.
    void validate(double tol = 1e-12) const;
};

/// Dense antisymmetric coefficient matrix of a normalized g²: the
/// amplitude of g² on |i,j⟩ (i<j) is G_ij. Construction validates
/// antisymmetry and normalization to 1e-12.
class GeminalMatrix {
public:
    GeminalMatrix(int n, la::Matrix g);

    int n() const noexcept { return n_; }
    const la::Matrix& coeffs() const noexcept { return g_; }

    /// The same function as a 2-sector amplitude vector.
    WedgeVector to_wedge() const;

private:
    int n_ = 0;
    la::Matrix g_;
};

/// Output of canonicalize: s pair amplitudes (real, positive, descending)
/// and the unitary whose columns are the natural orbitals in the input
/// basis, so that G = U · blockdiag([[0,ξ_k],[-ξ_k,0]], 0) · Uᵀ.
struct CanonicalGeminal {
    int n = 0;
    std::vector<double> xi;
    la::Matrix u;

    int s() const noexcept { return static_cast<int>(xi.size()); }
    int one_rank() const noexcept { return 2 * s(); }

    PairAmplitudes pair_amplitudes() const;
};

/// Computes the canonical decomposition. Singular values below
/// rank_tol * (largest singular value) are treated as exact zeros and
/// excluded from s. Deterministic: pairs ordered by descending ξ, ties in
/// extraction order.
CanonicalGeminal canonicalize(const GeminalMatrix& g, double rank_tol = 1e-10);

/// The canonical block matrix blockdiag([[0,ξ_k],[-ξ_k,0]], 0) on n orbitals.
la::Matrix canonical_block_matrix(const PairAmplitudes& c);

/// g² in the natural-orbital basis: Σ ξ_i |2i-1,2i⟩, unit norm.
WedgeVector reconstruct(const PairAmplitudes& c);
WedgeVector reconstruct(const CanonicalGeminal& c);

/// G = U · blockdiag · Uᵀ, the round-trip back to the input basis.
GeminalMatrix reconstruct_matrix(const CanonicalGeminal& c);

}  // namespace fwedge
