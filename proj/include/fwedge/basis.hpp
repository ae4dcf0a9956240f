#pragma once

// Determinant basis of the antisymmetric k-particle sectors H^∧k:
// bitmask determinants over orbitals 1..n, lexicographic ranking via the
// combinatorial number system, and sign-correct wedge composition.
//
// Normalization convention: the determinant |i1,...,ik⟩ is a unit vector,
// and wedge_lift absorbs all scale factors so that lifting a unit
// determinant yields a unit determinant. All values are immutable after
// construction and safe to share across threads.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fwedge {

using cplx = std::complex<double>;

inline constexpr int kMaxOrbitals = 63;  // single machine-word bitmask

/// Exact binomial coefficient. Valid for 0 <= n <= 63 where every C(n,k)
/// fits in 64 bits; arguments out of range return 0.
std::uint64_t binomial(int n, int k);

/// An ordered k-subset of the orbitals {1..n}, the basis atom of H^∧k.
/// Stored as a bitmask with bit i-1 <-> orbital i; the strictly increasing
/// canonical order fixes the sign convention.
class Determinant {
public:
    /// From strictly increasing 1-based orbitals. Throws on violations.
    Determinant(int n, std::span<const int> orbitals);
    Determinant(int n, std::initializer_list<int> orbitals);

    static Determinant from_mask(int n, std::uint64_t mask);

    int n() const noexcept { return n_; }
    int k() const noexcept;
    std::uint64_t mask() const noexcept { return mask_; }

    bool contains(int orbital) const noexcept;
    std::vector<int> orbitals() const;  // ascending, 1-based

    /// Lexicographic position among all k-subsets of {1..n}, 0-based.
    std::uint64_t rank() const;

    bool operator==(const Determinant& other) const noexcept {
        return n_ == other.n_ && mask_ == other.mask_;
    }

private:
    Determinant(int n, std::uint64_t mask, int) : n_(n), mask_(mask) {}
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// Inverse of Determinant::rank over the (n,k) sector.
Determinant unrank(int n, int k, std::uint64_t r);

/// |i1,...,ik⟩ with indices in arbitrary order: the canonical determinant
/// and the permutation parity, or nullopt when an index repeats.
std::optional<std::pair<Determinant, int>> signed_determinant(int n, std::span<const int> orbitals);
std::optional<std::pair<Determinant, int>> signed_determinant(int n, std::initializer_list<int> orbitals);

/// d ∧ p. Null encodes Pauli exclusion (p already occupied); otherwise the
/// sorted (k+1)-determinant and the sign (-1)^(#orbitals in d above p).
std::optional<std::pair<Determinant, int>> wedge_insert(const Determinant& d, int p);

/// Complex amplitude vector over the determinant basis of a fixed (n,k)
/// sector, indexed by determinant rank.
class WedgeVector {
public:
    WedgeVector(int n, int k);

    /// The unit basis vector along d.
    static WedgeVector unit(const Determinant& d);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t dim() const noexcept { return amp_.size(); }

    cplx& operator[](std::size_t idx) { return amp_[idx]; }
    const cplx& operator[](std::size_t idx) const { return amp_[idx]; }

    cplx& at(const Determinant& d);
    const cplx& at(const Determinant& d) const;

    const std::vector<cplx>& amplitudes() const noexcept { return amp_; }

    double norm() const;
    WedgeVector& operator+=(const WedgeVector& other);
    WedgeVector& operator-=(const WedgeVector& other);
    WedgeVector& operator*=(cplx scale);

private:
    int n_ = 0, k_ = 0;
    std::vector<cplx> amp_;
};

/// ⟨a|b⟩, conjugate-linear in a.
cplx inner(const WedgeVector& a, const WedgeVector& b);

/// ||a - b||.
double distance(const WedgeVector& a, const WedgeVector& b);

/// v ∧ p: linear extension of wedge_insert. Determinants containing p drop
/// out, so ||result|| <= ||v|| with equality iff none does.
WedgeVector wedge_lift(const WedgeVector& v, int p);

}  // namespace fwedge
