#include "fwedge/basis.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fwedge {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;  // intermediate products can exceed 64 bits
    for (int i = 0; i < k; ++i) {
        c *= static_cast<unsigned>(n - i);
        c /= static_cast<unsigned>(i + 1);
    }
    return static_cast<std::uint64_t>(c);
}

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxOrbitals)
        throw std::invalid_argument("ambient dimension n must be in 0.." + std::to_string(kMaxOrbitals));
}

}  // namespace

Determinant::Determinant(int n, std::span<const int> orbitals) : n_(n) {
    check_n(n);
    int prev = 0;
    for (int p : orbitals) {
        if (p < 1 || p > n) throw std::invalid_argument("orbital index outside 1..n");
        if (p <= prev) throw std::invalid_argument("orbitals must be strictly increasing");
        mask_ |= std::uint64_t{1} << (p - 1);
        prev = p;
    }
}

Determinant::Determinant(int n, std::initializer_list<int> orbitals)
    : Determinant(n, std::span<const int>(orbitals.begin(), orbitals.size())) {}

Determinant Determinant::from_mask(int n, std::uint64_t mask) {
    check_n(n);
    if (n < kMaxOrbitals && (mask >> n) != 0)
        throw std::invalid_argument("determinant mask has bits above n");
    return Determinant(n, mask, 0);
}

int Determinant::k() const noexcept { return std::popcount(mask_); }

bool Determinant::contains(int orbital) const noexcept {
    if (orbital < 1 || orbital > n_) return false;
    return (mask_ >> (orbital - 1)) & 1u;
}

std::vector<int> Determinant::orbitals() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k()));
    std::uint64_t m = mask_;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

std::uint64_t Determinant::rank() const {
    // Combinatorial number system: count the k-subsets that precede this
    // one in lexicographic order, position by position.
    const int kk = k();
    std::uint64_t r = 0;
    int slot = 1;   // 1-based position within the subset
    int prev = 0;   // orbital chosen at the previous position
    std::uint64_t m = mask_;
    while (m) {
        const int c = std::countr_zero(m) + 1;
        for (int v = prev + 1; v < c; ++v) r += binomial(n_ - v, kk - slot);
        prev = c;
        ++slot;
        m &= m - 1;
    }
    return r;
}

Determinant unrank(int n, int k, std::uint64_t r) {
    check_n(n);
    if (k < 0 || k > n) throw std::invalid_argument("unrank: k outside 0..n");
    if (r >= binomial(n, k)) throw std::out_of_range("unrank: rank outside sector");
    std::uint64_t mask = 0;
    int prev = 0;
    for (int slot = 1; slot <= k; ++slot) {
        int v = prev + 1;
        for (;; ++v) {
            const std::uint64_t block = binomial(n - v, k - slot);
            if (r < block) break;
            r -= block;
        }
        mask |= std::uint64_t{1} << (v - 1);
        prev = v;
    }
    return Determinant::from_mask(n, mask);
}

std::optional<std::pair<Determinant, int>> signed_determinant(int n, std::span<const int> orbitals) {
    check_n(n);
    std::uint64_t mask = 0;
    int sign = 1;
    for (int p : orbitals) {
        if (p < 1 || p > n) throw std::invalid_argument("orbital index outside 1..n");
        const std::uint64_t bit = std::uint64_t{1} << (p - 1);
        if (mask & bit) return std::nullopt;
        // Parity of moving p past the already-placed orbitals above it.
        const int above = std::popcount(mask >> p);
        if (above & 1) sign = -sign;
        mask |= bit;
    }
    return std::make_pair(Determinant::from_mask(n, mask), sign);
}

std::optional<std::pair<Determinant, int>> signed_determinant(int n, std::initializer_list<int> orbitals) {
    return signed_determinant(n, std::span<const int>(orbitals.begin(), orbitals.size()));
}

std::optional<std::pair<Determinant, int>> wedge_insert(const Determinant& d, int p) {
    if (p < 1 || p > d.n()) throw std::invalid_argument("orbital index outside 1..n");
    const std::uint64_t bit = std::uint64_t{1} << (p - 1);
    if (d.mask() & bit) return std::nullopt;
    const int above = std::popcount(d.mask() >> p);
    return std::make_pair(Determinant::from_mask(d.n(), d.mask() | bit), (above & 1) ? -1 : 1);
}

namespace {

std::size_t sector_dim(int n, int k) {
    check_n(n);
    if (k < 0 || k > n) throw std::invalid_argument("sector: k outside 0..n");
    const std::uint64_t d = binomial(n, k);
    if (d > (std::uint64_t{1} << 22))
        throw std::length_error("sector dimension too large for dense storage");
    return static_cast<std::size_t>(d);
}

}  // namespace

WedgeVector::WedgeVector(int n, int k) : n_(n), k_(k), amp_(sector_dim(n, k)) {}

WedgeVector WedgeVector::unit(const Determinant& d) {
    WedgeVector v(d.n(), d.k());
    v.amp_[static_cast<std::size_t>(d.rank())] = 1.0;
    return v;
}

cplx& WedgeVector::at(const Determinant& d) {
    if (d.n() != n_ || d.k() != k_) throw std::invalid_argument("determinant from a different sector");
    return amp_[static_cast<std::size_t>(d.rank())];
}

const cplx& WedgeVector::at(const Determinant& d) const {
    return const_cast<WedgeVector*>(this)->at(d);
}

double WedgeVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& other) {
    if (n_ != other.n_ || k_ != other.k_) throw std::invalid_argument("sector mismatch in +=");
    for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += other.amp_[i];
    return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& other) {
    if (n_ != other.n_ || k_ != other.k_) throw std::invalid_argument("sector mismatch in -=");
    for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] -= other.amp_[i];
    return *this;
}

WedgeVector& WedgeVector::operator*=(cplx scale) {
    for (auto& a : amp_) a *= scale;
    return *this;
}

cplx inner(const WedgeVector& a, const WedgeVector& b) {
    if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("sector mismatch in inner");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double distance(const WedgeVector& a, const WedgeVector& b) {
    if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("sector mismatch in distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

WedgeVector wedge_lift(const WedgeVector& v, int p) {
    WedgeVector out(v.n(), v.k() + 1);
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        const cplx amp = v[idx];
        if (amp == cplx{}) continue;
        const auto ins = wedge_insert(unrank(v.n(), v.k(), idx), p);
        if (!ins) continue;  // Pauli exclusion
        out[static_cast<std::size_t>(ins->first.rank())] += static_cast<double>(ins->second) * amp;
    }
    return out;
}

}  // namespace fwedge
