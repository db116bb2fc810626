#pragma once

// Finitely supported functions on the character torus U(1)^{2g}, written in
// the orthonormal character basis indexed by H_1. The mapping class group
// acts by permuting basis elements through its symplectic image.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "mcgcoh/exact.hpp"
#include "mcgcoh/lattice.hpp"

namespace mcgcoh {

/// Which space a SparseVector lives in: the mean-zero subspace l^2(H')
/// (the zero class is forbidden) or the full L^2 of the torus.
enum class Space { MeanZero, Full };

class SparseVector {
public:
    using Storage = std::map<HomologyClass, QComplex>;

    explicit SparseVector(Genus g, Space space = Space::MeanZero) : genus_(g), space_(space) {}

    static SparseVector basis(const HomologyClass& m, Space space = Space::MeanZero);

    Genus genus() const { return genus_; }
    Space space() const { return space_; }
    const Storage& coeffs() const { return coeffs_; }
    std::size_t support_size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient at m (zero when m is outside the support).
    QComplex operator[](const HomologyClass& m) const;

    /// Adds z to the coefficient at m; entries that cancel are erased.
    void add(const HomologyClass& m, const QComplex& z);
    void set(const HomologyClass& m, const QComplex& z);

    /// Squared l^2 norm.
    Rational norm_sq() const;

    SparseVector& operator+=(const SparseVector& o);
    SparseVector& operator-=(const SparseVector& o);
    SparseVector& operator*=(const QComplex& z);
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator-(SparseVector a) { return a *= QComplex(-1); }
    friend SparseVector operator*(const QComplex& z, SparseVector a) { return a *= z; }
    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    void check(const HomologyClass& m) const;

    Genus genus_;
    Space space_;
    Storage coeffs_;
};

/// A character rho of H_1, stored as its values on the basis in units of a
/// full turn: rho(m) = exp(2 pi i <turns, m>). Exact rational turns keep the
/// action of integral matrices exact; only evaluation goes through floats.
class TorusPoint {
public:
    TorusPoint(Genus g, std::vector<Rational> turns);

    Genus genus() const { return Genus(static_cast<int>(turns_.size() / 2)); }
    const std::vector<Rational>& turns() const { return turns_; }

    /// (z_1, w_1, ..., z_g, w_g).
    std::vector<std::complex<double>> values() const;

    /// Phase of rho(m), reduced to [0, 1).
    Rational phase(const HomologyClass& m) const;
    std::complex<double> character(const HomologyClass& m) const;

    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

private:
    std::vector<Rational> turns_;
};

/// Relabels m -> M m; coefficients unchanged.
SparseVector act(const SymplecticMatrix& m, const SparseVector& v);

/// Linear in the first slot, conjugate-linear in the second.
QComplex inner(const SparseVector& v, const SparseVector& w);

std::complex<double> evaluate(const SparseVector& v, const TorusPoint& rho);

/// (M . rho)(m) = rho(M^{-1} m).
TorusPoint torus_action(const SymplecticMatrix& m, const TorusPoint& rho);

/// Mean of evaluate(v, .) over the uniform grid of N^{2g} torus points with
/// angles 2 pi k / N. Throws DomainError unless N > 2 max|coordinate|.
std::complex<double> grid_mean(const SparseVector& v, std::int64_t n);

/// F_k = max over the support of |m|^k |f_m| (0 when empty).
Magnitude decay_constant(const SparseVector& v, unsigned k);

}  // namespace mcgcoh
