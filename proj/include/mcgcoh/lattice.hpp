#pragma once

// Exact model of H_1(Sigma; Z) = Z^{2g} in a fixed symplectic basis
// (x_1, y_1, ..., x_g, y_g), with the intersection pairing i(x_j, y_j) = +1,
// the l^1 norm and the Dehn-twist transvections m -> m + n i(c, m) c.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mcgcoh/exact.hpp"

namespace mcgcoh {

/// Surface genus. Every public entry point works with g >= 3.
class Genus {
public:
    static constexpr int kMinimum = 3;

    explicit Genus(int g);

    int value() const { return g_; }
    std::size_t rank() const { return static_cast<std::size_t>(2 * g_); }

    friend bool operator==(Genus, Genus) = default;

private:
    int g_;
};

/// m = a_1 x_1 + b_1 y_1 + ... + a_g x_g + b_g y_g, stored interleaved as
/// (a_1, b_1, ..., a_g, b_g).
class HomologyClass {
public:
    HomologyClass(Genus g, std::vector<std::int64_t> coords);
    explicit HomologyClass(Genus g);  // zero class

    static HomologyClass basis(Genus g, std::size_t index);
    static HomologyClass x(Genus g, int j);  // 1-based, as in x_1 .. x_g
    static HomologyClass y(Genus g, int j);

    Genus genus() const { return Genus(static_cast<int>(coords_.size() / 2)); }
    std::size_t rank() const { return coords_.size(); }
    std::span<const std::int64_t> coords() const { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;

    HomologyClass operator-() const;
    friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
    friend HomologyClass operator-(const HomologyClass& a, const HomologyClass& b);
    friend HomologyClass operator*(std::int64_t k, const HomologyClass& a);

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
    friend auto operator<=>(const HomologyClass& a, const HomologyClass& b) { return a.coords_ <=> b.coords_; }

private:
    explicit HomologyClass(std::vector<std::int64_t> coords, int);
    std::vector<std::int64_t> coords_;
};

/// Whitespace separated "a1 b1 ... ag bg".
std::string to_string(const HomologyClass& m);

/// Human label in the basis names, e.g. "x1+2y3", "-y1", "0".
std::string basis_label(const HomologyClass& m);

struct HomologyClassHash {
    std::size_t operator()(const HomologyClass& m) const noexcept;
};

/// Square integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::size_t n, std::initializer_list<long> row_major);
    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const long> d);

    std::size_t dim() const { return n_; }
    Integer& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    IntMatrix transpose() const;
    bool is_identity() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_;
    std::vector<Integer> a_;
};

/// The standard form J with J(2j, 2j+1) = 1, J(2j+1, 2j) = -1, so that
/// i(m, n) = m^T J n.
IntMatrix standard_form(Genus g);

/// True iff M^T J M = J exactly. Throws DimensionError unless M is square of
/// even dimension 2g with g >= 3.
bool is_symplectic(const IntMatrix& m);

/// An element of Sp(2g, Z). Construction from an arbitrary matrix is checked.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(Genus g);  // identity
    static SymplecticMatrix from_matrix(IntMatrix m);

    Genus genus() const { return Genus(static_cast<int>(m_.dim() / 2)); }
    const IntMatrix& matrix() const { return m_; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    /// M^{-1} = -J M^T J.
    SymplecticMatrix inverse() const;
    SymplecticMatrix pow(std::int64_t n) const;
    bool is_identity() const { return m_.is_identity(); }

    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b);
    friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

private:
    struct Trusted {};
    SymplecticMatrix(IntMatrix m, Trusted) : m_(std::move(m)) {}
    IntMatrix m_;

    friend SymplecticMatrix twist_matrix(const HomologyClass& c);
};

/// Algebraic intersection number i(m, n).
std::int64_t intersection(const HomologyClass& m, const HomologyClass& n);

/// |m| = sum of |coordinates|.
std::int64_t norm1(const HomologyClass& m);

/// tau_c^n m = m + n i(c, m) c.
HomologyClass transvect(const HomologyClass& c, std::int64_t n, const HomologyClass& m);

/// Matrix of tau_c on H_1: I + c (c^T J).
SymplecticMatrix twist_matrix(const HomologyClass& c);

HomologyClass apply(const SymplecticMatrix& m, const HomologyClass& v);

/// A basis twist tau_j (j indexes x_1, y_1, ..., x_g, y_g) and a direction.
struct TwistChoice {
    std::size_t curve_index;
    int sign;  // +1 or -1

    friend bool operator==(const TwistChoice&, const TwistChoice&) = default;
};

/// Basis twist along whose ray n -> |tau_j^{sign * n} m| strictly increases.
/// Scans coordinates in index order and uses the first nonzero one; the
/// twist is along the dual basis curve. Prefers sign = +1 when both work.
/// Throws DomainError for m = 0.
TwistChoice choose_increasing_twist(const HomologyClass& m);

/// (m, tau_c^{sign} m, tau_c^{2 sign} m, ...) of the given length.
std::vector<HomologyClass> orbit_ray(const HomologyClass& c, int sign, const HomologyClass& m, std::size_t limit);

}  // namespace mcgcoh
