#include "mcgcoh/lattice.hpp"

#include <cstdlib>
#include <limits>

#include "mcgcoh/errors.hpp"

namespace mcgcoh {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("homology coordinate overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("homology coordinate overflow");
    return r;
}

std::int64_t checked_abs(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("homology coordinate overflow");
    return a < 0 ? -a : a;
}

void require_same_rank(const HomologyClass& a, const HomologyClass& b) {
    if (a.rank() != b.rank()) {
        throw DimensionError("genus mismatch: " + std::to_string(a.rank() / 2) + " vs " +
                             std::to_string(b.rank() / 2));
    }
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw OverflowError("matrix action leaves the int64 range");
    return z.get_si();
}

}  // namespace

Genus::Genus(int g) : g_(g) {
    if (g < kMinimum) throw DomainError("genus < 3 (got " + std::to_string(g) + ")");
}

HomologyClass::HomologyClass(Genus g, std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    if (coords_.size() != g.rank()) {
        throw DimensionError("homology class needs " + std::to_string(g.rank()) + " coordinates, got " +
                             std::to_string(coords_.size()));
    }
}

HomologyClass::HomologyClass(Genus g) : coords_(g.rank(), 0) {}

HomologyClass::HomologyClass(std::vector<std::int64_t> coords, int) : coords_(std::move(coords)) {}

HomologyClass HomologyClass::basis(Genus g, std::size_t index) {
    if (index >= g.rank()) throw DimensionError("basis index out of range");
    HomologyClass m(g);
    m.coords_[index] = 1;
    return m;
}

HomologyClass HomologyClass::x(Genus g, int j) {
    if (j < 1 || j > g.value()) throw DimensionError("x_j index out of range");
    return basis(g, static_cast<std::size_t>(2 * (j - 1)));
}

HomologyClass HomologyClass::y(Genus g, int j) {
    if (j < 1 || j > g.value()) throw DimensionError("y_j index out of range");
    return basis(g, static_cast<std::size_t>(2 * (j - 1) + 1));
}

bool HomologyClass::is_zero() const {
    for (auto c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

HomologyClass HomologyClass::operator-() const {
    std::vector<std::int64_t> r(coords_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(-1, coords_[i]);
    return HomologyClass(std::move(r), 0);
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    require_same_rank(a, b);
    std::vector<std::int64_t> r(a.rank());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.coords_[i], b.coords_[i]);
    return HomologyClass(std::move(r), 0);
}

HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) { return a + (-b); }

HomologyClass operator*(std::int64_t k, const HomologyClass& a) {
    std::vector<std::int64_t> r(a.rank());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(k, a.coords_[i]);
    return HomologyClass(std::move(r), 0);
}

std::string to_string(const HomologyClass& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        if (i) s += ' ';
        s += std::to_string(m[i]);
    }
    return s;
}

std::string basis_label(const HomologyClass& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rank(); ++i) {
        std::int64_t c = m[i];
        if (c == 0) continue;
        if (c < 0) {
            s += '-';
        } else if (!s.empty()) {
            s += '+';
        }
        if (c != 1 && c != -1) s += std::to_string(checked_abs(c));
        s += (i % 2 == 0) ? 'x' : 'y';
        s += std::to_string(i / 2 + 1);
    }
    return s.empty() ? "0" : s;
}

std::size_t HomologyClassHash::operator()(const HomologyClass& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : m.coords()) {
        h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

IntMatrix::IntMatrix(std::size_t n, std::initializer_list<long> row_major) : IntMatrix(n) {
    if (row_major.size() != n * n) throw DimensionError("matrix literal has wrong size");
    std::size_t i = 0;
    for (long v : row_major) a_[i++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const long> d) {
    IntMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_identity() const {
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw DimensionError("matrix dimension mismatch");
    const std::size_t n = a.n_;
    IntMatrix p(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& ark = a(r, k);
            if (ark == 0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (b(k, c) != 0) p(r, c) += ark * b(k, c);
            }
        }
    }
    return p;
}

IntMatrix standard_form(Genus g) {
    IntMatrix j(g.rank());
    for (std::size_t k = 0; k < g.rank(); k += 2) {
        j(k, k + 1) = 1;
        j(k + 1, k) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& m) {
    if (m.dim() % 2 != 0) throw DimensionError("symplectic test needs even dimension");
    Genus g(static_cast<int>(m.dim() / 2));
    IntMatrix j = standard_form(g);
    return m.transpose() * j * m == j;
}

SymplecticMatrix::SymplecticMatrix(Genus g) : m_(IntMatrix::identity(g.rank())) {}

SymplecticMatrix SymplecticMatrix::from_matrix(IntMatrix m) {
    if (!is_symplectic(m)) throw DomainError("matrix is not symplectic");
    return SymplecticMatrix(std::move(m), Trusted{});
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    IntMatrix j = standard_form(genus());
    IntMatrix inv = j * m_.transpose() * j;
    for (std::size_t r = 0; r < inv.dim(); ++r)
        for (std::size_t c = 0; c < inv.dim(); ++c) inv(r, c) = -inv(r, c);
    return SymplecticMatrix(std::move(inv), Trusted{});
}

SymplecticMatrix SymplecticMatrix::pow(std::int64_t n) const {
    SymplecticMatrix base = n < 0 ? inverse() : *this;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    SymplecticMatrix acc(genus());
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    return SymplecticMatrix(a.m_ * b.m_, SymplecticMatrix::Trusted{});
}

// ---------------------------------------------------------------------------

std::int64_t intersection(const HomologyClass& m, const HomologyClass& n) {
    require_same_rank(m, n);
    std::int64_t s = 0;
    for (std::size_t k = 0; k < m.rank(); k += 2) {
        s = checked_add(s, checked_mul(m[k], n[k + 1]));
        s = checked_add(s, -checked_mul(m[k + 1], n[k]));
    }
    return s;
}

std::int64_t norm1(const HomologyClass& m) {
    std::int64_t s = 0;
    for (auto c : m.coords()) s = checked_add(s, checked_abs(c));
    return s;
}

HomologyClass transvect(const HomologyClass& c, std::int64_t n, const HomologyClass& m) {
    std::int64_t k = checked_mul(n, intersection(c, m));
    if (k == 0) return m;
    return m + k * c;
}

SymplecticMatrix twist_matrix(const HomologyClass& c) {
    // column s of M is tau_c(e_s) = e_s + i(c, e_s) c
    const std::size_t n = c.rank();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::int64_t pair = intersection(c, HomologyClass::basis(c.genus(), s));
        if (pair == 0) continue;
        for (std::size_t r = 0; r < n; ++r) m(r, s) += Integer(static_cast<long>(pair)) * static_cast<long>(c[r]);
    }
    return SymplecticMatrix(std::move(m), SymplecticMatrix::Trusted{});
}

HomologyClass apply(const SymplecticMatrix& m, const HomologyClass& v) {
    const std::size_t n = m.matrix().dim();
    if (n != v.rank()) throw DimensionError("matrix/class dimension mismatch");
    std::vector<std::int64_t> out(n);
    Integer acc;
    for (std::size_t r = 0; r < n; ++r) {
        acc = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (v[c] != 0) acc += m(r, c) * static_cast<long>(v[c]);
        }
        out[r] = to_int64(acc);
    }
    return HomologyClass(v.genus(), std::move(out));
}

TwistChoice choose_increasing_twist(const HomologyClass& m) {
    for (std::size_t k = 0; k < m.rank(); ++k) {
        if (m[k] == 0) continue;
        if (k % 2 == 0) {
            // a_j != 0: twist along y_j. i(y_j, m) = -a_j, so b_j -> b_j - sign*n*a_j.
            // sign = +1 grows |b_j| when a_j, b_j have opposite signs (or b_j = 0),
            // and also when |a_j| > 2|b_j| since the first step already jumps past
            // zero; otherwise sign = -1.
            const std::int64_t a = m[k], b = m[k + 1];
            const bool same_sign = (a > 0 && b > 0) || (a < 0 && b < 0);
            if (!same_sign || checked_abs(a) > checked_mul(2, checked_abs(b))) return {k + 1, +1};
            return {k + 1, -1};
        }
        // b_j != 0 with a_j = 0 (earlier coordinates vanish): twist along x_j,
        // a_j -> a_j + sign*n*b_j, and any sign works; take +1.
        return {k - 1, +1};
    }
    throw DomainError("choose_increasing_twist needs a nonzero class");
}

std::vector<HomologyClass> orbit_ray(const HomologyClass& c, int sign, const HomologyClass& m, std::size_t limit) {
    if (sign != 1 && sign != -1) throw DomainError("ray sign must be +1 or -1");
    if (limit == 0) throw DomainError("orbit_ray limit must be >= 1");
    std::vector<HomologyClass> ray;
    ray.reserve(limit);
    ray.push_back(m);
    for (std::size_t n = 1; n < limit; ++n) ray.push_back(transvect(c, sign, ray.back()));
    return ray;
}

}  // namespace mcgcoh
