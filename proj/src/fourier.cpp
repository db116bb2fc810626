#include "mcgcoh/fourier.hpp"

#include <cmath>
#include <numbers>

#include "mcgcoh/errors.hpp"

namespace mcgcoh {

namespace {

Rational frac_part(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

std::complex<double> unit(const Rational& turns) {
    const double angle = 2.0 * std::numbers::pi * frac_part(turns).get_d();
    return {std::cos(angle), std::sin(angle)};
}

void require_same_genus(Genus a, Genus b) {
    if (a != b) throw DimensionError("genus mismatch");
}

}  // namespace

SparseVector SparseVector::basis(const HomologyClass& m, Space space) {
    SparseVector v(m.genus(), space);
    v.set(m, QComplex(1));
    return v;
}

void SparseVector::check(const HomologyClass& m) const {
    if (m.genus() != genus_) throw DimensionError("support point has the wrong genus");
    if (space_ == Space::MeanZero && m.is_zero()) {
        throw DomainError("the zero class is not in the mean-zero space");
    }
}

QComplex SparseVector::operator[](const HomologyClass& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? QComplex() : it->second;
}

void SparseVector::add(const HomologyClass& m, const QComplex& z) {
    if (z.is_zero()) return;
    check(m);
    auto [it, inserted] = coeffs_.try_emplace(m, z);
    if (!inserted) {
        it->second += z;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void SparseVector::set(const HomologyClass& m, const QComplex& z) {
    check(m);
    if (z.is_zero()) {
        coeffs_.erase(m);
    } else {
        coeffs_.insert_or_assign(m, z);
    }
}

Rational SparseVector::norm_sq() const {
    Rational s = 0;
    for (const auto& [m, z] : coeffs_) s += z.norm_sq();
    return s;
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
    require_same_genus(genus_, o.genus_);
    for (const auto& [m, z] : o.coeffs_) add(m, z);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
    require_same_genus(genus_, o.genus_);
    for (const auto& [m, z] : o.coeffs_) add(m, -z);
    return *this;
}

SparseVector& SparseVector::operator*=(const QComplex& z) {
    if (z.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [m, c] : coeffs_) c = c * z;
    return *this;
}

// ---------------------------------------------------------------------------

TorusPoint::TorusPoint(Genus g, std::vector<Rational> turns) : turns_(std::move(turns)) {
    if (turns_.size() != g.rank()) throw DimensionError("torus point needs 2g angles");
    for (auto& t : turns_) t = frac_part(t);
}

std::vector<std::complex<double>> TorusPoint::values() const {
    std::vector<std::complex<double>> out;
    out.reserve(turns_.size());
    for (const auto& t : turns_) out.push_back(unit(t));
    return out;
}

Rational TorusPoint::phase(const HomologyClass& m) const {
    if (m.rank() != turns_.size()) throw DimensionError("genus mismatch");
    Rational p = 0;
    for (std::size_t k = 0; k < turns_.size(); ++k) {
        if (m[k] != 0) p += turns_[k] * static_cast<long>(m[k]);
    }
    return frac_part(p);
}

std::complex<double> TorusPoint::character(const HomologyClass& m) const { return unit(phase(m)); }

// ---------------------------------------------------------------------------

SparseVector act(const SymplecticMatrix& m, const SparseVector& v) {
    require_same_genus(m.genus(), v.genus());
    SparseVector out(v.genus(), v.space());
    for (const auto& [cls, z] : v.coeffs()) out.set(apply(m, cls), z);
    return out;
}

QComplex inner(const SparseVector& v, const SparseVector& w) {
    require_same_genus(v.genus(), w.genus());
    const auto& small = v.support_size() <= w.support_size() ? v : w;
    const auto& large = v.support_size() <= w.support_size() ? w : v;
    QComplex s;
    for (const auto& [m, z] : small.coeffs()) {
        auto it = large.coeffs().find(m);
        if (it == large.coeffs().end()) continue;
        const QComplex& vm = (&small == &v) ? z : it->second;
        const QComplex& wm = (&small == &v) ? it->second : z;
        s += vm * wm.conj();
    }
    return s;
}

std::complex<double> evaluate(const SparseVector& v, const TorusPoint& rho) {
    require_same_genus(v.genus(), rho.genus());
    std::complex<double> s = 0;
    for (const auto& [m, z] : v.coeffs()) {
        s += std::complex<double>(z.re.get_d(), z.im.get_d()) * rho.character(m);
    }
    return s;
}

TorusPoint torus_action(const SymplecticMatrix& m, const TorusPoint& rho) {
    require_same_genus(m.genus(), rho.genus());
    // rho'(e_s) = rho(M^{-1} e_s) = sum_r turns_r (M^{-1})_{r s}
    const SymplecticMatrix inv = m.inverse();
    const auto& t = rho.turns();
    std::vector<Rational> out(t.size());
    for (std::size_t s = 0; s < t.size(); ++s) {
        Rational acc = 0;
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (inv(r, s) != 0) acc += t[r] * Rational(inv(r, s));
        }
        out[s] = acc;
    }
    return TorusPoint(rho.genus(), std::move(out));
}

namespace {

void require_no_aliasing(const SparseVector& v, std::int64_t n) {
    std::int64_t largest = 0;
    for (const auto& [m, z] : v.coeffs())
        for (auto c : m.coords()) largest = std::max(largest, c < 0 ? -c : c);
    if (n <= 2 * largest) {
        throw DomainError("grid size " + std::to_string(n) + " aliases coordinates up to " +
                          std::to_string(largest) + " (need N > " + std::to_string(2 * largest) + ")");
    }
}

}  // namespace

std::complex<double> grid_mean(const SparseVector& v, std::int64_t n) {
    require_no_aliasing(v, n);
    // The grid is a product of 2g cyclic grids and each character factors
    // coordinatewise, so the mean of m~ is a product of 1-d means.
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::complex<double> total = 0;
    for (const auto& [m, z] : v.coeffs()) {
        std::complex<double> prod = 1;
        for (auto c : m.coords()) {
            std::complex<double> s = 0;
            for (std::int64_t t = 0; t < n; ++t) {
                const double angle = step * static_cast<double>((c * t) % n);
                s += std::complex<double>(std::cos(angle), std::sin(angle));
            }
            prod *= s / static_cast<double>(n);
        }
        total += std::complex<double>(z.re.get_d(), z.im.get_d()) * prod;
    }
    return total;
}

Magnitude decay_constant(const SparseVector& v, unsigned k) {
    Rational best = 0;
    for (const auto& [m, z] : v.coeffs()) {
        Integer weight;
        mpz_ui_pow_ui(weight.get_mpz_t(), static_cast<unsigned long>(norm1(m)), 2UL * k);
        Rational val = z.norm_sq() * Rational(weight);
        if (val > best) best = val;
    }
    return Magnitude::from_squared(best);
}

}  // namespace mcgcoh
