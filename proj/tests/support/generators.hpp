#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcgcoh/cohomology.hpp"

namespace mcgcoh::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return integer(0, 1) == 1; }

    /// Uniform-ish class with norm1 <= max_norm: spread a random budget over
    /// random coordinates with random signs.
    HomologyClass homology(Genus g, std::int64_t max_norm, bool nonzero = false) {
        while (true) {
            std::vector<std::int64_t> c(g.rank(), 0);
            std::int64_t budget = integer(nonzero ? 1 : 0, max_norm);
            while (budget > 0) {
                std::int64_t step = integer(1, budget);
                c[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(g.rank()) - 1))] +=
                    coin() ? step : -step;
                budget -= step;
            }
            HomologyClass m(g, std::move(c));
            if (!nonzero || !m.is_zero()) return m;
        }
    }

    /// Box-bounded class: each coordinate in [-radius, radius].
    HomologyClass boxed(Genus g, std::int64_t radius) {
        std::vector<std::int64_t> c(g.rank());
        for (auto& x : c) x = integer(-radius, radius);
        return HomologyClass(g, std::move(c));
    }

    Rational rational(std::int64_t bound) {
        std::int64_t num = 0;
        while (num == 0) num = integer(-bound, bound);
        Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(integer(1, bound))));
        q.canonicalize();
        return q;
    }

    QComplex complex(std::int64_t bound, bool real_only = false) {
        if (real_only) return QComplex(rational(bound));
        return QComplex(coin() ? rational(bound) : Rational(0), rational(bound));
    }

    /// Mean-zero vector with up to `support` points inside the box.
    SparseVector vector(Genus g, std::size_t support, std::int64_t radius, std::int64_t bound,
                        bool real_only = false) {
        SparseVector v(g);
        const std::size_t target = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(support)));
        std::size_t guard = 0;
        while (v.support_size() < target && guard++ < 50 * support) {
            HomologyClass m = boxed(g, radius);
            if (m.is_zero()) continue;
            v.set(m, complex(bound, real_only));
        }
        return v;
    }

    Rational turn() {
        Rational q(Integer(static_cast<long>(integer(0, 999'999))), Integer(1'000'000L));
        q.canonicalize();
        return q;
    }

    TorusPoint torus(Genus g) {
        std::vector<Rational> t(g.rank());
        for (auto& x : t) x = turn();
        return TorusPoint(g, std::move(t));
    }

    /// Random word over the ids of a table.
    TwistWord word(const CurveTable& table, std::size_t max_len, std::int64_t max_exp = 2) {
        std::vector<Letter> letters;
        const auto n = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_len)));
        for (std::size_t i = 0; i < n; ++i) {
            const auto& c = table.curves()[static_cast<std::size_t>(
                integer(0, static_cast<std::int64_t>(table.size()) - 1))];
            std::int64_t e = integer(1, max_exp);
            letters.push_back({c.id, coin() ? e : -e});
        }
        return TwistWord(std::move(letters));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Table of random non-separating curves (ids c0, c1, ...).
inline CurveTable random_curves(Gen& gen, Genus g, std::size_t count, std::int64_t max_norm) {
    CurveTable t(g);
    for (std::size_t i = 0; i < count; ++i) t.add(Curve("c" + std::to_string(i), gen.homology(g, max_norm, true)));
    return t;
}

}  // namespace mcgcoh::testing
