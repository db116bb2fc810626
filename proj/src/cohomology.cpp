#include "mcgcoh/cohomology.hpp"

#include <algorithm>
#include <set>

#include "mcgcoh/errors.hpp"

namespace mcgcoh {

Cocycle::Cocycle(GeneratorSet gens, Values values, std::vector<Pair> declared_pairs)
    : gens_(std::move(gens)), values_(std::move(values)), pairs_(std::move(declared_pairs)) {
    for (const auto& c : gens_.curves()) {
        if (!c.separating && c.cls.is_zero()) {
            throw DomainError("non-separating generator '" + c.id + "' has the zero class");
        }
    }
    for (auto it = values_.begin(); it != values_.end();) {
        if (!gens_.contains(it->first)) throw LookupError("value given for unknown generator '" + it->first + "'");
        if (it->second.genus() != gens_.genus()) throw DimensionError("cocycle value has the wrong genus");
        if (it->second.space() != Space::MeanZero) {
            throw DomainError("cocycle values must lie in the mean-zero space");
        }
        it = it->second.is_zero() ? values_.erase(it) : std::next(it);
    }
    for (const auto& [a, b] : pairs_) {
        gens_.at(a);
        gens_.at(b);
    }
}

SparseVector Cocycle::value(const std::string& id) const {
    gens_.at(id);
    auto it = values_.find(id);
    return it == values_.end() ? SparseVector(genus()) : it->second;
}

Cocycle Cocycle::with_value(const std::string& id, SparseVector v) const {
    Values vals = values_;
    vals.insert_or_assign(id, std::move(v));
    return Cocycle(gens_, std::move(vals), pairs_);
}

// ---------------------------------------------------------------------------

std::vector<SparseVector> extend_terms(const Cocycle& u, const TwistWord& w) {
    std::vector<SparseVector> terms;
    SymplecticMatrix prefix(u.genus());
    for (const auto& l : w.letters()) {
        const Curve& c = u.gens().at(l.curve);
        const SymplecticMatrix step = twist_matrix(c.cls).pow(l.exponent > 0 ? 1 : -1);
        // u(tau^{-1}) = -tau^{-1} u(tau)
        const SparseVector unit = l.exponent > 0 ? u.value(l.curve) : -act(step, u.value(l.curve));
        const std::int64_t reps = l.exponent > 0 ? l.exponent : -l.exponent;
        for (std::int64_t i = 0; i < reps; ++i) {
            terms.push_back(act(prefix, unit));
            prefix = prefix * step;
        }
    }
    return terms;
}

SparseVector extend(const Cocycle& u, const TwistWord& w) {
    SparseVector sum(u.genus());
    for (const auto& t : extend_terms(u, w)) sum += t;
    return sum;
}

namespace {

void require_generators(const Cocycle& u, const RelationInstance& rel) {
    for (const auto& c : rel.curves.curves()) {
        const Curve& g = u.gens().at(c.id);
        if (!(g.cls == c.cls)) {
            throw MetadataError(rel.name + ": curve '" + c.id + "' has a different class than the generator");
        }
    }
}

}  // namespace

Rational relation_residual(const Cocycle& u, const RelationInstance& rel) {
    require_generators(u, rel);
    return (extend(u, rel.lhs) - extend(u, rel.rhs)).norm_sq();
}

std::vector<const RelationInstance*> applicable_relations(const Cocycle& u,
                                                          const std::vector<RelationInstance>& catalog) {
    std::vector<const RelationInstance*> out;
    for (const auto& rel : catalog) {
        const bool ok = std::all_of(rel.curves.curves().begin(), rel.curves.curves().end(), [&](const Curve& c) {
            const Curve* g = u.gens().find(c.id);
            return g && g->cls == c.cls;
        });
        if (ok) out.push_back(&rel);
    }
    return out;
}

Cocycle coboundary(const SparseVector& v, const GeneratorSet& gens) {
    if (v.space() != Space::MeanZero) throw DomainError("coboundary needs a mean-zero vector");
    Cocycle::Values values;
    for (const auto& c : gens.curves()) values.emplace(c.id, v - act(twist_matrix(c.cls), v));
    return Cocycle(gens, std::move(values));
}

SparseVector project_fixed(const HomologyClass& c, const SparseVector& v) {
    SparseVector out(v.genus(), v.space());
    for (const auto& [m, z] : v.coeffs()) {
        if (intersection(c, m) == 0) out.set(m, z);
    }
    return out;
}

SparseVector s_vector(const Cocycle& u, const std::string& curve) {
    const Curve& c = u.gens().at(curve);
    return project_fixed(c.cls, u.value(curve));
}

SparseVector s_vector(const Cocycle& u, const HomologyClass& cls, const TwistWord& twist_of_c) {
    if (!(word_matrix(twist_of_c, u.gens()) == twist_matrix(cls))) {
        throw DomainError("word does not act as the twist on " + basis_label(cls));
    }
    return project_fixed(cls, extend(u, twist_of_c));
}

QComplex c_pairing(const Cocycle& u, const std::string& a, const std::string& b) {
    if (a == b) throw DomainError("(" + a + ", " + a + ") is not a non-separating pair");
    const Curve& ca = u.gens().at(a);
    const Curve& cb = u.gens().at(b);
    if (ca.separating || cb.separating) throw DomainError("c-pairing needs non-separating curves");
    const bool declared = std::any_of(u.declared_pairs().begin(), u.declared_pairs().end(), [&](const auto& p) {
        return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
    if (!declared) throw DomainError("pair (" + a + ", " + b + ") is not declared jointly non-separating");
    return inner(s_vector(u, a), s_vector(u, b));
}

// ---------------------------------------------------------------------------

namespace {

struct BasisIncrements {
    std::vector<HomologyClass> curves;      // x_1, y_1, ..., x_g, y_g
    std::vector<SparseVector> increments;   // index 2j + (sign < 0)
    std::vector<std::int64_t> max_norm;     // largest |n| in each increment's support

    const SparseVector& at(std::size_t j, int sign) const { return increments[2 * j + (sign < 0 ? 1 : 0)]; }
    std::int64_t reach(std::size_t j, int sign) const { return max_norm[2 * j + (sign < 0 ? 1 : 0)]; }
};

BasisIncrements basis_increments(const Cocycle& u) {
    const Genus g = u.genus();
    BasisIncrements b;
    for (std::size_t k = 0; k < g.rank(); ++k) {
        const HomologyClass e = HomologyClass::basis(g, k);
        const auto& curves = u.gens().curves();
        auto it = std::find_if(curves.begin(), curves.end(),
                               [&](const Curve& c) { return !c.separating && c.cls == e; });
        if (it == curves.end()) {
            throw DomainError("solver needs the basis curve " + basis_label(e) + " among the generators");
        }
        const SparseVector plus = u.value(it->id);
        SparseVector minus = -act(twist_matrix(e).inverse(), plus);
        b.curves.push_back(e);
        b.increments.push_back(plus);
        b.increments.push_back(std::move(minus));
    }
    for (const auto& v : b.increments) {
        std::int64_t r = 0;
        for (const auto& [m, z] : v.coeffs()) r = std::max(r, norm1(m));
        b.max_norm.push_back(r);
    }
    return b;
}

// Points m whose chosen ray (j, sign) passes through the support of the
// increment u(tau_j^sign): walk back from each support point while the norm
// strictly drops. Any other m has an empty telescoping sum.
std::set<HomologyClass> candidate_support(const BasisIncrements& b) {
    std::set<HomologyClass> out;
    for (std::size_t j = 0; j < b.curves.size(); ++j) {
        for (int sign : {+1, -1}) {
            for (const auto& [p, z] : b.at(j, sign).coeffs()) {
                HomologyClass q = p;
                while (true) {
                    HomologyClass prev = transvect(b.curves[j], -sign, q);
                    if (norm1(prev) >= norm1(q)) break;
                    q = std::move(prev);
                    if (choose_increasing_twist(q) == TwistChoice{j, sign}) out.insert(q);
                }
            }
        }
    }
    return out;
}

}  // namespace

SolveReport solve_coboundary(const Cocycle& u, const std::vector<RelationInstance>& catalog, unsigned kmax) {
    for (const RelationInstance* rel : applicable_relations(u, catalog)) {
        if (sgn(relation_residual(u, *rel)) != 0) {
            throw CocycleError("generator values violate relation '" + rel->name + "'");
        }
    }

    const BasisIncrements b = basis_increments(u);
    SolveReport rep{SparseVector(u.genus()), 0, b.increments, {}};

    // u(tau_j) = f - tau_j f has coefficient g+_n = f_n - f_{tau_j^{-1} n}, so
    //   f_{tau_j^R m} - f_m = sum_{r=1}^R g+_{tau_j^r m}
    // and f_m = -sum_{r>=1} g+_{tau_j^r m} because f vanishes far out on the
    // ray. With g-_n = f_n - f_{tau_j n} from u(tau_j^{-1}) the same argument
    // gives f_m = -sum_{r>=1} g-_{tau_j^{-r} m}.
    for (const HomologyClass& m : candidate_support(b)) {
        const TwistChoice ch = choose_increasing_twist(m);
        const SparseVector& inc = b.at(ch.curve_index, ch.sign);
        const std::int64_t reach = b.reach(ch.curve_index, ch.sign);
        QComplex fm;
        HomologyClass q = transvect(b.curves[ch.curve_index], ch.sign, m);
        while (norm1(q) <= reach) {
            fm -= inc[q];
            q = transvect(b.curves[ch.curve_index], ch.sign, q);
        }
        rep.f.set(m, fm);
    }

    for (std::size_t j = 0; j < b.curves.size(); ++j) {
        for (int sign : {+1, -1}) {
            SparseVector diff = rep.f - act(twist_matrix(b.curves[j]).pow(sign), rep.f) - b.at(j, sign);
            Rational r = diff.norm_sq();
            if (r > rep.residual) rep.residual = r;
        }
    }

    for (unsigned k = 0; k <= kmax; ++k) {
        Magnitude gk;
        for (const auto& inc : b.increments) gk = std::max(gk, decay_constant(inc, k + 1));
        rep.decay.push_back({k, decay_constant(rep.f, k), gk});
    }
    return rep;
}

std::vector<SmoothnessCheck> smoothness_report(const SolveReport& rep, unsigned kmax) {
    if (sgn(rep.residual) != 0) throw DomainError("smoothness report needs an exact solution (residual 0)");
    std::vector<SmoothnessCheck> out;
    for (unsigned k = 2; k <= kmax; ++k) {
        Magnitude gk;
        for (const auto& inc : rep.increments) gk = std::max(gk, decay_constant(inc, k + 1));
        SmoothnessCheck check{k, true, gk, {}};
        // |f_m| <= G / (k |m|^k)  <=>  |f_m|^2 k^2 |m|^{2k} <= G^2
        for (const auto& [m, z] : rep.f.coeffs()) {
            Integer w;
            mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(norm1(m)), 2UL * k);
            const Rational lhs = z.norm_sq() * Rational(w * k * k);
            if (lhs > gk.squared()) {
                check.passed = false;
                check.witnesses.push_back(m);
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace mcgcoh
