#pragma once

// Cocycles Gamma -> l^2(H') given by their values on Dehn-twist generators,
// coboundaries, the fixed-vector projections p_c, and the telescoping solver
// that recovers f from u = (1 - .) f using only the 2g basis twists.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgcoh/fourier.hpp"
#include "mcgcoh/words.hpp"

namespace mcgcoh {

/// Twist generators. Non-separating curves must carry a nonzero class.
using GeneratorSet = CurveTable;

/// A cocycle u recorded by its values u(tau_c) on a generator set. Missing
/// values are zero. Validity over the whole group is not a constructor
/// guarantee; check it with relation_residual.
class Cocycle {
public:
    using Values = std::map<std::string, SparseVector>;
    using Pair = std::pair<std::string, std::string>;

    Cocycle(GeneratorSet gens, Values values, std::vector<Pair> declared_pairs = {});

    Genus genus() const { return gens_.genus(); }
    const GeneratorSet& gens() const { return gens_; }
    const Values& values() const { return values_; }
    const std::vector<Pair>& declared_pairs() const { return pairs_; }

    /// u(tau_c) for a generator id.
    SparseVector value(const std::string& id) const;

    /// Copy with one generator value replaced.
    Cocycle with_value(const std::string& id, SparseVector v) const;

private:
    GeneratorSet gens_;
    Values values_;
    std::vector<Pair> pairs_;
};

/// The individual summands of u(w) produced by folding u(gh) = u(g) + g u(h)
/// over the word, one per unit power of each letter. A negative power
/// contributes -tau^{-1} u(tau) per step.
std::vector<SparseVector> extend_terms(const Cocycle& u, const TwistWord& w);

/// u(w); zero for the empty word.
SparseVector extend(const Cocycle& u, const TwistWord& w);

/// ||u(lhs) - u(rhs)||^2. Every curve of the relation must be a generator of
/// u with the same class.
Rational relation_residual(const Cocycle& u, const RelationInstance& rel);

/// Relations of the catalog whose curves all resolve among u's generators.
std::vector<const RelationInstance*> applicable_relations(const Cocycle& u,
                                                          const std::vector<RelationInstance>& catalog);

/// c -> v - tau_c v. v must be in the mean-zero space.
Cocycle coboundary(const SparseVector& v, const GeneratorSet& gens);

/// Orthogonal projection onto the tau_c-fixed vectors: keeps the support
/// points m with i(c, m) = 0.
SparseVector project_fixed(const HomologyClass& c, const SparseVector& v);

/// s_c = p_c u(tau_c) for a generator id.
SparseVector s_vector(const Cocycle& u, const std::string& curve);

/// s for a curve that is not a generator, given a word w with w = tau_c in
/// the group (e.g. a conjugate phi tau_a phi^{-1}).
SparseVector s_vector(const Cocycle& u, const HomologyClass& cls, const TwistWord& twist_of_c);

/// <s_a, s_b>. The pair must be declared jointly non-separating in u, name
/// two distinct curves, and neither may be separating.
QComplex c_pairing(const Cocycle& u, const std::string& a, const std::string& b);

struct DecayRow {
    unsigned k;
    Magnitude f_decay;   // F_k(f)
    Magnitude g_decay;   // G_{k+1}: max over the 4g increments of their F_{k+1}
};

struct SolveReport {
    SparseVector f;
    Rational residual;  // max over basis twists and signs of ||(1 - tau^{+-1}) f - u(tau^{+-1})||^2
    /// u(tau_j), u(tau_j^{-1}) for j = 0 .. 2g-1, interleaved (index 2j + (sign < 0)).
    /// Their coefficients are the increments f_m - f_{tau_j^{-+1} m}.
    std::vector<SparseVector> increments;
    std::vector<DecayRow> decay;
};

/// Recovers f from u by telescoping along the rays of choose_increasing_twist.
/// Uses the basis twists x_1, y_1, ..., x_g, y_g, which must be among u's
/// generators. Throws CocycleError if u has a nonzero residual on an
/// applicable catalog relation. A nonzero residual in the report means u is
/// not the coboundary of any finitely supported f.
SolveReport solve_coboundary(const Cocycle& u, const std::vector<RelationInstance>& catalog, unsigned kmax = 5);

struct SmoothnessCheck {
    unsigned k;
    bool passed;
    Magnitude g_decay;                     // G_{k+1}
    std::vector<HomologyClass> witnesses;  // support points violating the bound
};

/// For k = 2 .. kmax checks |f_m| <= G_{k+1} / (k |m|^k) on the support of f,
/// exactly (compared through squares). Throws DomainError if the report has
/// a nonzero residual.
std::vector<SmoothnessCheck> smoothness_report(const SolveReport& rep, unsigned kmax);

}  // namespace mcgcoh
