#pragma once

// Dehn-twist words evaluated in Sp(2g, Z), and a catalog of the classical
// relations (commuting, braid, chain, lantern, bounding pair, conjugation)
// checked in the symplectic representation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcgcoh/lattice.hpp"

namespace mcgcoh {

/// A simple closed curve, known only by its homology class. A separating
/// curve is null-homologous.
struct Curve {
    std::string id;
    HomologyClass cls;
    bool separating = false;

    Curve(std::string id_, HomologyClass cls_, bool separating_ = false);

    friend bool operator==(const Curve&, const Curve&) = default;
};

/// Curves keyed by id. Insertion rejects duplicate ids and mixed genera.
class CurveTable {
public:
    explicit CurveTable(Genus g) : genus_(g) {}
    CurveTable(Genus g, std::vector<Curve> curves);

    Genus genus() const { return genus_; }
    void add(Curve c);
    const Curve& at(const std::string& id) const;
    const Curve* find(const std::string& id) const;
    bool contains(const std::string& id) const { return find(id) != nullptr; }
    const std::vector<Curve>& curves() const { return curves_; }
    std::size_t size() const { return curves_.size(); }

private:
    Genus genus_;
    std::vector<Curve> curves_;
    std::map<std::string, std::size_t> index_;
};

struct Letter {
    std::string curve;
    std::int64_t exponent;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// tau_{c_1}^{e_1} tau_{c_2}^{e_2} ... read left to right as a product.
class TwistWord {
public:
    TwistWord() = default;
    TwistWord(std::initializer_list<Letter> letters);
    explicit TwistWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    TwistWord inverse() const;
    TwistWord power(std::size_t n) const;
    friend TwistWord operator*(const TwistWord& a, const TwistWord& b);
    friend bool operator==(const TwistWord&, const TwistWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Declared algebraic intersection number between two curves of an instance.
struct DeclaredIntersection {
    std::string a;
    std::string b;
    std::int64_t value;
};

struct RelationInstance {
    std::string name;
    CurveTable curves;
    TwistWord lhs;
    TwistWord rhs;
    std::vector<DeclaredIntersection> declared;
};

/// Product of twist_matrix(cls)^exponent in word order.
SymplecticMatrix word_matrix(const TwistWord& w, const CurveTable& curves);

/// Throws MetadataError if the declared intersections are wrong or a letter
/// does not resolve; otherwise compares both sides exactly.
bool verify_relation(const RelationInstance& rel);

/// Symplectic-level Torelli test.
bool is_torelli(const TwistWord& w, const CurveTable& curves);

/// Canonical curve id for a class: its basis label, primed when the same
/// class needs a second, distinct curve (e.g. the two halves of a bounding
/// pair).
std::string curve_id(const HomologyClass& cls, int primes = 0);

/// The builtin relation instances for genus g (g >= 3). Ids are canonical, so
/// two instances that mention the same id mean the same curve.
std::vector<RelationInstance> builtin_catalog(Genus g);

/// Every curve mentioned by the catalog, merged into one table.
CurveTable catalog_curves(const std::vector<RelationInstance>& catalog);

/// The 2g basis curves x_1, y_1, ..., x_g, y_g with canonical ids.
CurveTable basis_curves(Genus g);

/// Chain boundary classes used by the catalog instance on a = x1, b = y1,
/// c = x1 + x2: (tau_a tau_b tau_c)^4 = tau_d tau_e.
struct ChainBoundary {
    HomologyClass d;
    HomologyClass e;
};
ChainBoundary chain_boundary_classes(Genus g);

}  // namespace mcgcoh
