#include "mcgcoh/words.hpp"

#include <algorithm>

#include "mcgcoh/errors.hpp"

namespace mcgcoh {

Curve::Curve(std::string id_, HomologyClass cls_, bool separating_)
    : id(std::move(id_)), cls(std::move(cls_)), separating(separating_) {
    if (id.empty()) throw DomainError("curve id must be nonempty");
    if (separating && !cls.is_zero()) {
        throw DomainError("separating curve '" + id + "' must be null-homologous");
    }
}

CurveTable::CurveTable(Genus g, std::vector<Curve> curves) : genus_(g) {
    for (auto& c : curves) add(std::move(c));
}

void CurveTable::add(Curve c) {
    if (c.cls.genus() != genus_) throw DimensionError("curve '" + c.id + "' has the wrong genus");
    if (index_.count(c.id)) throw DomainError("duplicate curve id '" + c.id + "'");
    index_.emplace(c.id, curves_.size());
    curves_.push_back(std::move(c));
}

const Curve* CurveTable::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &curves_[it->second];
}

const Curve& CurveTable::at(const std::string& id) const {
    const Curve* c = find(id);
    if (!c) throw LookupError("unknown curve id '" + id + "'");
    return *c;
}

// ---------------------------------------------------------------------------

TwistWord::TwistWord(std::initializer_list<Letter> letters) : TwistWord(std::vector<Letter>(letters)) {}

TwistWord::TwistWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_) {
        if (l.exponent == 0) throw DomainError("twist word exponents must be nonzero");
    }
}

TwistWord TwistWord::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (auto& l : inv) l.exponent = -l.exponent;
    return TwistWord(std::move(inv));
}

TwistWord TwistWord::power(std::size_t n) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() * n);
    for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
    return TwistWord(std::move(out));
}

TwistWord operator*(const TwistWord& a, const TwistWord& b) {
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return TwistWord(std::move(out));
}

// ---------------------------------------------------------------------------

SymplecticMatrix word_matrix(const TwistWord& w, const CurveTable& curves) {
    SymplecticMatrix m(curves.genus());
    for (const auto& l : w.letters()) {
        m = m * twist_matrix(curves.at(l.curve).cls).pow(l.exponent);
    }
    return m;
}

bool verify_relation(const RelationInstance& rel) {
    for (const auto& side : {&rel.lhs, &rel.rhs}) {
        for (const auto& l : side->letters()) {
            if (!rel.curves.contains(l.curve)) {
                throw MetadataError(rel.name + ": letter refers to undeclared curve '" + l.curve + "'");
            }
        }
    }
    for (const auto& d : rel.declared) {
        const Curve* a = rel.curves.find(d.a);
        const Curve* b = rel.curves.find(d.b);
        if (!a || !b) throw MetadataError(rel.name + ": declared intersection names an unknown curve");
        std::int64_t actual = intersection(a->cls, b->cls);
        if (actual != d.value) {
            throw MetadataError(rel.name + ": declared i(" + d.a + ", " + d.b + ") = " + std::to_string(d.value) +
                                " but the classes give " + std::to_string(actual));
        }
    }
    return word_matrix(rel.lhs, rel.curves) == word_matrix(rel.rhs, rel.curves);
}

bool is_torelli(const TwistWord& w, const CurveTable& curves) { return word_matrix(w, curves).is_identity(); }

std::string curve_id(const HomologyClass& cls, int primes) {
    std::string id = cls.is_zero() ? "sep" : basis_label(cls);
    id.append(static_cast<std::size_t>(primes), '\'');
    return id;
}

CurveTable basis_curves(Genus g) {
    CurveTable t(g);
    for (std::size_t k = 0; k < g.rank(); ++k) {
        auto c = HomologyClass::basis(g, k);
        t.add(Curve(curve_id(c), c));
    }
    return t;
}

ChainBoundary chain_boundary_classes(Genus g) {
    // Found by bounded search (norm1 <= 6) against the matrix oracle and
    // frozen here; tests re-run the search. (tau_x1 tau_y1 tau_{x1+x2})^4
    // acts on homology as tau_{x2}^2.
    return {HomologyClass::x(g, 2), HomologyClass::x(g, 2)};
}

namespace {

class InstanceBuilder {
public:
    InstanceBuilder(Genus g, std::string name) : rel_{std::move(name), CurveTable(g), {}, {}, {}} {}

    // Adds a curve if missing and returns its id.
    std::string curve(const HomologyClass& cls, int primes = 0) {
        std::string id = curve_id(cls, primes);
        if (!rel_.curves.contains(id)) rel_.curves.add(Curve(id, cls, cls.is_zero()));
        return id;
    }

    InstanceBuilder& sides(TwistWord lhs, TwistWord rhs) {
        rel_.lhs = std::move(lhs);
        rel_.rhs = std::move(rhs);
        return *this;
    }

    // Declares every pairwise intersection among the instance's curves.
    RelationInstance finish() {
        const auto& cs = rel_.curves.curves();
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                rel_.declared.push_back({cs[i].id, cs[j].id, intersection(cs[i].cls, cs[j].cls)});
        return std::move(rel_);
    }

private:
    RelationInstance rel_;
};

RelationInstance commuting(Genus g, const std::string& name, const HomologyClass& a, const HomologyClass& b) {
    InstanceBuilder ib(g, name);
    auto ia = ib.curve(a), ibb = ib.curve(b);
    return ib.sides({{ia, 1}, {ibb, 1}}, {{ibb, 1}, {ia, 1}}).finish();
}

RelationInstance braid(Genus g, const std::string& name, const HomologyClass& a, const HomologyClass& b) {
    InstanceBuilder ib(g, name);
    auto ia = ib.curve(a), ibb = ib.curve(b);
    return ib.sides({{ia, 1}, {ibb, 1}, {ia, 1}}, {{ibb, 1}, {ia, 1}, {ibb, 1}}).finish();
}

RelationInstance bounding_pair(Genus g, const std::string& name, const HomologyClass& cls) {
    InstanceBuilder ib(g, name);
    auto gamma = ib.curve(cls), delta = ib.curve(cls, 1);
    return ib.sides({{gamma, 1}, {delta, -1}}, {}).finish();
}

RelationInstance conjugation(Genus g, const std::string& name, const HomologyClass& phi, std::int64_t phi_exp,
                             const HomologyClass& alpha) {
    InstanceBuilder ib(g, name);
    auto ip = ib.curve(phi), ia = ib.curve(alpha);
    auto image = apply(twist_matrix(phi).pow(phi_exp), alpha);
    auto ii = ib.curve(image);
    return ib.sides({{ip, phi_exp}, {ia, 1}, {ip, -phi_exp}}, {{ii, 1}}).finish();
}

}  // namespace

std::vector<RelationInstance> builtin_catalog(Genus g) {
    const auto x = [g](int j) { return HomologyClass::x(g, j); };
    const auto y = [g](int j) { return HomologyClass::y(g, j); };

    std::vector<RelationInstance> cat;
    cat.push_back(commuting(g, "commute x1 x2", x(1), x(2)));
    cat.push_back(commuting(g, "commute y1 x3", y(1), x(3)));
    cat.push_back(commuting(g, "commute x1 x1+x2", x(1), x(1) + x(2)));

    cat.push_back(braid(g, "braid x1 y1", x(1), y(1)));
    cat.push_back(braid(g, "braid x2 y2", x(2), y(2)));
    cat.push_back(braid(g, "braid y1 x1+x2", y(1), x(1) + x(2)));

    {
        InstanceBuilder ib(g, "chain x1 y1 x1+x2");
        auto a = ib.curve(x(1)), b = ib.curve(y(1)), c = ib.curve(x(1) + x(2));
        auto [dc, ec] = chain_boundary_classes(g);
        auto d = ib.curve(dc);
        auto e = ib.curve(ec, dc == ec ? 1 : 0);
        cat.push_back(ib.sides(TwistWord{{a, 1}, {b, 1}, {c, 1}}.power(4), {{d, 1}, {e, 1}}).finish());
    }
    {
        // tau_0 tau_1 tau_2 tau_3 = tau_12 tau_13 tau_23 with a_0 = a_1 + a_2 + a_3
        InstanceBuilder ib(g, "lantern x1 x2 x3");
        auto t0 = ib.curve(x(1) + x(2) + x(3));
        auto t1 = ib.curve(x(1)), t2 = ib.curve(x(2)), t3 = ib.curve(x(3));
        auto t12 = ib.curve(x(1) + x(2)), t13 = ib.curve(x(1) + x(3)), t23 = ib.curve(x(2) + x(3));
        cat.push_back(ib.sides({{t0, 1}, {t1, 1}, {t2, 1}, {t3, 1}}, {{t12, 1}, {t13, 1}, {t23, 1}}).finish());
    }

    cat.push_back(bounding_pair(g, "bounding pair x1", x(1)));
    cat.push_back(bounding_pair(g, "bounding pair y3", y(3)));

    cat.push_back(conjugation(g, "conjugate x1 by y1", y(1), 1, x(1)));
    cat.push_back(conjugation(g, "conjugate y2 by x2", x(2), 1, y(2)));
    cat.push_back(conjugation(g, "conjugate x1+x2 by y1^-1", y(1), -1, x(1) + x(2)));
    return cat;
}

CurveTable catalog_curves(const std::vector<RelationInstance>& catalog) {
    if (catalog.empty()) throw DomainError("empty catalog");
    CurveTable merged(catalog.front().curves.genus());
    for (const auto& rel : catalog) {
        for (const auto& c : rel.curves.curves()) {
            if (const Curve* prev = merged.find(c.id)) {
                if (!(*prev == c)) throw MetadataError("curve id '" + c.id + "' reused with a different class");
                continue;
            }
            merged.add(c);
        }
    }
    return merged;
}

}  // namespace mcgcoh
