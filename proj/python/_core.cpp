#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcgcoh/errors.hpp"
#include "mcgcoh/io.hpp"

namespace py = pybind11;
using namespace mcgcoh;

namespace {

using Coords = std::vector<std::int64_t>;

Genus genus_of(const Coords& c) {
    if (c.size() % 2 != 0) throw DimensionError("a class needs an even number of coordinates");
    return Genus(static_cast<int>(c.size() / 2));
}

HomologyClass to_class(const Coords& c) { return HomologyClass(genus_of(c), c); }

py::tuple from_class(const HomologyClass& m) {
    py::tuple t(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) t[i] = py::int_(m[i]);
    return t;
}

py::object big_int(const Integer& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object from_rational(const Rational& q) {
    // leaked on purpose: must not be released after interpreter shutdown
    static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*fraction)(big_int(q.get_num()), big_int(q.get_den()));
}

// Coefficients are a rational (int, Fraction, "p/q") or a (re, im) pair of them.
QComplex to_complex(const py::handle& h) {
    if (py::isinstance<py::tuple>(h) || py::isinstance<py::list>(h)) {
        auto s = py::reinterpret_borrow<py::sequence>(h);
        if (s.size() != 2) throw ParseError("a complex coefficient is a (re, im) pair");
        return QComplex(to_rational(s[0]), to_rational(s[1]));
    }
    return QComplex(to_rational(h));
}

SparseVector to_vector(const py::dict& d, Genus g) {
    SparseVector v(g);
    for (auto [k, z] : d) {
        HomologyClass m(g, k.cast<Coords>());
        v.set(m, to_complex(z));
    }
    return v;
}

py::dict from_vector(const SparseVector& v) {
    py::dict d;
    for (const auto& [m, z] : v.coeffs()) d[from_class(m)] = py::make_tuple(from_rational(z.re), from_rational(z.im));
    return d;
}

py::list from_matrix(const IntMatrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.dim(); ++c) row.append(big_int(m(r, c)));
        rows.append(row);
    }
    return rows;
}

IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) throw DimensionError("matrix must be square");
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = static_cast<long>(rows[r][c]);
    }
    return m;
}

Cocycle to_cocycle(const py::dict& values, Genus g) {
    Cocycle::Values vals;
    for (auto [id, v] : values) vals.emplace(id.cast<std::string>(), to_vector(v.cast<py::dict>(), g));
    return Cocycle(basis_curves(g), std::move(vals));
}

py::object json_value(const io::Json& j) {
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact twist-group cocycle computations on the character lattice.";

    auto base = py::register_exception<Error>(mod, "Error");
    py::register_exception<DomainError>(mod, "DomainError", base.ptr());
    py::register_exception<DimensionError>(mod, "DimensionError", base.ptr());
    py::register_exception<LookupError>(mod, "LookupError", base.ptr());
    py::register_exception<MetadataError>(mod, "MetadataError", base.ptr());
    py::register_exception<CocycleError>(mod, "CocycleError", base.ptr());
    py::register_exception<OverflowError>(mod, "OverflowError", base.ptr());
    py::register_exception<ParseError>(mod, "ParseError", base.ptr());

    mod.def("intersection", [](const Coords& m, const Coords& n) { return intersection(to_class(m), to_class(n)); },
            py::arg("m"), py::arg("n"));
    mod.def("transvect", [](const Coords& c, std::int64_t n, const Coords& m) {
        return from_class(transvect(to_class(c), n, to_class(m)));
    }, py::arg("c"), py::arg("n"), py::arg("m"));
    mod.def("twist_matrix", [](const Coords& c) { return from_matrix(twist_matrix(to_class(c)).matrix()); },
            py::arg("c"));
    mod.def("is_symplectic", [](const std::vector<std::vector<std::int64_t>>& m) { return is_symplectic(to_matrix(m)); },
            py::arg("matrix"));
    mod.def("word_matrix", [](const std::vector<std::pair<std::string, std::int64_t>>& word,
                              const std::map<std::string, Coords>& curves, int genus) {
        CurveTable table{Genus(genus)};
        for (const auto& [id, c] : curves) table.add(Curve(id, HomologyClass(Genus(genus), c)));
        std::vector<Letter> letters;
        for (const auto& [id, e] : word) letters.push_back({id, e});
        return from_matrix(word_matrix(TwistWord(std::move(letters)), table).matrix());
    }, py::arg("word"), py::arg("curves"), py::arg("genus"));

    mod.def("choose_increasing_twist", [](const Coords& m) {
        auto t = choose_increasing_twist(to_class(m));
        return py::make_tuple(t.curve_index, t.sign);
    }, py::arg("m"));
    mod.def("orbit", [](const Coords& m, std::size_t steps) {
        const auto cls = to_class(m);
        const auto t = choose_increasing_twist(cls);
        py::list out;
        for (const auto& p : orbit_ray(HomologyClass::basis(cls.genus(), t.curve_index), t.sign, cls, steps + 1)) {
            out.append(from_class(p));
        }
        return out;
    }, py::arg("m"), py::arg("steps"));

    mod.def("builtin_catalog", [](int genus) {
        py::list out;
        for (const auto& rel : builtin_catalog(Genus(genus))) out.append(json_value(io::to_json(rel)));
        return out;
    }, py::arg("genus"));
    mod.def("verify_relations", [](int genus) {
        py::dict out;
        for (const auto& rel : builtin_catalog(Genus(genus))) out[py::str(rel.name)] = verify_relation(rel);
        return out;
    }, py::arg("genus"), "Name -> pass for every builtin relation instance.");

    mod.def("act", [](const std::vector<std::vector<std::int64_t>>& m, const py::dict& v) {
        auto sm = SymplecticMatrix::from_matrix(to_matrix(m));
        return from_vector(act(sm, to_vector(v, sm.genus())));
    }, py::arg("matrix"), py::arg("v"));
    mod.def("evaluate", [](const py::dict& v, const std::vector<py::object>& turns) {
        std::vector<Rational> t;
        for (const auto& x : turns) t.push_back(to_rational(x));
        const Genus g = genus_of(Coords(t.size()));
        return evaluate(to_vector(v, g), TorusPoint(g, std::move(t)));
    }, py::arg("v"), py::arg("turns"), "Value at the torus point with the given angles in turns.");
    mod.def("decay_constant", [](const py::dict& v, unsigned k, int genus) {
        auto f = decay_constant(to_vector(v, Genus(genus)), k);
        return py::make_tuple(from_rational(f.squared()), f.value());
    }, py::arg("v"), py::arg("k"), py::arg("genus"), "(F_k squared, F_k as float)");

    mod.def("coboundary", [](const py::dict& f, int genus) {
        py::dict out;
        auto u = coboundary(to_vector(f, Genus(genus)), basis_curves(Genus(genus)));
        for (const auto& c : u.gens().curves()) out[py::str(c.id)] = from_vector(u.value(c.id));
        return out;
    }, py::arg("f"), py::arg("genus"), "Generator values of the coboundary on the basis twists.");
    mod.def("s_norms", [](const py::dict& values, int genus) {
        auto u = to_cocycle(values, Genus(genus));
        py::dict out;
        for (const auto& c : u.gens().curves()) out[py::str(c.id)] = from_rational(s_vector(u, c.id).norm_sq());
        return out;
    }, py::arg("values"), py::arg("genus"));
    mod.def("solve", [](const py::dict& values, int genus, unsigned kmax) {
        const Genus g(genus);
        auto rep = solve_coboundary(to_cocycle(values, g), builtin_catalog(g), kmax);
        py::dict out;
        out["f"] = from_vector(rep.f);
        out["residual"] = from_rational(rep.residual);
        py::list smooth;
        if (sgn(rep.residual) == 0 && kmax >= 2) {
            for (const auto& ch : smoothness_report(rep, kmax)) smooth.append(py::make_tuple(ch.k, ch.passed));
        }
        out["smoothness"] = smooth;
        return out;
    }, py::arg("values"), py::arg("genus"), py::arg("kmax") = 5,
       "Recover f from basis-twist values; residual is a squared norm.");
}
