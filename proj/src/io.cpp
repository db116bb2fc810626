#include "mcgcoh/io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mcgcoh/errors.hpp"

namespace mcgcoh::io {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream ss{std::string(line)};
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::int64_t parse_int64(const std::string& tok) {
    Rational q = parse_rational(tok);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ParseError("bad integer coordinate '" + tok + "'");
    return q.get_num().get_si();
}

Genus genus_for_count(std::size_t count) {
    if (count % 2 != 0) throw ParseError("a class needs an even number of coordinates");
    return Genus(static_cast<int>(count / 2));
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::int64_t int_value(const Json& v) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) return parse_int64(v.get<std::string>());
    throw ParseError("expected an integer");
}

Rational rational_value(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
    throw ParseError("expected a rational as \"num/den\"");
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

}  // namespace

HomologyClass parse_class(std::string_view line, std::optional<Genus> g) {
    auto toks = split_ws(line);
    std::vector<std::int64_t> coords;
    for (const auto& t : toks) coords.push_back(parse_int64(t));
    Genus genus = g ? *g : genus_for_count(coords.size());
    if (coords.size() != genus.rank()) {
        throw ParseError("expected " + std::to_string(genus.rank()) + " coordinates, got " +
                         std::to_string(coords.size()));
    }
    return HomologyClass(genus, std::move(coords));
}

SparseVector read_vector_text(std::istream& in, std::optional<Genus> g, Space space) {
    std::optional<SparseVector> v;
    std::set<HomologyClass> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() < 4) throw ParseError("line " + std::to_string(lineno) + ": too few fields");
        const std::size_t n = toks.size() - 2;
        Genus genus = v ? v->genus() : g ? *g : genus_for_count(n);
        if (n != genus.rank()) throw ParseError("line " + std::to_string(lineno) + ": wrong number of coordinates");
        if (!v) v.emplace(genus, space);
        std::vector<std::int64_t> coords;
        for (std::size_t i = 0; i < n; ++i) coords.push_back(parse_int64(toks[i]));
        HomologyClass m(genus, std::move(coords));
        if (!seen.insert(m).second) {
            throw ParseError("line " + std::to_string(lineno) + ": duplicate support point " + to_string(m));
        }
        v->set(m, QComplex(parse_rational(toks[n]), parse_rational(toks[n + 1])));
    }
    if (!v) {
        if (!g) throw ParseError("empty vector file needs an explicit genus");
        v.emplace(*g, space);
    }
    return *v;
}

void write_vector_text(std::ostream& out, const SparseVector& v) {
    for (const auto& [m, z] : v.coeffs()) {
        out << to_string(m) << "  " << format_rational(z.re) << "  " << format_rational(z.im) << '\n';
    }
}

// ---------------------------------------------------------------------------

Json to_json(const HomologyClass& m) {
    Json j = Json::array();
    for (auto c : m.coords()) j.push_back(c);
    return j;
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(integer_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const SymplecticMatrix& m) { return to_json(m.matrix()); }

Json to_json(const SparseVector& v) {
    Json j = Json::array();
    for (const auto& [m, z] : v.coeffs()) {
        j.push_back({{"cls", to_json(m)}, {"re", format_rational(z.re)}, {"im", format_rational(z.im)}});
    }
    return j;
}

Json to_json(const Curve& c) { return {{"id", c.id}, {"cls", to_json(c.cls)}, {"separating", c.separating}}; }

Json to_json(const TwistWord& w) {
    Json j = Json::array();
    for (const auto& l : w.letters()) j.push_back(Json::array({l.curve, l.exponent}));
    return j;
}

Json to_json(const RelationInstance& rel) {
    Json curves = Json::array();
    for (const auto& c : rel.curves.curves()) curves.push_back(to_json(c));
    Json declared = Json::array();
    for (const auto& d : rel.declared) declared.push_back(Json::array({d.a, d.b, d.value}));
    return {{"name", rel.name},
            {"genus", rel.curves.genus().value()},
            {"curves", std::move(curves)},
            {"lhs", to_json(rel.lhs)},
            {"rhs", to_json(rel.rhs)},
            {"declared", std::move(declared)}};
}

Json to_json(const Cocycle& u) {
    Json gens = Json::array();
    for (const auto& c : u.gens().curves()) gens.push_back(to_json(c));
    Json values = Json::object();
    for (const auto& [id, v] : u.values()) values[id] = to_json(v);
    Json pairs = Json::array();
    for (const auto& [a, b] : u.declared_pairs()) pairs.push_back(Json::array({a, b}));
    return {{"genus", u.genus().value()}, {"generators", std::move(gens)}, {"values", std::move(values)},
            {"pairs", std::move(pairs)}};
}

Json to_json(const SolveReport& rep) {
    Json decay = Json::array();
    for (const auto& row : rep.decay) {
        decay.push_back({{"k", row.k}, {"F_k", to_json(row.f_decay)}, {"G_k+1", to_json(row.g_decay)}});
    }
    return {{"genus", rep.f.genus().value()},
            {"residual", format_rational(rep.residual)},
            {"f", to_json(rep.f)},
            {"decay", std::move(decay)}};
}

Json to_json(const Magnitude& m) {
    Json j;
    j["squared"] = format_rational(m.squared());
    if (auto e = m.exact()) j["exact"] = format_rational(*e);
    j["approx"] = m.value();
    return j;
}

Json to_json(const SmoothnessCheck& check) {
    Json w = Json::array();
    for (const auto& m : check.witnesses) w.push_back(to_json(m));
    return {{"k", check.k}, {"passed", check.passed}, {"G_k+1", to_json(check.g_decay)}, {"witnesses", w}};
}

// ---------------------------------------------------------------------------

HomologyClass class_from_json(const Json& j, Genus g) {
    if (!j.is_array()) throw ParseError("a class must be an integer array");
    std::vector<std::int64_t> coords;
    for (const auto& c : j) coords.push_back(int_value(c));
    if (coords.size() != g.rank()) {
        throw ParseError("class has " + std::to_string(coords.size()) + " coordinates, genus needs " +
                         std::to_string(g.rank()));
    }
    return HomologyClass(g, std::move(coords));
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("a matrix must be a nonempty array of rows");
    IntMatrix m(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != j.size()) throw ParseError("matrix must be square");
        for (std::size_t c = 0; c < j.size(); ++c) {
            const Json& e = j[r][c];
            if (e.is_string()) {
                Rational q = parse_rational(e.get<std::string>());
                if (q.get_den() != 1) throw ParseError("matrix entries must be integers");
                m(r, c) = q.get_num();
            } else {
                m(r, c) = static_cast<long>(int_value(e));
            }
        }
    }
    return m;
}

SparseVector vector_from_json(const Json& j, Genus g, Space space) {
    if (!j.is_array()) throw ParseError("a sparse vector must be an array of entries");
    SparseVector v(g, space);
    std::set<HomologyClass> seen;
    for (const auto& e : j) {
        HomologyClass m = class_from_json(field(e, "cls"), g);
        if (!seen.insert(m).second) throw ParseError("duplicate support point " + to_string(m));
        Rational re = e.contains("re") ? rational_value(e.at("re")) : Rational(0);
        Rational im = e.contains("im") ? rational_value(e.at("im")) : Rational(0);
        v.set(m, QComplex(re, im));
    }
    return v;
}

Curve curve_from_json(const Json& j, Genus g) {
    bool separating = false;
    if (j.contains("separating")) {
        if (!j.at("separating").is_boolean()) throw ParseError("'separating' must be a boolean");
        separating = j.at("separating").get<bool>();
    }
    return Curve(string_field(j, "id"), class_from_json(field(j, "cls"), g), separating);
}

TwistWord word_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("a twist word must be an array of [id, exponent] pairs");
    std::vector<Letter> letters;
    for (const auto& l : j) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_string()) throw ParseError("bad twist word letter");
        letters.push_back({l[0].get<std::string>(), int_value(l[1])});
    }
    return TwistWord(std::move(letters));
}

RelationInstance relation_from_json(const Json& j, Genus g) {
    RelationInstance rel{string_field(j, "name"), CurveTable(g), {}, {}, {}};
    if (j.contains("genus") && int_value(j.at("genus")) != g.value()) {
        throw ParseError(rel.name + ": genus differs from the configured genus");
    }
    const Json& curves = field(j, "curves");
    if (!curves.is_array()) throw ParseError("'curves' must be an array");
    for (const auto& c : curves) rel.curves.add(curve_from_json(c, g));
    rel.lhs = word_from_json(field(j, "lhs"));
    rel.rhs = word_from_json(field(j, "rhs"));
    if (j.contains("declared")) {
        for (const auto& d : j.at("declared")) {
            if (!d.is_array() || d.size() != 3 || !d[0].is_string() || !d[1].is_string()) {
                throw ParseError("declared intersections are [id, id, value] triples");
            }
            rel.declared.push_back({d[0].get<std::string>(), d[1].get<std::string>(), int_value(d[2])});
        }
    }
    return rel;
}

std::vector<RelationInstance> relations_from_json(const Json& j, Genus g) {
    std::vector<RelationInstance> out;
    if (j.is_array()) {
        for (const auto& r : j) out.push_back(relation_from_json(r, g));
    } else {
        out.push_back(relation_from_json(j, g));
    }
    return out;
}

Cocycle cocycle_from_json(const Json& j) {
    Genus g(static_cast<int>(int_value(field(j, "genus"))));
    GeneratorSet gens(g);
    const Json& gj = field(j, "generators");
    if (!gj.is_array()) throw ParseError("'generators' must be an array");
    for (const auto& c : gj) gens.add(curve_from_json(c, g));
    Cocycle::Values values;
    if (j.contains("values")) {
        const Json& vj = j.at("values");
        if (!vj.is_object()) throw ParseError("'values' must map generator ids to sparse vectors");
        for (const auto& [id, v] : vj.items()) values.emplace(id, vector_from_json(v, g));
    }
    std::vector<Cocycle::Pair> pairs;
    if (j.contains("pairs")) {
        for (const auto& p : j.at("pairs")) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
                throw ParseError("pairs are [id, id]");
            }
            pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
    }
    return Cocycle(std::move(gens), std::move(values), std::move(pairs));
}

Json parse_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mcgcoh::io
