#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "mcgcoh/errors.hpp"
#include "mcgcoh/io.hpp"

namespace mcgcoh::cli {

namespace {

using io::Json;

struct Config {
    int genus = 3;
    bool genus_given = false;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::string in;
    std::string out;
    std::string format;
    unsigned kmax = 5;
    std::string cls;
    std::size_t steps = 5;
};

struct Outcome {
    int status = 0;
    std::string text;
};

std::string read_file(const std::string& path) {
    if (path.empty()) throw ParseError("--in is required");
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    std::istringstream in(read_file(path));
    return io::parse_json(in);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool csv(const Config& cfg) { return cfg.format == "csv"; }

// Cocycle files carry their own genus; --genus only has to agree when given.
Cocycle load_cocycle(const Config& cfg) {
    Cocycle u = io::cocycle_from_json(read_json(cfg.in));
    if (cfg.genus_given && u.genus().value() != cfg.genus) {
        throw ParseError("cocycle has genus " + std::to_string(u.genus().value()) + ", --genus is " +
                         std::to_string(cfg.genus));
    }
    return u;
}

SparseVector random_vector(std::mt19937_64& rng, Genus g) {
    std::uniform_int_distribution<std::int64_t> coord(-3, 3), num(-9, 9), den(1, 7);
    SparseVector v(g);
    for (int i = 0; i < 8; ++i) {
        std::vector<std::int64_t> c(g.rank());
        for (auto& x : c) x = coord(rng);
        HomologyClass m(g, std::move(c));
        if (m.is_zero()) continue;
        v.set(m, QComplex(Rational(Integer(num(rng)), Integer(den(rng)))));
    }
    return v;
}

TorusPoint random_point(std::mt19937_64& rng, Genus g) {
    std::uniform_int_distribution<long> turn(0, 999'999);
    std::vector<Rational> t;
    for (std::size_t i = 0; i < g.rank(); ++i) t.emplace_back(Integer(turn(rng)), Integer(1'000'000));
    for (auto& q : t) q.canonicalize();
    return TorusPoint(g, std::move(t));
}

Integer matrix_gap(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    Integer s = 0;
    const auto n = a.matrix().dim();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Integer d = a.matrix()(r, c) - b.matrix()(r, c);
            s += d * d;
        }
    return s;
}

Outcome verify_relations(const Config& cfg, std::ostream& err) {
    const Genus g(cfg.genus);
    auto catalog = builtin_catalog(g);
    if (!cfg.in.empty()) {
        for (auto& rel : io::relations_from_json(read_json(cfg.in), g)) catalog.push_back(std::move(rel));
    }

    std::mt19937_64 rng(cfg.seed);
    Json rows = Json::array();
    std::ostringstream table;
    table << "name,passed,residual,float_gap\n";
    bool all = true;
    for (const auto& rel : catalog) {
        Json row{{"name", rel.name}};
        bool passed = false;
        try {
            passed = verify_relation(rel);
            const auto lhs = word_matrix(rel.lhs, rel.curves);
            const auto rhs = word_matrix(rel.rhs, rel.curves);
            // floating cross-check: lhs acting on the torus against rhs acting on coefficients
            const auto v = random_vector(rng, g);
            const auto rho = random_point(rng, g);
            const double gap = std::abs(evaluate(v, torus_action(lhs.inverse(), rho)) - evaluate(act(rhs, v), rho));
            passed = passed && gap <= cfg.tolerance;
            row["passed"] = passed;
            row["residual"] = matrix_gap(lhs, rhs).get_str();
            row["float_gap"] = gap;
            table << csv_field(rel.name) << ',' << (passed ? "true" : "false") << ',' << matrix_gap(lhs, rhs).get_str()
                  << ',' << gap << '\n';
        } catch (const MetadataError& e) {
            row["passed"] = false;
            row["error"] = e.what();
            table << csv_field(rel.name) << ",false,,\n";
        }
        if (!passed) err << "failed: " << rel.name << '\n';
        all = all && passed;
        rows.push_back(std::move(row));
    }
    Json report{{"genus", g.value()},   {"seed", cfg.seed},   {"tolerance", cfg.tolerance},
                {"passed", all},        {"instances", rows}};
    return {all ? 0 : 1, csv(cfg) ? table.str() : dump(report)};
}

Outcome solve(const Config& cfg, std::ostream& err) {
    if (cfg.kmax < 2) throw DomainError("--kmax must be at least 2");
    const Cocycle u = load_cocycle(cfg);
    const auto rep = solve_coboundary(u, builtin_catalog(u.genus()), cfg.kmax);

    int status = 0;
    Json report = io::to_json(rep);
    if (sgn(rep.residual) != 0) {
        err << "nonzero residual " << format_rational(rep.residual) << '\n';
        status = 1;
    } else {
        Json checks = Json::array();
        for (const auto& ch : smoothness_report(rep, cfg.kmax)) {
            if (!ch.passed) {
                err << "smoothness bound fails at k = " << ch.k << '\n';
                status = 1;
            }
            checks.push_back(io::to_json(ch));
        }
        report["smoothness"] = std::move(checks);
    }
    report["status"] = status;

    if (!csv(cfg)) return {status, dump(report)};
    std::ostringstream table;
    table << "class,re,im\n";
    for (const auto& [m, z] : rep.f.coeffs()) {
        table << to_string(m) << ',' << format_rational(z.re) << ',' << format_rational(z.im) << '\n';
    }
    return {status, table.str()};
}

Outcome orbit(const Config& cfg) {
    if (cfg.cls.empty()) throw ParseError("--class is required");
    const HomologyClass m = io::parse_class(cfg.cls, cfg.genus_given ? std::optional<Genus>(Genus(cfg.genus)) : std::nullopt);
    if (m.is_zero()) throw DomainError("the zero class has no increasing ray");
    const auto choice = choose_increasing_twist(m);
    const auto ray = orbit_ray(HomologyClass::basis(m.genus(), choice.curve_index), choice.sign, m, cfg.steps + 1);

    if (csv(cfg)) {
        std::ostringstream table;
        table << "n,class,norm1\n";
        for (std::size_t n = 0; n < ray.size(); ++n) table << n << ',' << to_string(ray[n]) << ',' << norm1(ray[n]) << '\n';
        return {0, table.str()};
    }
    Json rows = Json::array();
    for (std::size_t n = 0; n < ray.size(); ++n) {
        rows.push_back({{"n", n}, {"class", io::to_json(ray[n])}, {"norm1", norm1(ray[n])}});
    }
    Json report{{"genus", m.genus().value()},
                {"twist", basis_label(HomologyClass::basis(m.genus(), choice.curve_index))},
                {"sign", choice.sign},
                {"ray", std::move(rows)}};
    return {0, dump(report)};
}

Outcome check_cocycle(const Config& cfg, std::ostream& err) {
    const Cocycle u = load_cocycle(cfg);
    const auto catalog = builtin_catalog(u.genus());
    bool clean = true;
    std::ostringstream table;
    table << "kind,name,value\n";

    Json relations = Json::array();
    for (const RelationInstance* rel : applicable_relations(u, catalog)) {
        const Rational r = relation_residual(u, *rel);
        if (sgn(r) != 0) {
            clean = false;
            err << "nonzero residual: " << rel->name << '\n';
        }
        relations.push_back({{"name", rel->name}, {"residual", format_rational(r)}});
        table << "residual," << csv_field(rel->name) << ',' << format_rational(r) << '\n';
    }

    Json s = Json::array();
    for (const auto& c : u.gens().curves()) {
        const Rational n = s_vector(u, c.id).norm_sq();
        if (sgn(n) != 0) {
            clean = false;
            err << "nonzero s-vector: " << c.id << '\n';
        }
        s.push_back({{"curve", c.id}, {"norm_sq", format_rational(n)}});
        table << "s_norm_sq," << csv_field(c.id) << ',' << format_rational(n) << '\n';
    }

    Json pairings = Json::array();
    for (const auto& [a, b] : u.declared_pairs()) {
        const QComplex z = c_pairing(u, a, b);
        pairings.push_back({{"a", a}, {"b", b}, {"re", format_rational(z.re)}, {"im", format_rational(z.im)}});
        table << "c_pairing," << csv_field(a + " " + b) << ',' << format_rational(z.re) << ' ' << format_rational(z.im)
              << '\n';
    }

    Json report{{"genus", u.genus().value()}, {"clean", clean},  {"relations", relations},
                {"s", s},                     {"pairings", pairings}};
    return {clean ? 0 : 1, csv(cfg) ? table.str() : dump(report)};
}

Outcome decay_report(const Config& cfg) {
    std::istringstream in(read_file(cfg.in));
    const auto v = io::read_vector_text(in, cfg.genus_given ? std::optional<Genus>(Genus(cfg.genus)) : std::nullopt);
    std::ostringstream table;
    table << "k,squared,exact,approx\n";
    Json rows = Json::array();
    for (unsigned k = 0; k <= cfg.kmax; ++k) {
        const Magnitude f = decay_constant(v, k);
        const auto e = f.exact();
        rows.push_back({{"k", k}, {"F_k", io::to_json(f)}});
        table << k << ',' << format_rational(f.squared()) << ',' << (e ? format_rational(*e) : "") << ',' << f.value()
              << '\n';
    }
    Json report{{"genus", v.genus().value()}, {"support", v.coeffs().size()}, {"rows", std::move(rows)}};
    return {0, csv(cfg) ? table.str() : dump(report)};
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f || !(f << text)) throw Error("cannot write '" + cfg.out + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Twist-group cocycles on the character lattice"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* genus = app.add_option("--genus", cfg.genus, "surface genus (>= 3)");
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--tolerance", cfg.tolerance, "tolerance for floating cross-checks");
    app.add_option("--in", cfg.in, "input file");
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify-relations", "check the relation catalog and --in instances");
    auto* solve_cmd = app.add_subcommand("solve", "recover f with u = df from a cocycle file");
    auto* orbit_cmd = app.add_subcommand("orbit", "increasing twist ray of a class");
    auto* check = app.add_subcommand("check-cocycle", "relation residuals, s-vectors and c-pairings");
    auto* decay = app.add_subcommand("decay-report", "decay constants of a vector text file");
    for (auto* sub : {solve_cmd, decay}) sub->add_option("--kmax", cfg.kmax, "largest k (default 5)");
    orbit_cmd->add_option("--class", cfg.cls, "coordinates \"a1 b1 ... ag bg\"");
    orbit_cmd->add_option("--steps", cfg.steps, "ray length beyond the start (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    cfg.genus_given = genus->count() > 0;
    if (cfg.format.empty()) cfg.format = orbit_cmd->parsed() ? "csv" : "json";

    try {
        Genus{cfg.genus};
        Outcome result;
        if (verify->parsed()) result = verify_relations(cfg, err);
        else if (solve_cmd->parsed()) result = solve(cfg, err);
        else if (orbit_cmd->parsed()) result = orbit(cfg);
        else if (check->parsed()) result = check_cocycle(cfg, err);
        else result = decay_report(cfg);
        emit(cfg, result.text, out);
        return result.status;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace mcgcoh::cli
