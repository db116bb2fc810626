#pragma once

// Interchange formats.
//
//   class line     "a1 b1 ... ag bg"
//   vector text    one support point per line: "a1 b1 ... ag bg  re  im",
//                  re/im as "num/den"; '#' starts a comment
//   JSON           classes as integer arrays, rationals as "num/den" strings,
//                  matrices as row-major integer grids

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcgcoh/cohomology.hpp"

namespace mcgcoh::io {

using Json = nlohmann::ordered_json;

/// Genus is taken from the token count when not given.
HomologyClass parse_class(std::string_view line, std::optional<Genus> g = std::nullopt);

SparseVector read_vector_text(std::istream& in, std::optional<Genus> g = std::nullopt,
                              Space space = Space::MeanZero);
void write_vector_text(std::ostream& out, const SparseVector& v);

Json to_json(const HomologyClass& m);
Json to_json(const IntMatrix& m);
Json to_json(const SymplecticMatrix& m);
Json to_json(const SparseVector& v);
Json to_json(const Curve& c);
Json to_json(const TwistWord& w);
Json to_json(const RelationInstance& rel);
Json to_json(const Cocycle& u);
/// {squared, exact (when the square root is rational), approx}
Json to_json(const Magnitude& m);
Json to_json(const SolveReport& rep);
Json to_json(const SmoothnessCheck& check);

HomologyClass class_from_json(const Json& j, Genus g);
IntMatrix matrix_from_json(const Json& j);
SparseVector vector_from_json(const Json& j, Genus g, Space space = Space::MeanZero);
Curve curve_from_json(const Json& j, Genus g);
TwistWord word_from_json(const Json& j);
RelationInstance relation_from_json(const Json& j, Genus g);
/// Accepts a single instance or an array of them.
std::vector<RelationInstance> relations_from_json(const Json& j, Genus g);
Cocycle cocycle_from_json(const Json& j);

/// Parse errors from nlohmann are rethrown as ParseError.
Json parse_json(std::istream& in);

}  // namespace mcgcoh::io
