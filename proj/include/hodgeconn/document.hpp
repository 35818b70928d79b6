#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "hodgeconn/connection.hpp"
#include "hodgeconn/holonomy.hpp"
#include "hodgeconn/mhs.hpp"
#include "hodgeconn/splitting.hpp"

namespace hodge {

using json = nlohmann::json;

/// Documents are JSON records with a "type" tag ("mhs", "real_mhs",
/// "delta", "connection"), a "field" tag ("Q" or "Qi") and scalars written as
/// canonical strings. The schema is described in docs/document-format.md.
using Document = std::variant<ComplexMHS, RealMHS, DeltaObject, EquivariantConnection>;

std::string field_name(Field f);
Field parse_field(const std::string& s);

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const Filtration& f);
json to_json(const HodgeNumbers& h);
json to_json(const BigradedSpace& s);
json to_json(const PolyMatrix& p);
json to_json(const BlockMap& blocks);

json to_json(const ComplexMHS& v, Field field = Field::Qi);
json to_json(const RealMHS& v, Field field = Field::Qi);
json to_json(const DeltaObject& d, Field field = Field::Qi);
json to_json(const EquivariantConnection& c, Field field = Field::Qi);
json to_json(const Document& d, Field field = Field::Qi);

/// All parse functions throw ParseError on malformed input and reject
/// non-real scalars when field is Q.
Scalar scalar_from_json(const json& j, Field field);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Field field);
/// Rows of unknown count, each of length cols.
Matrix rows_from_json(const json& j, std::size_t cols, Field field);
Filtration filtration_from_json(const json& j, Direction dir, std::size_t dim, Field field);
BigradedSpace space_from_json(const json& j);
std::vector<Point> path_from_json(const json& j, Field field);

/// The field is taken from the document ("Qi" when absent) unless forced.
Document document_from_json(const json& j, std::optional<Field> forced = std::nullopt);
Field document_field(const json& j, std::optional<Field> forced = std::nullopt);

/// FNV-1a 64-bit hash of the compact serialization, as 16 hex digits.
std::string digest(const json& j);

}  // namespace hodge
