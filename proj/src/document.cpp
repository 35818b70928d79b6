#include "hodgeconn/document.hpp"

#include <cstdint>
#include <cstdio>
#include <set>

#include "hodgeconn/errors.hpp"

namespace hodge {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::size_t size_of(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

std::string field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "Qi") return Field::Qi;
  throw ParseError("unknown field \"" + s + "\" (expected Q or Qi)");
}

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Subspace& s) { return to_json(s.basis()); }

json to_json(const Filtration& f) {
  json steps = json::array();
  for (const auto& [k, s] : f.jumps()) steps.push_back(json{{"index", k}, {"basis", to_json(s)}});
  return steps;
}

json to_json(const HodgeNumbers& h) {
  json out = json::array();
  for (const auto& [pq, d] : h) out.push_back(json{{"p", pq.first}, {"q", pq.second}, {"h", d}});
  return out;
}

json to_json(const BigradedSpace& s) {
  json out = json::array();
  for (const auto& [p, q] : s.labels()) out.push_back(json::array({p, q}));
  return out;
}

json to_json(const PolyMatrix& p) {
  json out = json::array();
  for (const auto& [e, m] : p.terms()) out.push_back(json{{"exponent", json::array({e[0], e[1]})}, {"matrix", to_json(m)}});
  return out;
}

json to_json(const BlockMap& blocks) {
  json out = json::array();
  for (const auto& [pq, m] : blocks) out.push_back(json{{"p", pq.first}, {"q", pq.second}, {"matrix", to_json(m)}});
  return out;
}

json to_json(const ComplexMHS& v, Field field) {
  return {{"type", "mhs"}, {"field", field_name(field)}, {"dim", v.dim},
          {"W", to_json(v.W)}, {"Fp", to_json(v.Fp)}, {"Fpp", to_json(v.Fpp)}};
}

json to_json(const RealMHS& v, Field field) {
  return {{"type", "real_mhs"}, {"field", field_name(field)}, {"dim", v.dim}, {"W", to_json(v.W)}, {"F", to_json(v.F)}};
}

json to_json(const DeltaObject& d, Field field) {
  return {{"type", "delta"}, {"field", field_name(field)}, {"labels", to_json(d.space)}, {"delta", to_json(d.delta)}};
}

json to_json(const EquivariantConnection& c, Field field) {
  json blocks = json::array();
  std::set<Bidegree> keys;
  for (const auto& [pq, m] : c.A()) keys.insert(pq);
  for (const auto& [pq, m] : c.B()) keys.insert(pq);
  for (const auto& pq : keys)
    blocks.push_back(json{{"p", pq.first}, {"q", pq.second}, {"A", to_json(c.A(pq))}, {"B", to_json(c.B(pq))}});
  return {{"type", "connection"}, {"field", field_name(field)}, {"labels", to_json(c.space())}, {"blocks", blocks}};
}

json to_json(const Document& d, Field field) {
  return std::visit([field](const auto& v) { return to_json(v, field); }, d);
}

Scalar scalar_from_json(const json& j, Field field) {
  Scalar s;
  if (j.is_string()) {
    s = Scalar::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    s = Scalar(static_cast<long>(j.get<long long>()));
  } else {
    throw ParseError("scalars must be strings such as \"1/2\" or \"1/2+3*i\"");
  }
  if (field == Field::Q && !s.is_real()) throw ParseError("non-rational scalar " + s.str() + " under field Q");
  return s;
}

Matrix rows_from_json(const json& j, std::size_t cols, Field field) {
  array_of(j, "matrix");
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = array_of(j[i], "matrix row");
    if (row.size() != cols)
      throw DimensionMismatch("matrix row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(row[k], field);
  }
  return m;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, Field field) {
  Matrix m = rows_from_json(j, cols, field);
  if (m.rows() != rows) throw DimensionMismatch("matrix has " + std::to_string(m.rows()) + " rows, expected " + std::to_string(rows));
  return m;
}

Filtration filtration_from_json(const json& j, Direction dir, std::size_t dim, Field field) {
  array_of(j, "filtration");
  std::map<int, Subspace> steps;
  for (const auto& step : j) {
    int k = int_of(field_of(step, "index"), "filtration index");
    if (steps.count(k)) throw ParseError("repeated filtration index " + std::to_string(k));
    steps.emplace(k, Subspace::span(rows_from_json(field_of(step, "basis"), dim, field)));
  }
  return Filtration(dir, dim, steps);
}

BigradedSpace space_from_json(const json& j) {
  array_of(j, "labels");
  std::vector<Bidegree> labels;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2) throw ParseError("labels are [p, q] pairs");
    labels.emplace_back(int_of(l[0], "p"), int_of(l[1], "q"));
  }
  return BigradedSpace(std::move(labels));
}

std::vector<Point> path_from_json(const json& j, Field field) {
  array_of(j, "path");
  std::vector<Point> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("path points are [t1, t2] pairs");
    out.push_back(Point{scalar_from_json(p[0], field), scalar_from_json(p[1], field)});
  }
  return out;
}

Field document_field(const json& j, std::optional<Field> forced) {
  if (forced) return *forced;
  if (j.is_object() && j.contains("field")) {
    if (!j.at("field").is_string()) throw ParseError("field must be a string");
    return parse_field(j.at("field").get<std::string>());
  }
  return Field::Qi;
}

Document document_from_json(const json& j, std::optional<Field> forced) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  const json& type = field_of(j, "type");
  if (!type.is_string()) throw ParseError("type must be a string");
  const std::string t = type.get<std::string>();
  Field field = document_field(j, forced);
  if (t == "mhs") {
    std::size_t n = size_of(field_of(j, "dim"), "dim");
    return ComplexMHS{n, filtration_from_json(field_of(j, "W"), Direction::Increasing, n, field),
                      filtration_from_json(field_of(j, "Fp"), Direction::Decreasing, n, field),
                      filtration_from_json(field_of(j, "Fpp"), Direction::Decreasing, n, field)};
  }
  if (t == "real_mhs") {
    std::size_t n = size_of(field_of(j, "dim"), "dim");
    return RealMHS{n, filtration_from_json(field_of(j, "W"), Direction::Increasing, n, Field::Q),
                   filtration_from_json(field_of(j, "F"), Direction::Decreasing, n, field)};
  }
  if (t == "delta") {
    BigradedSpace s = space_from_json(field_of(j, "labels"));
    DeltaObject d{s, matrix_from_json(field_of(j, "delta"), s.dim(), s.dim(), field)};
    validate_delta(d);
    return d;
  }
  if (t == "connection") {
    BigradedSpace s = space_from_json(field_of(j, "labels"));
    BlockMap a, b;
    for (const auto& blk : array_of(field_of(j, "blocks"), "blocks")) {
      Bidegree pq{int_of(field_of(blk, "p"), "p"), int_of(field_of(blk, "q"), "q")};
      if (a.count(pq)) throw ParseError("repeated connection block");
      a.emplace(pq, matrix_from_json(field_of(blk, "A"), s.dim(), s.dim(), field));
      b.emplace(pq, matrix_from_json(field_of(blk, "B"), s.dim(), s.dim(), field));
    }
    return EquivariantConnection(s, std::move(a), std::move(b));
  }
  throw ParseError("unknown document type \"" + t + "\"");
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hodge
