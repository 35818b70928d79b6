#include "hodgeconn/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "hodgeconn/document.hpp"
#include "hodgeconn/errors.hpp"
#include "hodgeconn/fixtures.hpp"
#include "hodgeconn/freelie.hpp"
#include "hodgeconn/hodgecoh.hpp"
#include "hodgeconn/rees.hpp"

namespace hodge {

namespace {

namespace fs = std::filesystem;

constexpr int kMaxTruncation = 12;

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<Field> field;
  std::vector<std::string> lines;
  std::string path;
  int truncation = 5;
  bool orientation_selftest = false;
  unsigned jobs = 1;
  std::string out_dir = "fixtures";
};

struct Outcome {
  std::string line;
  std::string err;
  int code = 0;
};

class Report {
 public:
  Report(std::string command, std::string input_digest) {
    body_["command"] = std::move(command);
    body_["input_digest"] = std::move(input_digest);
    body_["invariants"] = json::array();
    body_["result"] = json::object();
    body_["version"] = kVersion;
  }

  json& result() { return body_["result"]; }

  void check(const std::string& name, bool pass) {
    body_["invariants"].push_back(json{{"name", name}, {"pass", pass}});
    if (!pass) failed_ = true;
  }

  void error(const std::string& kind, const std::string& message) {
    body_["result"] = json{{"error", json{{"kind", kind}, {"message", message}}}};
  }

  bool failed() const { return failed_; }
  std::string dump() const { return body_.dump(); }

 private:
  json body_;
  bool failed_ = false;
};

std::string read_file(const std::string& name) {
  std::ifstream in(name, std::ios::binary);
  if (!in) throw InputError("cannot read " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Each input file holds one document or an array of documents.
std::vector<json> load_documents(const std::vector<std::string>& inputs) {
  std::vector<json> docs;
  for (const auto& name : inputs) {
    json j = json::parse(read_file(name), nullptr, false);
    if (j.is_discarded()) throw ParseError(name + ": not valid JSON");
    if (j.is_array()) {
      for (auto& d : j) docs.push_back(std::move(d));
    } else {
      docs.push_back(std::move(j));
    }
  }
  return docs;
}

Scalar parse_scalar(const std::string& s, Field field) { return scalar_from_json(json(s), field); }

Point parse_point(const std::string& text, Field field) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("point \"" + text + "\" must be written t1,t2");
  return Point{parse_scalar(text.substr(0, comma), field), parse_scalar(text.substr(comma + 1), field)};
}

std::vector<Point> parse_path(const std::string& text, Field field) {
  std::vector<Point> path;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ';'))
    if (!item.empty()) path.push_back(parse_point(item, field));
  if (path.size() < 2) throw ParseError("a path needs at least two points");
  return path;
}

ComplexMHS as_mhs(const Document& doc) {
  if (auto v = std::get_if<ComplexMHS>(&doc)) return *v;
  if (auto v = std::get_if<RealMHS>(&doc)) return realize_real(*v);
  if (auto d = std::get_if<DeltaObject>(&doc)) return delta_to_mhs(*d);
  const auto& c = std::get<EquivariantConnection>(doc);
  return delta_to_mhs(DeltaObject{c.space(), triangle_delta(c)});
}

DeltaObject as_delta(const Document& doc) {
  if (auto d = std::get_if<DeltaObject>(&doc)) return *d;
  if (auto c = std::get_if<EquivariantConnection>(&doc)) return DeltaObject{c->space(), triangle_delta(*c)};
  ComplexMHS v = as_mhs(doc);
  validate_mhs(v);
  return delta_operator(v);
}

EquivariantConnection as_connection(const Document& doc) {
  if (auto c = std::get_if<EquivariantConnection>(&doc)) return *c;
  return connection_from_delta(as_delta(doc));
}

json hodge_json(const HodgeNumbers& h) { return to_json(h); }

bool orientation_pin() {
  DeltaObject d = delta_operator(kummer_mhs(Scalar(1)));
  return triangle_delta(connection_from_delta(d)) == d.delta && d.delta != Matrix::identity(d.space.dim());
}

void cmd_validate(Report& r, const Document& doc) {
  ComplexMHS v = as_mhs(doc);
  MHSCheck c = check_mhs(v);
  r.result()["dim"] = v.dim;
  if (c.violation) {
    const MHSViolation& w = *c.violation;
    r.result()["violation"] = json{{"n", w.n}, {"p", w.p}, {"q", w.q}, {"dim", w.dim}, {"message", w.str()}};
  } else {
    r.result()["hodge_numbers"] = hodge_json(validate_mhs(v));
  }
  r.check("opposed", c.ok());
}

void cmd_split(Report& r, const Document& doc, Field field) {
  DeltaObject d = as_delta(doc);
  json comps = json::array();
  for (const auto& [pq, m] : log_delta_components(d))
    comps.push_back(json{{"p", pq.first}, {"q", pq.second}, {"matrix", to_json(m)}});
  r.result()["delta"] = to_json(d, field);
  r.result()["log_components"] = comps;
  r.result()["hodge_numbers"] = hodge_json(d.space.hodge());
  bool valid = true;
  try {
    validate_delta(d);
  } catch (const MathViolation&) {
    valid = false;
  }
  r.check("delta_lowering_unipotent", valid);
  r.check("rebuilds_delta", delta_operator(delta_to_mhs(d)) == d);
}

void cmd_connect(Report& r, const Document& doc, Field field) {
  DeltaObject d = as_delta(doc);
  EquivariantConnection c = connection_from_delta(d);
  r.result()["connection"] = to_json(c, field);
  r.check("fock_schwinger", is_fock_schwinger(c));
  r.check("flat_iff_split", is_flat(c) == d.delta.is_identity());
  r.check("triangle_recovers_delta", triangle_delta(c) == d.delta);
}

void cmd_holonomy(Report& r, const Document& doc, const Options& o, Field field) {
  EquivariantConnection c = as_connection(doc);
  if (o.path.empty()) {
    Matrix h = triangle_delta(c);
    r.result()["path"] = "triangle";
    r.result()["holonomy"] = to_json(h);
    bool valid = true;
    try {
      validate_delta(DeltaObject{c.space(), h});
    } catch (const MathViolation&) {
      valid = false;
    }
    r.check("delta_lowering_unipotent", valid);
  } else {
    std::vector<Point> path = parse_path(o.path, field);
    json pts = json::array();
    for (const auto& p : path) pts.push_back(json::array({p[0].str(), p[1].str()}));
    r.result()["path"] = pts;
    r.result()["holonomy"] = to_json(holonomy_path(connection_form(c), path));
  }
}

void cmd_roundtrip(Report& r, const Document& doc, Field field) {
  ComplexMHS v = as_mhs(doc);
  HodgeNumbers h = validate_mhs(v);
  DeltaObject d = delta_operator(v);
  EquivariantConnection c = connection_from_delta(d);
  DeltaObject back{d.space, triangle_delta(c)};
  ComplexMHS rebuilt = delta_to_mhs(back);
  r.result()["hodge_numbers"] = hodge_json(h);
  r.result()["delta"] = to_json(d, field);
  r.result()["connection"] = to_json(c, field);
  r.result()["holonomy"] = to_json(back.delta);
  r.check("mhs_valid", true);
  r.check("connection_fock_schwinger", is_fock_schwinger(c));
  r.check("flat_iff_split", is_flat(c) == d.delta.is_identity());
  r.check("holonomy_equals_delta", back == d);
  r.check("rebuilt_mhs_valid", check_mhs(rebuilt).ok());
  r.check("rebuilt_mhs_isomorphic", delta_operator(rebuilt) == d);
  r.check("hodge_numbers_preserved", validate_mhs(rebuilt) == h);
  r.check("conjugate_delta", conjugate_delta(d) == delta_operator(conjugate_mhs(v)));
}

void cmd_rees(Report& r, const Document& doc, const Options& o, Field field) {
  DeltaObject d = as_delta(doc);
  PolyMatrix phi = rees_patching(d);
  r.result()["patching"] = to_json(phi);
  std::vector<std::string> lines = o.lines.empty() ? std::vector<std::string>{"W"} : o.lines;
  json out = json::array();
  bool trivial = true;
  for (const auto& l : lines) {
    Point t = l == "W" ? Point{Scalar(0), Scalar(0)} : parse_point(l, field);
    PolyMatrix g = restrict_to_line(phi, t[0], t[1]);
    std::vector<int> type = splitting_type(g);
    for (int a : type) trivial = trivial && a == 0;
    json entry{{"splitting_type", type}, {"transition", to_json(g)}};
    entry["line"] = l == "W" ? json("W") : json::array({t[0].str(), t[1].str()});
    out.push_back(std::move(entry));
  }
  r.result()["lines"] = out;
  r.check("patching_at_one_is_delta", phi.evaluate(Scalar(1), Scalar(1)) == d.delta);
  r.check("trivial_on_lines", trivial);
}

void cmd_ext(Report& r, const Document& doc) {
  if (auto rv = std::get_if<RealMHS>(&doc)) {
    auto [e0, e1] = real_absolute_cohomology(*rv);
    r.result()["ext0"] = e0;
    r.result()["ext1"] = e1;
    r.result()["field"] = "R";
    HodgeNumbers h = validate_mhs(realize_real(*rv));
    r.result()["hodge_numbers"] = hodge_json(h);
    return;
  }
  EquivariantConnection c = as_connection(doc);
  TwoTermComplex k = invariant_complex(c);
  AbsoluteCohomology a = cohomology(k);
  json domain = json::array(), cokernel = json::array();
  for (const auto& l : k.domain) domain.push_back(l.str());
  for (std::size_t i : a.cokernel_basis) cokernel.push_back(k.codomain[i].str());
  r.result()["ext0"] = a.ext0;
  r.result()["ext1"] = a.ext1;
  r.result()["domain"] = domain;
  r.result()["kernel"] = to_json(a.kernel);
  r.result()["cokernel"] = cokernel;
  HodgeNumbers h = c.space().hodge();
  long euler = 0;
  for (const auto& [pq, n] : h) {
    if (pq.first == 0 && pq.second == 0) euler += static_cast<long>(n);
    if (pq.first <= -1 && pq.second <= -1) euler -= static_cast<long>(n);
  }
  r.result()["hodge_numbers"] = hodge_json(h);
  r.check("euler_characteristic", static_cast<long>(a.ext0) - static_cast<long>(a.ext1) == euler);
}

json lie_payload(int n) {
  const char* dir = std::getenv("HODGECONN_CACHE_DIR");
  fs::path cached;
  if (dir && *dir) {
    cached = fs::path(dir) / ("lie-" + std::to_string(n) + ".json");
    std::ifstream in(cached);
    if (in) {
      json j = json::parse(in, nullptr, false);
      if (!j.is_discarded() && j.value("truncation", -1) == n) return j;
    }
  }
  auto t = universal_tables(n);
  json z = json::array(), a = json::array(), cmp = json::array();
  for (const auto& [pq, l] : t->z_in_alpha)
    z.push_back(t->z.names[t->z.find(pq)] + " = " + lie_str(l, t->alpha));
  for (const auto& [pq, l] : t->alpha_in_z)
    a.push_back(t->alpha.names[t->alpha.find(pq)] + " = " + lie_str(l, t->z));
  for (const auto& c : compare_leading_coefficients(n))
    cmp.push_back(json{{"p", c.pq.first}, {"q", c.pq.second}, {"computed", c.computed.get_str()},
                       {"stated", c.stated.get_str()}, {"agrees", c.agrees}});
  json payload{{"truncation", n}, {"z_in_alpha", z}, {"alpha_in_z", a}, {"leading_comparison", cmp}};
  if (!cached.empty()) {
    std::error_code ec;
    fs::create_directories(cached.parent_path(), ec);
    fs::path tmp = cached;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    std::ofstream(tmp) << payload.dump();
    fs::rename(tmp, cached, ec);
  }
  return payload;
}

Outcome finish(Report& r, int code, std::string err = {}) {
  if (code == 0 && r.failed()) code = 1;
  return Outcome{r.dump(), std::move(err), code};
}

Outcome process(const json& j, const Options& o, bool pin) {
  Report r(o.command, digest(j));
  if (o.orientation_selftest) r.check("orientation_selftest", pin);
  try {
    Field field = document_field(j, o.field);
    Document doc = document_from_json(j, o.field);
    if (o.command == "validate") cmd_validate(r, doc);
    else if (o.command == "split") cmd_split(r, doc, field);
    else if (o.command == "connect") cmd_connect(r, doc, field);
    else if (o.command == "holonomy") cmd_holonomy(r, doc, o, field);
    else if (o.command == "roundtrip") cmd_roundtrip(r, doc, field);
    else if (o.command == "rees") cmd_rees(r, doc, o, field);
    else if (o.command == "ext") cmd_ext(r, doc);
    return finish(r, 0);
  } catch (const InputError& e) {
    r.error("input", e.what());
    return finish(r, 2, e.what());
  } catch (const MathViolation& e) {
    r.error("violation", e.what());
    return finish(r, 1, e.what());
  }
}

std::vector<Outcome> process_all(const std::vector<json>& docs, const Options& o, bool pin) {
  std::vector<Outcome> out(docs.size());
  unsigned workers = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(docs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < docs.size();) out[i] = process(docs[i], o, pin);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

CliResult run(const Options& o) {
  CliResult res;
  bool pin = o.orientation_selftest ? orientation_pin() : true;
  auto emit = [&](const Outcome& oc) {
    res.out += oc.line + "\n";
    if (!oc.err.empty()) res.err += oc.err + "\n";
    res.exit_code = std::max(res.exit_code, oc.code);
  };
  if (o.command == "lie") {
    if (o.truncation < 1 || o.truncation > kMaxTruncation)
      throw InputError("--truncation must lie in [1, " + std::to_string(kMaxTruncation) + "]");
    Report r("lie", digest(json{{"truncation", o.truncation}}));
    if (o.orientation_selftest) r.check("orientation_selftest", pin);
    r.result() = lie_payload(o.truncation);
    bool nonzero = true;
    for (const auto& c : r.result()["leading_comparison"]) nonzero = nonzero && c["computed"] != "0";
    r.check("leading_coefficients_nonzero", nonzero);
    emit(finish(r, 0));
    return res;
  }
  if (o.command == "fixtures") {
    Report r("fixtures", digest(json{{"out", o.out_dir}}));
    r.result()["files"] = write_fixture_corpus(o.out_dir);
    emit(finish(r, 0));
    return res;
  }
  if (o.inputs.empty()) throw InputError(o.command + ": no input documents");
  for (const auto& oc : process_all(load_documents(o.inputs), o, pin)) emit(oc);
  return res;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Options o;
  std::string field;
  CLI::App app{"Exact mixed Hodge structures and equivariant connections", "hodgeconn"};
  app.set_version_flag("--version", kVersion);
  app.add_option("command", o.command, "validate | split | connect | holonomy | roundtrip | rees | ext | lie | fixtures")
      ->required()
      ->check(CLI::IsMember({"validate", "split", "connect", "holonomy", "roundtrip", "rees", "ext", "lie", "fixtures"}));
  app.add_option("inputs", o.inputs, "document files (one document or an array of documents each)");
  app.add_option("--field", field, "scalar field: Q or Qi (default: from each document)")->check(CLI::IsMember({"Q", "Qi"}));
  app.add_option("--truncation,-N", o.truncation, "weight truncation for lie (at most 12)");
  app.add_option("--line", o.lines, "rees: restrict to line t1,t2 or W (repeatable)");
  app.add_option("--path", o.path, "holonomy: explicit path x,y;x,y;... instead of the triangle");
  app.add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out_dir, "fixtures: output directory");
  app.add_flag("--orientation-selftest", o.orientation_selftest, "check the holonomy orientation pin");

  CliResult res;
  std::ostringstream out, err;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    res.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    res.out = out.str();
    res.err = err.str();
    return res;
  }
  try {
    if (!field.empty()) o.field = parse_field(field);
    return run(o);
  } catch (const InputError& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const MathViolation& e) {
    res.exit_code = 1;
    res.err = std::string("violation: ") + e.what() + "\n";
  }
  return res;
}

std::vector<std::string> write_fixture_corpus(const std::string& dir) {
  std::vector<std::pair<std::string, json>> corpus;
  for (int p = -2; p <= 2; ++p)
    for (int q = -2; q <= 2; ++q)
      corpus.emplace_back("pure_" + std::to_string(p) + "_" + std::to_string(q) + ".json", to_json(pure_mhs(p, q), Field::Q));
  const std::vector<std::pair<std::string, Scalar>> kummer = {
      {"0", Scalar(0)}, {"1", Scalar(1)}, {"2+i", Scalar::parse("2+1*i")}, {"-1_2", Scalar::parse("-1/2")}, {"i", Scalar::parse("1*i")}};
  for (const auto& [name, c] : kummer)
    corpus.emplace_back("kummer_" + name + ".json", to_json(kummer_mhs(c), c.is_real() ? Field::Q : Field::Qi));
  const std::vector<std::pair<std::string, std::pair<Scalar, Scalar>>> t3 = {
      {"1_1", {Scalar(1), Scalar(1)}}, {"2_-1", {Scalar(2), Scalar(-1)}}, {"i_1_3", {Scalar::parse("1*i"), Scalar::parse("1/3")}}};
  for (const auto& [name, ab] : t3) {
    DeltaObject d = t3_delta(ab.first, ab.second);
    Field f = d.delta.is_real() ? Field::Q : Field::Qi;
    corpus.emplace_back("t3_" + name + ".json", to_json(d, f));
    corpus.emplace_back("t3_" + name + "_connection.json", to_json(connection_from_delta(d), f));
  }
  corpus.emplace_back("tensor_kummer_1_kummer_2+i.json",
                      to_json(tensor_mhs(kummer_mhs(Scalar(1)), kummer_mhs(Scalar::parse("2+1*i"))), Field::Qi));
  corpus.emplace_back("tensor_pure_-1_-1_kummer_1.json", to_json(tensor_mhs(pure_mhs(-1, -1), kummer_mhs(Scalar(1))), Field::Q));
  for (int n = 0; n <= 2; ++n) corpus.emplace_back("real_tate_" + std::to_string(n) + ".json", to_json(real_tate(n), Field::Q));
  corpus.emplace_back("real_kummer_2.json", to_json(real_kummer(Scalar(2)), Field::Q));
  corpus.emplace_back("real_kummer_1+i.json", to_json(real_kummer(Scalar::parse("1+1*i")), Field::Qi));

  fs::create_directories(dir);
  std::vector<std::string> names;
  for (const auto& [name, doc] : corpus) {
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    if (!out) throw InputError("cannot write " + (fs::path(dir) / name).string());
    out << doc.dump() << "\n";
    names.push_back(name);
  }
  return names;
}

}  // namespace hodge
