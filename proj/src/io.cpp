#include "mtk/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "mtk/error.hpp"

namespace mtk {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

void require_keys(const Json& j, const std::string& path, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!j.is_object()) schema(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (!required.count(key) && !optional.count(key)) schema(path + "." + key, "unknown key");
  for (const auto& key : required)
    if (!j.contains(key)) schema(path + "." + key, "missing key");
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

long long int_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<long long>();
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) schema(path, "expected a decimal integer string");
    return z;
  }
  schema(path, "expected an integer");
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

Label label_ref(const Json& j, const PreModularData& d, const std::string& path) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0 || v >= d.rank()) schema(path, "label index out of range");
    return static_cast<Label>(v);
  }
  if (j.is_string()) {
    if (auto l = d.ring.find_label(j.get<std::string>())) return *l;
  }
  schema(path, "unknown label");
}

Label label_key(const std::string& key, const PreModularData& d, const std::string& path) {
  if (auto l = d.ring.find_label(key)) return *l;
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used == key.size() && v >= 0 && v < d.rank()) return v;
  } catch (const std::exception&) {
  }
  schema(path, "unknown label '" + key + "'");
}

}  // namespace

Json rational_to_json(const Rational& q) { return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema(path, "expected [num, den]");
  const Integer num = integer_from_json(j[0], path + "[0]");
  const Integer den = integer_from_json(j[1], path + "[1]");
  if (den <= 0) schema(path + "[1]", "denominator must be positive");
  Rational q(num, den);
  q.canonicalize();
  if (q.get_den() != den) schema(path, "rational is not reduced");
  return q;
}

Json cyclo_to_json(const CycloNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_json(c));
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

CycloNum cyclo_from_json(const Json& j, const std::string& path) {
  require_keys(j, path, {"order", "coeffs"});
  const auto order = int_at(j["order"], path + ".order");
  if (order < 1) schema(path + ".order", "order must be positive");
  if (order > max_cyclotomic_order()) schema(path + ".order", "order exceeds the configured cap");
  const auto& cs = array_at(j["coeffs"], path + ".coeffs");
  if (static_cast<std::int64_t>(cs.size()) != euler_phi(order))
    schema(path + ".coeffs", "expected phi(order) = " + std::to_string(euler_phi(order)) + " coefficients");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < cs.size(); ++i) coeffs.push_back(rational_from_json(cs[i], path + ".coeffs[" + std::to_string(i) + "]"));
  return CycloNum::from_coeffs(order, coeffs);
}

Json root_to_json(const RootOfUnity& r) { return Json::array({r.num(), r.den()}); }

RootOfUnity root_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema(path, "expected [num, den]");
  const auto num = int_at(j[0], path + "[0]");
  const auto den = int_at(j[1], path + "[1]");
  if (den < 1) schema(path + "[1]", "denominator must be positive");
  const RootOfUnity r(num, den);
  if (r.num() != num || r.den() != den) schema(path, "root of unity is not in reduced form 0 <= num < den");
  return r;
}

Json matrix_to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyclo_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

CycloMatrix matrix_from_json(const Json& j, const std::string& path) {
  const auto& rows = array_at(j, path);
  const std::size_t n = rows.size();
  CycloMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    const auto& row = array_at(rows[i], rp);
    if (row.size() != n) schema(rp, "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = cyclo_from_json(row[k], rp + "[" + std::to_string(k) + "]");
  }
  return m;
}

Json premodular_to_json(const PreModularData& d) {
  Json fusion = Json::array();
  for (const auto& [i, j, k, n] : d.ring.nonzero()) fusion.push_back({i, j, k, n});
  Json twist = Json::array();
  for (const auto& t : d.twist) twist.push_back(root_to_json(t));
  return Json{{"rank", d.rank()},
              {"labels", d.ring.labels()},
              {"dual", d.ring.duals()},
              {"fusion", fusion},
              {"cyclotomic_order", d.cyclotomic_order},
              {"twist", twist},
              {"sprime", matrix_to_json(d.sprime)}};
}

PreModularData premodular_from_json(const Json& p, const std::string& path) {
  require_keys(p, path, {"rank", "labels", "dual", "fusion", "cyclotomic_order", "twist", "sprime"});
  const auto rank = int_at(p["rank"], path + ".rank");
  if (rank < 1) schema(path + ".rank", "rank must be positive");
  const auto& labels_j = array_at(p["labels"], path + ".labels");
  const auto& dual_j = array_at(p["dual"], path + ".dual");
  const auto& twist_j = array_at(p["twist"], path + ".twist");
  if (labels_j.size() != static_cast<std::size_t>(rank)) schema(path + ".labels", "length differs from rank");
  if (dual_j.size() != static_cast<std::size_t>(rank)) schema(path + ".dual", "length differs from rank");
  if (twist_j.size() != static_cast<std::size_t>(rank)) schema(path + ".twist", "length differs from rank");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels_j.size(); ++i) {
    if (!labels_j[i].is_string()) schema(path + ".labels[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(labels_j[i].get<std::string>());
    if (!seen.insert(labels.back()).second) schema(path + ".labels[" + std::to_string(i) + "]", "duplicate label");
  }
  std::vector<Label> dual;
  for (std::size_t i = 0; i < dual_j.size(); ++i) {
    const auto v = int_at(dual_j[i], path + ".dual[" + std::to_string(i) + "]");
    if (v < 0 || v >= rank) schema(path + ".dual[" + std::to_string(i) + "]", "label index out of range");
    dual.push_back(static_cast<Label>(v));
  }
  FusionRing ring(labels, dual);
  const auto& fusion_j = array_at(p["fusion"], path + ".fusion");
  std::set<std::array<int, 3>> triples;
  for (std::size_t e = 0; e < fusion_j.size(); ++e) {
    const std::string ep = path + ".fusion[" + std::to_string(e) + "]";
    if (!fusion_j[e].is_array() || fusion_j[e].size() != 4) schema(ep, "expected [i, j, k, N]");
    std::array<int, 4> v{};
    for (std::size_t c = 0; c < 4; ++c) {
      const auto x = int_at(fusion_j[e][c], ep + "[" + std::to_string(c) + "]");
      if (c < 3 && (x < 0 || x >= rank)) schema(ep + "[" + std::to_string(c) + "]", "label index out of range");
      if (c == 3 && (x <= 0 || x > std::numeric_limits<int>::max())) schema(ep + "[3]", "coefficient must be positive");
      v[c] = static_cast<int>(x);
    }
    if (!triples.insert({v[0], v[1], v[2]}).second) schema(ep, "duplicate fusion entry");
    ring.set(v[0], v[1], v[2], v[3]);
  }
  const auto order = int_at(p["cyclotomic_order"], path + ".cyclotomic_order");
  if (order < 1 || order > max_cyclotomic_order()) schema(path + ".cyclotomic_order", "order out of range");
  std::vector<RootOfUnity> twist;
  for (std::size_t i = 0; i < twist_j.size(); ++i) {
    const std::string tp = path + ".twist[" + std::to_string(i) + "]";
    twist.push_back(root_from_json(twist_j[i], tp));
    if (order % twist.back().den() != 0) schema(tp, "denominator does not divide cyclotomic_order");
  }
  CycloMatrix sprime = matrix_from_json(p["sprime"], path + ".sprime");
  if (sprime.rows() != static_cast<std::size_t>(rank)) schema(path + ".sprime", "shape differs from rank");
  for (std::size_t i = 0; i < sprime.rows(); ++i)
    for (std::size_t j = 0; j < sprime.cols(); ++j) {
      if (order % sprime(i, j).order() != 0)
        schema(path + ".sprime[" + std::to_string(i) + "][" + std::to_string(j) + "]",
               "order does not divide cyclotomic_order");
      sprime(i, j) = sprime(i, j).embed(order);
    }
  PreModularData d{std::move(ring), std::move(twist), std::move(sprime), order};
  require_valid(d);
  return d;
}

Json group_to_json(const GroupData& g) {
  Json tables = Json::array();
  for (const auto& t : g.char_tables) {
    Json values = Json::array();
    for (const auto& row : t.values) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(cyclo_to_json(v));
      values.push_back(r);
    }
    tables.push_back(Json{{"names", t.names}, {"values", values}});
  }
  return Json{{"name", g.name},   {"order", g.order()},     {"element_names", g.element_names},
              {"mult", g.mult},   {"classes", g.classes}, {"char_tables", tables}};
}

GroupData group_from_json(const Json& p, const std::string& path) {
  require_keys(p, path, {"order", "mult", "classes", "char_tables"}, {"name", "element_names"});
  const auto order = int_at(p["order"], path + ".order");
  if (order < 1) schema(path + ".order", "order must be positive");
  std::vector<std::vector<int>> mult;
  const auto& mj = array_at(p["mult"], path + ".mult");
  if (mj.size() != static_cast<std::size_t>(order)) schema(path + ".mult", "expected order rows");
  for (std::size_t i = 0; i < mj.size(); ++i) {
    const std::string rp = path + ".mult[" + std::to_string(i) + "]";
    const auto& row = array_at(mj[i], rp);
    if (row.size() != static_cast<std::size_t>(order)) schema(rp, "expected order entries");
    std::vector<int> r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto v = int_at(row[k], rp + "[" + std::to_string(k) + "]");
      if (v < 0 || v >= order) schema(rp + "[" + std::to_string(k) + "]", "element index out of range");
      r.push_back(static_cast<int>(v));
    }
    mult.push_back(r);
  }
  std::vector<std::vector<int>> classes;
  const auto& cj = array_at(p["classes"], path + ".classes");
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const std::string cp = path + ".classes[" + std::to_string(i) + "]";
    std::vector<int> c;
    for (std::size_t k = 0; k < array_at(cj[i], cp).size(); ++k) {
      const auto v = int_at(cj[i][k], cp + "[" + std::to_string(k) + "]");
      if (v < 0 || v >= order) schema(cp + "[" + std::to_string(k) + "]", "element index out of range");
      c.push_back(static_cast<int>(v));
    }
    classes.push_back(c);
  }
  std::vector<CharacterTable> tables;
  const auto& tj = array_at(p["char_tables"], path + ".char_tables");
  for (std::size_t i = 0; i < tj.size(); ++i) {
    const std::string tp = path + ".char_tables[" + std::to_string(i) + "]";
    require_keys(tj[i], tp, {"values"}, {"names"});
    CharacterTable t;
    if (tj[i].contains("names")) {
      for (std::size_t k = 0; k < array_at(tj[i]["names"], tp + ".names").size(); ++k) {
        if (!tj[i]["names"][k].is_string()) schema(tp + ".names[" + std::to_string(k) + "]", "expected a string");
        t.names.push_back(tj[i]["names"][k].get<std::string>());
      }
    }
    const auto& vj = array_at(tj[i]["values"], tp + ".values");
    for (std::size_t r = 0; r < vj.size(); ++r) {
      const std::string rp = tp + ".values[" + std::to_string(r) + "]";
      std::vector<CycloNum> row;
      for (std::size_t k = 0; k < array_at(vj[r], rp).size(); ++k)
        row.push_back(cyclo_from_json(vj[r][k], rp + "[" + std::to_string(k) + "]"));
      t.values.push_back(row);
    }
    tables.push_back(t);
  }
  std::string name = "G";
  if (p.contains("name")) {
    if (!p["name"].is_string()) schema(path + ".name", "expected a string");
    name = p["name"].get<std::string>();
  }
  std::vector<std::string> names;
  if (p.contains("element_names")) {
    const auto& ej = array_at(p["element_names"], path + ".element_names");
    if (ej.size() != static_cast<std::size_t>(order)) schema(path + ".element_names", "expected order names");
    for (std::size_t k = 0; k < ej.size(); ++k) {
      if (!ej[k].is_string()) schema(path + ".element_names[" + std::to_string(k) + "]", "expected a string");
      names.push_back(ej[k].get<std::string>());
    }
  }
  return make_group(name, names, mult, classes, tables);
}

Json wrap(const std::string& kind, Json payload) {
  return Json{{"format_version", kFormatVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

Json to_document(const PreModularData& d) { return wrap("premodular", premodular_to_json(d)); }
Json to_document(const GroupData& g) { return wrap("group", group_to_json(g)); }

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

DataObject parse_document(const Json& doc) {
  require_keys(doc, "$", {"format_version", "kind", "payload"});
  if (int_at(doc["format_version"], "$.format_version") != kFormatVersion)
    schema("$.format_version", "unsupported format version");
  if (!doc["kind"].is_string()) schema("$.kind", "expected a string");
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "premodular") return premodular_from_json(doc["payload"], "$.payload");
  if (kind == "group") return group_from_json(doc["payload"], "$.payload");
  schema("$.kind", "expected \"premodular\" or \"group\"");
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

DataObject load(const std::string& path) { return parse_document(read_json(path)); }

PreModularData load_premodular(const std::string& path) {
  auto obj = load(path);
  if (!std::holds_alternative<PreModularData>(obj)) throw SchemaError(path + ": expected kind \"premodular\"");
  return std::get<PreModularData>(std::move(obj));
}

GroupData load_group(const std::string& path) {
  auto obj = load(path);
  if (!std::holds_alternative<GroupData>(obj)) throw SchemaError(path + ": expected kind \"group\"");
  return std::get<GroupData>(std::move(obj));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw UsageError("write failed: " + path);
}

void save(const PreModularData& d, const std::string& path) {
  if (d.rank() == 0) throw UsageError("refusing to save an empty-rank datum");
  require_valid(d);
  write_text(path, canonical_dump(to_document(d)));
}

void save(const GroupData& g, const std::string& path) { write_text(path, canonical_dump(to_document(g))); }

CondenseOptions condense_options_from_json(const Json& j, const PreModularData& d, const std::string& path) {
  require_keys(j, path, {}, {"sz_matrices", "untwisted_stabilizers"});
  CondenseOptions o;
  if (j.contains("sz_matrices")) {
    const std::string sp = path + ".sz_matrices";
    if (!j["sz_matrices"].is_object()) schema(sp, "expected an object");
    FixedPointMatrices m;
    for (const auto& [key, value] : j["sz_matrices"].items())
      m[label_key(key, d, sp + "." + key)] = matrix_from_json(value, sp + "." + key);
    o.fixed_point_matrices = std::move(m);
  }
  if (j.contains("untwisted_stabilizers")) {
    const std::string up = path + ".untwisted_stabilizers";
    if (!j["untwisted_stabilizers"].is_object()) schema(up, "expected an object");
    for (const auto& [key, value] : j["untwisted_stabilizers"].items()) {
      LabelSet s;
      for (std::size_t i = 0; i < array_at(value, up + "." + key).size(); ++i)
        s.push_back(label_ref(value[i], d, up + "." + key + "[" + std::to_string(i) + "]"));
      o.untwisted_stabilizers[label_key(key, d, up + "." + key)] = make_label_set(s);
    }
  }
  return o;
}

Json fixed_point_matrices_to_json(const FixedPointMatrices& m, const PreModularData& d) {
  Json out = Json::object();
  for (const auto& [z, mat] : m) out[d.ring.label(z)] = matrix_to_json(mat);
  return out;
}

Json cyclo_report(const CycloNum& x) {
  const auto z = x.to_complex();
  return Json{{"exact", cyclo_to_json(x)}, {"approx", Json::array({z.real(), z.imag()})}};
}

}  // namespace mtk
