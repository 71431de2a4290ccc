#include "ternalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ternalg {

namespace {

using Index = std::vector<std::size_t>;
using Entries = std::map<Index, Rational>;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, path + ": " + what);
}

Json scalar_json(const Rational& q) { return q.str(); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json entry_json(const Index& idx, const Rational& v) {
  Json e = Json::object();
  e["indices"] = idx;
  e["value"] = scalar_json(v);
  return e;
}

Json tensor3_json(const Tensor3& t) {
  Json out = Json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) out.push_back(entry_json({i, j, k}, t(i, j, k)));
  return out;
}

Json tensor4_json(const Tensor4& t) {
  Json out = Json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (!t(i, j, k, l).is_zero()) out.push_back(entry_json({i, j, k, l}, t(i, j, k, l)));
  return out;
}

Json linrep_json(const LinRep& l) {
  Json out = Json::array();
  for (std::size_t i = 0; i < l.mats.size(); ++i)
    for (std::size_t r = 0; r < l.module_dim; ++r)
      for (std::size_t c = 0; c < l.module_dim; ++c)
        if (!l.mats[i](r, c).is_zero()) out.push_back(entry_json({i, r, c}, l.mats[i](r, c)));
  return out;
}

Json birep_json(const BiRep& b) {
  Json out = Json::array();
  for (std::size_t i = 0; i < b.mats.size(); ++i)
    for (std::size_t j = 0; j < b.mats[i].size(); ++j)
      for (std::size_t r = 0; r < b.module_dim; ++r)
        for (std::size_t c = 0; c < b.module_dim; ++c)
          if (!b.mats[i][j](r, c).is_zero()) out.push_back(entry_json({i, j, r, c}, b.mats[i][j](r, c)));
  return out;
}

// Parsing helpers; `path` names the field for diagnostics.

Rational parse_scalar(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational::parse(j.dump());
  fail(path, "expected a rational string or an integer");
}

std::size_t parse_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& need(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&k](const char* a) { return k == a; }))
      fail(path, "unknown field '" + k + "'");
  }
}

Entries parse_sparse(const Json& arr, const Index& bounds, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected a list of {indices, value} entries");
  Entries out;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string here = path + "[" + std::to_string(e) + "]";
    only_keys(arr[e], {"indices", "value"}, here);
    const Json& ix = need(arr[e], "indices", here);
    if (!ix.is_array() || ix.size() != bounds.size())
      fail(here + ".indices", "expected " + std::to_string(bounds.size()) + " indices");
    Index idx;
    for (std::size_t s = 0; s < bounds.size(); ++s) {
      const std::size_t v = parse_count(ix[s], here + ".indices[" + std::to_string(s) + "]");
      if (v >= bounds[s])
        fail(here + ".indices[" + std::to_string(s) + "]",
             "index " + std::to_string(v) + " out of range (bound " + std::to_string(bounds[s]) + ")");
      idx.push_back(v);
    }
    const Rational value = parse_scalar(need(arr[e], "value", here), here + ".value");
    if (!out.emplace(idx, value).second) fail(here, "duplicate indices");
  }
  return out;
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Adds every reordering of the first `k` indices with the alternating sign.
void complete_alternating(Entries& entries, std::size_t k, const std::string& path, CompletionLog* log) {
  Entries out = entries;
  std::size_t filled = 0;
  for (const auto& [idx, v] : entries) {
    if (v.is_zero()) continue;
    std::set<std::size_t> distinct(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
    if (distinct.size() != k) fail(path, "nonzero entry with a repeated alternating index cannot be completed");
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    while (std::next_permutation(perm.begin(), perm.end())) {
      Index target = idx;
      for (std::size_t i = 0; i < k; ++i) target[i] = idx[perm[i]];
      const Rational want = permutation_sign(perm) * v;
      auto [it, inserted] = out.emplace(target, want);
      if (inserted) {
        ++filled;
      } else if (it->second != want) {
        std::ostringstream os;
        os << "skew completion conflict at indices [";
        for (std::size_t i = 0; i < target.size(); ++i) os << (i ? "," : "") << target[i];
        os << "]: listed " << it->second << ", implied " << want;
        fail(path, os.str());
      }
    }
  }
  if (log) log->push_back(path + ": filled " + std::to_string(filled) + " entries");
  entries = std::move(out);
}

Tensor3 tensor3_from(const Entries& e, std::size_t n) {
  Tensor3 t(n);
  for (const auto& [idx, v] : e) t(idx[0], idx[1], idx[2]) = v;
  return t;
}

Tensor4 tensor4_from(const Entries& e, std::size_t n) {
  Tensor4 t(n);
  for (const auto& [idx, v] : e) t(idx[0], idx[1], idx[2], idx[3]) = v;
  return t;
}

LinRep linrep_from(const Entries& e, std::size_t n, std::size_t m) {
  LinRep l{m, std::vector<Matrix>(n, Matrix(m, m))};
  for (const auto& [idx, v] : e) l.mats[idx[0]](idx[1], idx[2]) = v;
  return l;
}

BiRep birep_from(const Entries& e, std::size_t n, std::size_t m) {
  BiRep b{m, std::vector<std::vector<Matrix>>(n, std::vector<Matrix>(n, Matrix(m, m)))};
  for (const auto& [idx, v] : e) b.mats[idx[0]][idx[1]](idx[2], idx[3]) = v;
  return b;
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

Vec parse_vec(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.size() != n) fail(path, "expected " + std::to_string(n) + " entries");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = parse_scalar(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

}  // namespace

Json document_to_json(const Document& d) {
  const AlgebraBundle& a = d.algebra;
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["name"] = a.name;
  j["dim"] = a.dim;
  j["basis"] = a.basis_labels;
  if (a.product) j["product"] = tensor3_json(*a.product);
  if (a.bracket) j["bracket"] = tensor4_json(*a.bracket);
  if (a.binary_bracket) j["binary_bracket"] = tensor3_json(*a.binary_bracket);
  if (a.unit) {
    const Vec& u = *a.unit;
    std::size_t nonzero = 0, at = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!u[i].is_zero()) ++nonzero, at = i;
    if (nonzero == 1 && u[at] == Rational(1))
      j["unit"] = at;
    else
      j["unit"] = vec_json(u);
  }
  if (d.rep) {
    Json r = Json::object();
    r["module_dim"] = d.rep->module_dim();
    if (d.rep->mu) r["mu"] = linrep_json(*d.rep->mu);
    if (d.rep->rho) r["rho"] = birep_json(*d.rep->rho);
    if (d.rep->lie_rho) r["lie_rho"] = linrep_json(*d.rep->lie_rho);
    j["rep"] = std::move(r);
  }
  if (!d.maps.empty()) {
    Json maps = Json::array();
    for (const auto& m : d.maps) {
      Json e = Json::object();
      e["name"] = m.name;
      e["rows"] = m.matrix.rows();
      e["cols"] = m.matrix.cols();
      e["matrix"] = matrix_json(m.matrix);
      maps.push_back(std::move(e));
    }
    j["maps"] = std::move(maps);
  }
  if (d.form) j["form"] = Json{{"matrix", matrix_json(*d.form)}};
  if (d.trace) j["trace"] = vec_json(d.trace->row);
  return j;
}

Document document_from_json(const Json& j, const ParseOptions& options, CompletionLog* log) {
  only_keys(j,
            {"schema_version", "name", "dim", "basis", "product", "bracket", "binary_bracket", "unit", "rep",
             "maps", "form", "trace"},
            "$");
  const Json& ver = need(j, "schema_version", "$");
  if (!ver.is_number_integer() || ver.get<std::int64_t>() != kSchemaVersion)
    fail("$.schema_version", "unsupported schema version " + ver.dump());
  const std::size_t n = parse_count(need(j, "dim", "$"), "$.dim");
  if (n > dimension_cap())
    throw Error(Errc::DimensionCap,
                "$.dim: " + std::to_string(n) + " exceeds the cap " + std::to_string(dimension_cap()));

  Document d;
  AlgebraBundle& a = d.algebra;
  a = make_bundle(n);
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("$.name", "expected a string");
    a.name = it->get<std::string>();
  }
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || it->size() != n) fail("$.basis", "expected " + std::to_string(n) + " labels");
    a.basis_labels.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) fail("$.basis[" + std::to_string(i) + "]", "expected a string");
      a.basis_labels.push_back((*it)[i].get<std::string>());
    }
  }
  if (auto it = j.find("product"); it != j.end()) a.product = tensor3_from(parse_sparse(*it, {n, n, n}, "$.product"), n);
  if (auto it = j.find("bracket"); it != j.end()) {
    Entries e = parse_sparse(*it, {n, n, n, n}, "$.bracket");
    if (options.complete_skew) complete_alternating(e, 3, "$.bracket", log);
    a.bracket = tensor4_from(e, n);
  }
  if (auto it = j.find("binary_bracket"); it != j.end()) {
    Entries e = parse_sparse(*it, {n, n, n}, "$.binary_bracket");
    if (options.complete_skew) complete_alternating(e, 2, "$.binary_bracket", log);
    a.binary_bracket = tensor3_from(e, n);
  }
  if (auto it = j.find("unit"); it != j.end()) {
    if (it->is_number_integer()) {
      const std::size_t u = parse_count(*it, "$.unit");
      if (u >= n) fail("$.unit", "index out of range");
      a.unit = Vec::basis(n, u);
    } else {
      a.unit = parse_vec(*it, n, "$.unit");
    }
  }
  if (auto it = j.find("rep"); it != j.end()) {
    only_keys(*it, {"module_dim", "mu", "rho", "lie_rho"}, "$.rep");
    const std::size_t m = parse_count(need(*it, "module_dim", "$.rep"), "$.rep.module_dim");
    if (m > dimension_cap()) throw Error(Errc::DimensionCap, "$.rep.module_dim exceeds the cap");
    RepBundle r;
    r.algebra = a;
    if (auto f = it->find("mu"); f != it->end()) r.mu = linrep_from(parse_sparse(*f, {n, m, m}, "$.rep.mu"), n, m);
    if (auto f = it->find("rho"); f != it->end()) {
      Entries e = parse_sparse(*f, {n, n, m, m}, "$.rep.rho");
      if (options.complete_skew) complete_alternating(e, 2, "$.rep.rho", log);
      r.rho = birep_from(e, n, m);
    }
    if (auto f = it->find("lie_rho"); f != it->end())
      r.lie_rho = linrep_from(parse_sparse(*f, {n, m, m}, "$.rep.lie_rho"), n, m);
    if (!r.mu && !r.rho && !r.lie_rho) fail("$.rep", "needs at least one of mu, rho, lie_rho");
    d.rep = std::move(r);
  }
  if (auto it = j.find("maps"); it != j.end()) {
    if (!it->is_array()) fail("$.maps", "expected a list");
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string here = "$.maps[" + std::to_string(e) + "]";
      const Json& mj = (*it)[e];
      only_keys(mj, {"name", "rows", "cols", "matrix"}, here);
      const Json& name = need(mj, "name", here);
      if (!name.is_string()) fail(here + ".name", "expected a string");
      const std::size_t rows = parse_count(need(mj, "rows", here), here + ".rows");
      const std::size_t cols = parse_count(need(mj, "cols", here), here + ".cols");
      for (const auto& prev : d.maps)
        if (prev.name == name.get<std::string>()) fail(here + ".name", "duplicate map name");
      d.maps.push_back({name.get<std::string>(), parse_matrix(need(mj, "matrix", here), rows, cols, here + ".matrix")});
    }
  }
  if (auto it = j.find("form"); it != j.end()) {
    only_keys(*it, {"matrix"}, "$.form");
    d.form = parse_matrix(need(*it, "matrix", "$.form"), n, n, "$.form.matrix");
  }
  if (auto it = j.find("trace"); it != j.end()) d.trace = TraceFunctional{parse_vec(*it, n, "$.trace")};
  a.validate();
  if (d.rep) {
    d.rep->algebra = a;
    d.rep->validate();
  }
  return d;
}

std::string serialize_document(const Document& d) { return document_to_json(d).dump(2) + "\n"; }

Document parse_document(std::string_view text, const ParseOptions& options, CompletionLog* log) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    const std::size_t nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const std::size_t col = nl == std::string_view::npos ? upto + 1 : upto - nl;
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  return document_from_json(j, options, log);
}

Json report_to_json(const CheckReport& r) {
  Json j = Json::object();
  j["verdict"] = r.pass ? "pass" : "fail";
  j["kind"] = r.kind;
  j["checked_identities"] = r.checked_identities;
  j["tuple_count"] = r.tuple_count;
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    Json e = Json::object();
    e["identity"] = c.identity;
    e["indices"] = c.indices;
    e["residual"] = vec_json(c.residual);
    ces.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(ces);
  if (r.seconds) j["timing"] = Json{{"seconds", *r.seconds}};
  return j;
}

CheckReport report_from_json(const Json& j) {
  try {
    CheckReport r;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") fail("$.verdict", "expected pass or fail");
    r.pass = verdict == "pass";
    r.kind = j.at("kind").get<std::string>();
    r.checked_identities = j.at("checked_identities").get<std::vector<std::string>>();
    r.tuple_count = j.at("tuple_count").get<std::uint64_t>();
    for (const auto& c : j.at("counterexamples")) {
      Counterexample ce;
      ce.identity = c.at("identity").get<std::string>();
      ce.indices = c.at("indices").get<std::vector<std::size_t>>();
      const Json& res = c.at("residual");
      ce.residual = parse_vec(res, res.size(), "$.counterexamples.residual");
      r.counterexamples.push_back(std::move(ce));
    }
    if (auto it = j.find("timing"); it != j.end()) r.seconds = it->at("seconds").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string("report: ") + e.what());
  }
}

std::string serialize_report(const CheckReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, path + ": cannot write file");
  out << text;
  if (!out) throw Error(Errc::ParseError, path + ": write failed");
}

}  // namespace ternalg
