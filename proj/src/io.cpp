#include "thick/io.hpp"

#include <fstream>

#include "thick/catalog.hpp"
#include "thick/error.hpp"
#include "thick/parse.hpp"

namespace thick {

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing key '" + key + "'", 0);
  return j.at(key);
}

std::vector<Poly> polys_from_json(const Json& j, const RingPtr& base) {
  if (!j.is_array()) throw ParseError("expected a list of polynomials", 0);
  std::vector<Poly> out;
  for (const auto& e : j) out.push_back(parse_poly(e.get<std::string>(), base));
  return out;
}

Field field_from_json(const Json& j) {
  auto c = require(j, "char", "field").get<std::uint32_t>();
  return c == 0 ? Field::rationals() : Field::prime(c);
}

}  // namespace

RingRef ring_from_json(const Json& j, const std::string& fallback_name) {
  try {
    auto field = field_from_json(require(j, "field", "ring"));
    auto vars = require(j, "vars", "ring").get<std::vector<std::string>>();
    std::vector<unsigned> weights;
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<unsigned>>();
    auto base = make_poly_ring(field, vars, {}, weights);
    auto relations = polys_from_json(j.value("relations", Json::array()), base);
    std::vector<RingPres::PrimeInput> primes;
    for (const auto& p : j.value("primes", Json::array()))
      primes.push_back({require(p, "name", "prime").get<std::string>(), polys_from_json(require(p, "gens", "prime"), base)});
    FlagAssertions flags;
    if (j.contains("flags")) {
      const auto& f = j.at("flags");
      if (f.contains("gorenstein")) flags.gorenstein = f.at("gorenstein").get<bool>();
      if (f.contains("lci_punctured")) flags.lci_punctured = f.at("lci_punctured").get<bool>();
    }
    return RingPres::make(j.value("name", fallback_name), base, relations, primes, flags);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("ring description: ") + e.what(), 0);
  }
}

Matrix matrix_from_json(const Json& j, const RingPtr& base) {
  if (!j.is_array()) throw ParseError("matrix must be a list of rows", 0);
  std::vector<std::vector<Poly>> rows;
  for (const auto& row : j) rows.push_back(polys_from_json(row, base));
  for (const auto& row : rows)
    if (row.size() != rows.front().size()) throw ParseError("matrix rows have different lengths", 0);
  return Matrix::from_rows(base, rows);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

RingRef resolve_ring(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) {
    auto rest = ref.substr(8);
    return load_catalog(rest.substr(0, rest.find('/'))).ring;
  }
  return ring_from_json(read_json_file(ref), ref);
}

ModulePres resolve_module(const std::string& ref, const RingRef& ctx) {
  if (ref.rfind("catalog:", 0) == 0) {
    auto rest = ref.substr(8);
    auto slash = rest.find('/');
    if (slash == std::string::npos) throw ParseError("module reference needs catalog:NAME/sample", 0);
    const auto& c = load_catalog(rest.substr(0, slash));
    return c.sample(rest.substr(slash + 1));
  }
  return module_from_json(read_json_file(ref), ctx);
}

ModulePres module_from_json(const Json& j, const RingRef& ctx) {
  if (j.is_string()) return resolve_module(j.get<std::string>(), ctx);
  RingRef ring = ctx;
  if (j.contains("ring")) {
    const auto& r = j.at("ring");
    ring = r.is_string() ? resolve_ring(r.get<std::string>()) : ring_from_json(r);
  }
  if (!ring) throw ParseError("module description has no ring", 0);
  return ModulePres(ring, matrix_from_json(require(j, "matrix", "module"), ring->base()));
}

namespace {

std::map<int, Matrix> indexed_matrices(const Json& j, const RingPtr& base) {
  std::map<int, Matrix> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace(std::stoi(it.key()), matrix_from_json(it.value(), base));
  return out;
}

}  // namespace

ComplexHandle complex_from_json(const Json& j, const RingRef& ctx) {
  RingRef ring = ctx;
  if (j.is_object() && j.contains("ring")) {
    const auto& r = j.at("ring");
    ring = r.is_string() ? resolve_ring(r.get<std::string>()) : ring_from_json(r);
  }
  try {
    const auto kind = require(j, "kind", "complex").get<std::string>();
    if (kind == "delta") return ComplexHandle::delta(module_from_json(require(j, "module", "complex"), ring));
    if (kind == "shift")
      return ComplexHandle::shift(complex_from_json(require(j, "of", "complex"), ring), require(j, "by", "complex").get<int>());
    if (!ring) throw ParseError("complex description has no ring", 0);
    if (kind == "free") {
      auto range = require(j, "range", "complex").get<std::vector<int>>();
      if (range.size() != 2 || range[0] > range[1]) throw ParseError("free complex range must be [lo, hi]", 0);
      FreeComplex f;
      f.lo = range[0];
      f.diffs = indexed_matrices(j.value("diffs", Json::object()), ring->base());
      if (j.contains("ranks")) {
        f.ranks = j.at("ranks").get<std::vector<std::size_t>>();
        if (f.ranks.size() != static_cast<std::size_t>(range[1] - range[0] + 1))
          throw ParseError("free complex ranks do not match the range", 0);
      } else {
        for (int i = range[0]; i <= range[1]; ++i) {
          std::optional<std::size_t> r;
          if (auto it = f.diffs.find(i); it != f.diffs.end()) r = it->second.cols();
          if (auto it = f.diffs.find(i + 1); it != f.diffs.end()) r = it->second.rows();
          if (!r) throw ParseError("rank of degree " + std::to_string(i) + " is not determined; give \"ranks\"", 0);
          f.ranks.push_back(*r);
        }
      }
      return ComplexHandle::free(ring, std::move(f));
    }
    if (kind == "cone") {
      const auto& m = require(j, "map", "cone");
      auto src = complex_from_json(require(m, "source", "map"), ring);
      auto tgt = complex_from_json(require(m, "target", "map"), ring);
      return ComplexHandle::cone(
          ComplexMap{src, tgt, indexed_matrices(m.value("components", Json::object()), ring->base())});
    }
    throw ParseError("unknown complex kind '" + kind + "'", 0);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("complex description: ") + e.what(), 0);
  }
}

Json to_json(const SpecSubset& s) {
  Json basis = Json::array(), members = Json::array();
  for (auto i : s.basis()) basis.push_back(s.ring()->primes()[i].name);
  for (auto i : s.member_indices()) members.push_back(s.ring()->primes()[i].name);
  return Json{{"basis", basis}, {"members", members}};
}

}  // namespace thick
