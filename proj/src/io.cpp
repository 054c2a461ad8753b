#include "gotzrep/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gotzrep/theorems.hpp"

namespace gotzrep {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const NumPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}};
}

Json to_json(const MacaulayRep& rep) {
  Json terms = Json::array();
  for (const auto& t : rep.terms) terms.push_back({to_json(t.top), t.index});
  return {{"d", rep.d}, {"terms", terms}};
}

Json to_json(const GotzmannRep& g) { return {{"a", g.a}}; }

Json to_json(const AdjustedGotzmannRep& rep) {
  return {{"free_degrees", rep.free_degrees},
          {"n", rep.n},
          {"remainder", to_json(rep.remainder)},
          {"q", to_json(rep.q)},
          {"adjusted_number", rep.adjusted_number()}};
}

Json to_json(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return {{"unit", true}};
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.to_string());
  return {{"gens", gens}};
}

Json to_json(const GradedFreeModule& f) { return {{"n", f.n}, {"degrees", f.degrees}}; }

Json to_json(const MonomialSubmodule& module) {
  Json comps = Json::array();
  for (const auto& c : module.components) comps.push_back(to_json(c));
  return {{"n", module.n()}, {"degrees", module.ambient.degrees}, {"components", comps}};
}

Json to_json(const HilbertSeries& hs) {
  Json num = Json::array();
  for (const auto& c : hs.numerator) num.push_back(to_json(c));
  return {{"numerator", num}, {"low_degree", hs.low_degree}, {"denominator_exponent", hs.n + 1}};
}

Json to_json(const BettiTable& table) {
  Json rows = Json::array();
  for (const auto& [key, v] : table.entries) rows.push_back({key.first, key.second, to_json(v)});
  return {{"betti", rows}};
}

Json to_json(const EmbeddingDims& dims) {
  return {{"s", to_json(dims.s)},
          {"ambient_dim", to_json(dims.ambient_dim)},
          {"sub_dim", to_json(dims.sub_dim)},
          {"grass_dim", to_json(dims.grass_dim)}};
}

Json to_json(const CheckReport& report) {
  Json out = {{"name", report.name},
              {"instance", report.instance},
              {"premises_hold", report.premises_hold},
              {"bound_lhs", report.bound_lhs ? to_json(*report.bound_lhs) : Json(nullptr)},
              {"bound_rhs", to_json(report.bound_rhs)},
              {"verdict", to_string(report.verdict)},
              {"context", report.context}};
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

long long_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field + ": expected an integer");
  return j.get<long>();
}

}  // namespace

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError(field + ": not an integer");
    return out;
  }
  throw ParseError(field + ": expected an integer or decimal string");
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    Rational out;
    if (text.empty() || out.set_str(text, 10) != 0) throw ParseError(field + ": not a rational \"" + text + "\"");
    if (out.get_den() == 0) throw ParseError(field + ": zero denominator");
    out.canonicalize();
    return out;
  }
  throw ParseError(field + ": expected a rational string \"p/q\" or an integer");
}

Monomial monomial_from_string(const std::string& text, int n) {
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "1") return Monomial(std::move(e));
  std::istringstream in(s);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    std::size_t pos = 0;
    if (factor.size() < 2 || factor[0] != 'x') throw ParseError("monomial \"" + text + "\": bad factor");
    ++pos;
    std::size_t end = pos;
    while (end < factor.size() && std::isdigit(static_cast<unsigned char>(factor[end]))) ++end;
    if (end == pos) throw ParseError("monomial \"" + text + "\": missing variable index");
    const int var = std::stoi(factor.substr(pos, end - pos));
    int power = 1;
    if (end < factor.size()) {
      if (factor[end] != '^' || end + 1 == factor.size())
        throw ParseError("monomial \"" + text + "\": bad exponent");
      const std::string digits = factor.substr(end + 1);
      for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("monomial \"" + text + "\": bad exponent");
      power = std::stoi(digits);
    }
    if (var < 0 || var > n)
      throw ParseError("monomial \"" + text + "\": variable x" + std::to_string(var) +
                       " outside x0..x" + std::to_string(n));
    e[static_cast<std::size_t>(var)] += power;
  }
  return Monomial(std::move(e));
}

NumPoly poly_from_json(const Json& j) {
  if (j.is_object() && j.contains("coeffs")) {
    const Json& arr = j.at("coeffs");
    if (!arr.is_array()) throw ParseError("poly.coeffs: expected an array");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < arr.size(); ++i)
      coeffs.push_back(rational_from_json(arr[i], "poly.coeffs[" + std::to_string(i) + "]"));
    return NumPoly(std::move(coeffs));
  }
  if (j.is_object() && j.contains("terms")) {
    const Json& arr = j.at("terms");
    if (!arr.is_array()) throw ParseError("poly.terms: expected an array");
    NumPoly sum;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "poly.terms[" + std::to_string(i) + "]";
      const long a = long_from_json(require(arr[i], "a", where), where + ".a");
      if (a < 0) throw ParseError(where + ".a: must be nonnegative");
      const long shift = arr[i].contains("shift") ? long_from_json(arr[i].at("shift"), where + ".shift") : 0;
      const Rational mult =
          arr[i].contains("mult") ? rational_from_json(arr[i].at("mult"), where + ".mult") : Rational(1);
      sum += binomial_poly(a, shift) * mult;
    }
    return sum;
  }
  throw ParseError("poly: expected {\"coeffs\": [...]} or {\"terms\": [...]}");
}

GotzmannRep gotzmann_from_json(const Json& j) {
  const Json& arr = require(j, "a", "gotzmann");
  if (!arr.is_array()) throw ParseError("gotzmann.a: expected an array");
  GotzmannRep g;
  for (std::size_t i = 0; i < arr.size(); ++i)
    g.a.push_back(long_from_json(arr[i], "gotzmann.a[" + std::to_string(i) + "]"));
  if (!g.well_formed()) throw ParseError("gotzmann.a: must be non-increasing and nonnegative");
  return g;
}

MonomialIdeal ideal_from_json(const Json& j, int n, const std::string& field) {
  if (!j.is_object()) throw ParseError(field + ": expected an object");
  if (j.contains("unit")) {
    if (!j.at("unit").is_boolean()) throw ParseError(field + ".unit: expected a boolean");
    if (j.at("unit").get<bool>()) return MonomialIdeal::unit(n);
  }
  if (!j.contains("gens")) {
    if (j.contains("unit")) return MonomialIdeal::zero(n);
    throw ParseError(field + ": missing field \"gens\"");
  }
  const Json& arr = j.at("gens");
  if (!arr.is_array()) throw ParseError(field + ".gens: expected an array");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) throw ParseError(field + ".gens[" + std::to_string(i) + "]: expected a string");
    try {
      gens.push_back(monomial_from_string(arr[i].get<std::string>(), n));
    } catch (const ParseError& e) {
      throw ParseError(field + ".gens[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

GradedFreeModule module_shape_from_json(const Json& j) {
  const long n = long_from_json(require(j, "n", "module"), "module.n");
  if (n < 0) throw ParseError("module.n: must be nonnegative");
  const Json& degs = require(j, "degrees", "module");
  if (!degs.is_array()) throw ParseError("module.degrees: expected an array");
  std::vector<long> degrees;
  for (std::size_t i = 0; i < degs.size(); ++i)
    degrees.push_back(long_from_json(degs[i], "module.degrees[" + std::to_string(i) + "]"));
  if (!std::is_sorted(degrees.begin(), degrees.end()))
    throw ParseError("module.degrees: must be sorted ascending");
  return GradedFreeModule(static_cast<int>(n), std::move(degrees));
}

MonomialSubmodule module_from_json(const Json& j) {
  GradedFreeModule f = module_shape_from_json(j);
  const Json& comps = require(j, "components", "module");
  if (!comps.is_array()) throw ParseError("module.components: expected an array");
  if (static_cast<long>(comps.size()) != f.rank())
    throw ParseError("module.components: expected " + std::to_string(f.rank()) + " entries, got " +
                     std::to_string(comps.size()));
  std::vector<MonomialIdeal> ideals;
  for (std::size_t i = 0; i < comps.size(); ++i)
    ideals.push_back(ideal_from_json(comps[i], f.n, "module.components[" + std::to_string(i) + "]"));
  return MonomialSubmodule(std::move(f), std::move(ideals));
}

HilbertFunctionSpec hilbert_function_from_json(const Json& j) {
  HilbertFunctionSpec h;
  if (j.is_object() && j.contains("table")) {
    const Json& rows = j.at("table");
    if (!rows.is_array()) throw ParseError("hf.table: expected an array");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string where = "hf.table[" + std::to_string(i) + "]";
      if (!rows[i].is_array() || rows[i].size() != 2) throw ParseError(where + ": expected [d, value]");
      h.table.emplace_back(long_from_json(rows[i][0], where + "[0]"), integer_from_json(rows[i][1], where + "[1]"));
    }
    for (std::size_t i = 1; i < h.table.size(); ++i)
      if (h.table[i].first != h.table[i - 1].first + 1)
        throw ParseError("hf.table: degrees must be consecutive");
  }
  h.tail = poly_from_json(require(j, "tail", "hf"));
  return h;
}

BettiTable betti_from_json(const Json& j) {
  const Json& rows = require(j, "betti", "betti");
  if (!rows.is_array()) throw ParseError("betti: expected an array");
  BettiTable t;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "betti[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != 3) throw ParseError(where + ": expected [i, j, value]");
    t.add(static_cast<int>(long_from_json(rows[i][0], where + "[0]")), long_from_json(rows[i][1], where + "[1]"),
          integer_from_json(rows[i][2], where + "[2]"));
  }
  return t;
}

Json load_json_argument(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return Json::parse(text);
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open \"" + text + "\"");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in \"" + text + "\": " + e.what());
  }
}

}  // namespace gotzrep
