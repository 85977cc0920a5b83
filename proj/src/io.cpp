#include "eigenpts/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eigenpts::io {

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coef", to_string(c)}, {"exp", m.exponents()}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  if (j.is_string()) throw std::invalid_argument("polynomial must be a JSON object");
  const std::size_t nvars = j.at("nvars").get<std::size_t>();
  if (nvars == 0 || nvars > kMaxVars) throw std::invalid_argument("nvars out of range");
  Polynomial p(nvars);
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exp").get<std::vector<unsigned>>();
    if (exps.size() != nvars) throw std::invalid_argument("exponent vector length differs from nvars");
    const auto& c = t.at("coef");
    Rational q = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
    p.add_term(Monomial(std::span<const unsigned>(exps)), q);
  }
  return p;
}

json to_json(const PartialSymTensor& t) {
  json slices = json::array();
  for (const auto& g : t.slices()) slices.push_back(to_json(g));
  return {{"n", t.n()}, {"d", t.d()}, {"kind", "partial"}, {"slices", slices}};
}

json to_json(const SymmetricTensor& t) {
  return {{"n", t.n()}, {"d", t.d()}, {"kind", "symmetric"}, {"f", to_json(t.form())}};
}

TensorFile tensor_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  const std::string kind = j.value("kind", "partial");
  if (kind == "symmetric") {
    SymmetricTensor s(n, d, polynomial_from_json(j.at("f")));
    return {s.partial(), s.form()};
  }
  if (kind != "partial") throw std::invalid_argument("unknown tensor kind '" + kind + "'");
  std::vector<Polynomial> slices;
  for (const auto& g : j.at("slices")) slices.push_back(polynomial_from_json(g));
  return {PartialSymTensor(n, d, std::move(slices)), std::nullopt};
}

json point_to_json(const ProjectivePoint& p) {
  json coords = json::array();
  if (p.is_exact()) {
    for (const auto& c : p.exact()) coords.push_back(to_string(c));
  } else {
    for (const auto& c : p.approx()) coords.push_back({c.real(), c.imag()});
  }
  return coords;
}

ProjectivePoint point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("point coordinates must be a nonempty array");
  if (j[0].is_string() || j[0].is_number_integer()) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    return ProjectivePoint::from_exact(std::move(c));
  }
  std::vector<Complex> c;
  for (const auto& x : j) {
    if (x.is_array()) c.emplace_back(x.at(0).get<double>(), x.at(1).get<double>());
    else c.emplace_back(x.get<double>(), 0.0);
  }
  return ProjectivePoint::from_complex(std::move(c));
}

json to_json(const EigenSolution& s, bool real_only) {
  json pts = json::array();
  for (const auto& e : s.points) {
    if (real_only && !e.point.is_real()) continue;
    pts.push_back({{"coords", point_to_json(e.point)}, {"mult", e.multiplicity}});
  }
  json charts = json::array();
  for (const auto& c : s.charts)
    charts.push_back({{"level", c.level}, {"quotientDim", c.quotient_dim}, {"found", c.found}, {"shearSeed", c.shear_seed}});
  json out = {{"n", s.n},
              {"d", s.d},
              {"points", pts},
              {"certified", s.certified},
              {"expected", s.expected},
              {"total", s.total_multiplicity()},
              {"positiveDimensional", s.positive_dimensional},
              {"seedInfo", {{"seed", s.seed}, {"charts", charts}}}};
  if (!s.diagnostic.empty()) out["diagnostic"] = s.diagnostic;
  return out;
}

PointsFile points_from_json(const json& j) {
  PointsFile f;
  f.n = j.at("n").get<int>();
  for (const auto& p : j.at("points")) {
    const json& coords = p.is_object() ? p.at("coords") : p;
    ProjectivePoint pt = point_from_json(coords);
    if (pt.size() != static_cast<std::size_t>(f.n) + 1) throw std::invalid_argument("point dimension differs from n");
    f.points.push_back(std::move(pt));
    f.multiplicities.push_back(p.is_object() ? p.value("mult", 1) : 1);
  }
  return f;
}

json to_json(const KernelReport& k) {
  return {{"dimension", k.dimension},
          {"degenerateDimension", k.degenerate_dimension},
          {"referenceDimension", k.reference_dimension},
          {"symmetric", k.symmetric},
          {"symmetricSubspaceDimension", k.symmetric_subspace_dimension},
          {"containsProperTensor", k.contains_proper_tensor},
          {"numeric", k.numeric},
          {"rationalized", k.rationalized}};
}

json to_json(const IncidenceReport& r) {
  return {{"predicate", r.predicate}, {"threshold", r.threshold}, {"found", r.found},
          {"witness", r.witness},     {"subsetsChecked", r.subsets_checked}, {"numeric", r.numeric}};
}

json to_json(const CollinearReport& r) {
  return {{"maxCollinear", r.max_count}, {"witness", r.witness}, {"numeric", r.numeric}};
}

json to_json(const DecisionReport& r) {
  json out = {{"decision", to_string(r.decision)}, {"kernel", to_json(r.kernel)}, {"cardinalityOk", r.cardinality_ok},
              {"seeds", r.seeds_tried}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  return out;
}

json to_json(const SurfaceLattice& lat) {
  return {{"labels", lat.labels}, {"gram", lat.gram}, {"H", lat.hyperplane}, {"K", lat.canonical}, {"L", lat.line}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace eigenpts::io
