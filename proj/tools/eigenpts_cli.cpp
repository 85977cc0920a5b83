#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eigenpts/configuration.hpp"
#include "eigenpts/eigensolver.hpp"
#include "eigenpts/io.hpp"
#include "eigenpts/lattice.hpp"
#include "eigenpts/reconstruction.hpp"

using namespace eigenpts;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;
constexpr int kInternal = 3;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  bool json_report = false;
};

struct Run {
  std::string command;
  Common common;
  json inputs = json::array();
  json seeds = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string load(const std::string& path) {
    std::string text = io::read_file(path);
    inputs.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }

  // Result document goes to --out (or stdout); the manifest sits beside it.
  void emit(const json& result, const std::string& summary) {
    const std::string text = result.dump(2) + "\n";
    if (!common.out.empty()) {
      io::write_file(common.out, text);
      json manifest = {{"command", command},
                       {"inputs", inputs},
                       {"seeds", seeds},
                       {"version", EIGENPTS_VERSION},
                       {"outputSha256", sha256_hex(text)},
                       {"timingSeconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
      io::write_file(common.out + ".manifest.json", manifest.dump(2) + "\n");
    }
    if (common.json_report || common.out.empty()) std::cout << text;
    else std::cout << summary;
  }
};

void add_common(CLI::App* app, Common& c, bool seeded) {
  if (seeded) app->add_option("--seed", c.seed, "random seed")->capture_default_str();
  app->add_option("--out", c.out, "output file");
  app->add_flag("--json", c.json_report, "print the machine report to stdout");
}

PointSet load_points(Run& run, const std::string& path) {
  auto pf = io::points_from_json(io::parse(run.load(path)));
  return PointSet(pf.n, std::move(pf.points));
}

int cmd_solve(Run& run, const std::string& path, bool real_only) {
  auto tf = io::tensor_from_json(io::parse(run.load(path)));
  SolverOptions opts;
  opts.seed = run.common.seed;
  run.seeds["shear"] = opts.seed;
  EigenSolution sol = eigenpoints(tf.tensor, opts);
  std::ostringstream s;
  s << "points: " << sol.points.size() << " (total multiplicity " << sol.total_multiplicity() << ", expected "
    << sol.expected << ")\ncertified: " << (sol.certified ? "yes" : "no") << "\n";
  if (!sol.diagnostic.empty()) s << "diagnostic: " << sol.diagnostic << "\n";
  if (sol.positive_dimensional) std::cerr << "positive-dimensional eigenscheme\n";
  run.emit(io::to_json(sol, real_only), s.str());
  return sol.certified ? kOk : kNegative;
}

int cmd_verify(Run& run, const std::string& path, int degree, bool symmetric) {
  PointSet pts = load_points(run, path);
  ReconstructionOptions opts;
  opts.seed = run.common.seed;
  run.seeds["kernelDraws"] = opts.seed;
  DecisionReport rep = is_eigenscheme(pts, degree, symmetric, opts);
  if (!rep.cardinality_ok)
    std::cerr << "warning: " << pts.size() << " points, an eigenscheme has " << expected_count(pts.n(), degree) << "\n";
  std::ostringstream s;
  s << "decision: " << to_string(rep.decision) << "\nkernel dimension: " << rep.kernel.dimension
    << " (degenerate part " << rep.kernel.reference_dimension << ")\n";
  if (!rep.diagnostic.empty()) s << "diagnostic: " << rep.diagnostic << "\n";
  run.emit(io::to_json(rep), s.str());
  return rep.decision == Decision::Yes ? kOk : kNegative;
}

int cmd_enlarge(Run& run, const std::string& path, int degree) {
  PointSet w = load_points(run, path);
  ReconstructionOptions opts;
  opts.seed = run.common.seed;
  run.seeds["kernelDraws"] = opts.seed;
  EnlargeResult res;
  try {
    res = enlarge(w, degree, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kNegative;
  }
  json out = {{"success", res.success}, {"kernel", io::to_json(res.kernel)}, {"seeds", res.seeds_tried}};
  std::ostringstream s;
  s << "success: " << (res.success ? "yes" : "no") << "\n";
  if (res.success) {
    json pts = io::to_json(*res.solution);
    for (std::size_t i = 0; i < res.from_input.size(); ++i) pts["points"][i]["input"] = static_cast<bool>(res.from_input[i]);
    out["tensor"] = io::to_json(*res.tensor);
    out["eigenscheme"] = pts;
    s << "eigenscheme: " << res.solution->points.size() << " points containing the " << w.size() << " input points\n";
  } else {
    out["diagnostic"] = res.diagnostic;
    s << "diagnostic: " << res.diagnostic << "\n";
  }
  run.emit(out, s.str());
  return res.success ? kOk : kNegative;
}

int cmd_analyze(Run& run, const std::string& path, int degree) {
  PointSet z = load_points(run, path);
  json out = {{"n", z.n()}, {"d", degree}, {"points", z.size()}};
  std::ostringstream s;
  bool pass = true;
  if (z.size() >= 2) {
    auto col = max_collinear(z);
    out["collinear"] = io::to_json(col);
    out["collinear"]["bound"] = degree;
    pass = pass && static_cast<int>(col.max_count) <= degree;
    s << "max collinear: " << col.max_count << " (bound " << degree << ")\n";
  }
  if (z.n() == 2) {
    auto bz = bezout_guard(z, degree);
    json levels = json::array();
    for (const auto& l : bz.levels) levels.push_back(io::to_json(l));
    out["bezout"] = {{"pass", bz.pass}, {"levels", levels}};
    pass = pass && bz.pass;
    s << "no s*d+1 points on a degree-s curve: " << (bz.pass ? "holds" : "fails") << "\n";
  } else if (z.n() == 3 && degree >= 3 && static_cast<long>(z.size()) == expected_count(3, degree)) {
    auto cr = converse_hypothesis_report(z, degree);
    out["surface"] = io::to_json(cr.surface_check);
    out["surface"]["degree"] = degree - 1;
    out["curveDegreeTarget"] = cr.curve_degree;
    out["curveGenusTarget"] = cr.curve_genus;
    pass = pass && cr.condition_one;
    s << "points on a degree-" << degree - 1 << " surface (threshold " << cr.threshold
      << "): " << (cr.surface_check.found ? "found" : "none") << "\n";
  }
  out["pass"] = pass;
  run.emit(out, s.str());
  return kOk;
}

int cmd_lattice(Run& run, int n, int d) {
  auto checks = lattice_identities(n, d);
  json arr = json::array();
  std::ostringstream s;
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    s << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.actual << " (expected " << c.expected << ")\n";
    all = all && c.pass;
  }
  json out = {{"n", n}, {"d", d}, {"lattice", io::to_json(eigensurface_lattice(n, d))}, {"checks", arr}, {"pass", all}};
  run.emit(out, s.str());
  return all ? kOk : kInternal;
}

int cmd_fermat(Run& run, int n, int d) {
  SymmetricTensor f = fermat_tensor(n, d);
  run.emit(io::to_json(f), "f = " + to_string(f.form()) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenpoints of partially symmetric tensors"};
  app.set_version_flag("--version", EIGENPTS_VERSION);
  app.require_subcommand(1);
  Run run;
  std::string input;
  int degree = 0, n = 3, d = 3;
  bool real_only = false, symmetric = false;

  auto* solve = app.add_subcommand("solve", "eigenpoints of a tensor file");
  solve->add_option("tensor", input, "tensor JSON")->required();
  solve->add_flag("--real-only", real_only, "keep real points only");
  add_common(solve, run.common, true);

  auto* verify = app.add_subcommand("verify", "decide whether points form an eigenscheme");
  verify->add_option("points", input, "points JSON")->required();
  verify->add_option("--degree", degree, "tensor order d")->required();
  verify->add_flag("--symmetric", symmetric, "restrict to gradients of a form");
  add_common(verify, run.common, true);

  auto* enl = app.add_subcommand("enlarge", "embed points into an eigenscheme");
  enl->add_option("points", input, "points JSON")->required();
  enl->add_option("--degree", degree, "tensor order d")->required();
  add_common(enl, run.common, true);

  auto* analyze = app.add_subcommand("analyze", "incidence report for a point set");
  analyze->add_option("points", input, "points JSON")->required();
  analyze->add_option("--degree", degree, "tensor order d")->required();
  add_common(analyze, run.common, false);

  auto* lat = app.add_subcommand("lattice", "intersection identities of the eigensurface");
  lat->add_option("--n", n, "ambient dimension")->capture_default_str();
  lat->add_option("--d", d, "tensor order")->capture_default_str();
  add_common(lat, run.common, false);

  auto* fer = app.add_subcommand("fermat", "Fermat tensor file");
  fer->add_option("--n", n, "ambient dimension")->capture_default_str();
  fer->add_option("--d", d, "degree")->capture_default_str();
  add_common(fer, run.common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    run.command = app.get_subcommands().front()->get_name();
    if (*solve) return cmd_solve(run, input, real_only);
    if (*verify) return cmd_verify(run, input, degree, symmetric);
    if (*enl) return cmd_enlarge(run, input, degree);
    if (*analyze) return cmd_analyze(run, input, degree);
    if (*lat) return cmd_lattice(run, n, d);
    if (*fer) return cmd_fermat(run, n, d);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
