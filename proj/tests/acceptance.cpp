// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eigenpts/configuration.hpp"
#include "eigenpts/eigensolver.hpp"
#include "eigenpts/io.hpp"
#include "eigenpts/lattice.hpp"
#include "eigenpts/reconstruction.hpp"
#include "support.hpp"

using namespace eigenpts;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Failure {
  std::ostringstream msg;
  bool any = false;
  template <class T>
  Failure& operator<<(const T& x) {
    any = true;
    msg << x;
    return *this;
  }
};

fs::path work_dir() {
  static fs::path dir = [] {
    auto p = fs::temp_directory_path() / ("eigenpts_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string file(const std::string& name) { return (work_dir() / name).string(); }

int cli(const std::string& args, const std::string& out = "/dev/null") {
  const std::string cmd = std::string(EIGENPTS_CLI) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write_points(const std::string& path, int n, const std::vector<ProjectivePoint>& pts) {
  io::json arr = io::json::array();
  for (const auto& p : pts) arr.push_back({{"coords", io::point_to_json(p)}, {"mult", 1}});
  io::write_file(path, io::json{{"n", n}, {"points", arr}}.dump());
}

bool same_point_sets(const EigenSolution& a, const EigenSolution& b) {
  if (a.points.size() != b.points.size()) return false;
  return std::all_of(a.points.begin(), a.points.end(), [&](const EigenPoint& p) {
    return std::any_of(b.points.begin(), b.points.end(), [&](const EigenPoint& q) {
      if (p.point.is_exact() && q.point.is_exact()) return p.point.exact_equal(q.point);
      return p.point.distance(q.point) < 1e-8;
    });
  });
}

struct Solved {
  int n, d;
  std::uint64_t seed;
  EigenSolution solution;
};
std::vector<Solved> g_solved;

Outcome fermat_golden() {
  Failure f;
  auto t0 = Clock::now();
  if (cli("fermat --n 3 --d 3 --out " + file("fermat.json")) != 0) f << "fermat command failed; ";
  const int rc = cli("solve " + file("fermat.json") + " --out " + file("fermat_points.json"));
  const double secs = since(t0);
  if (rc != 0) f << "solve exit " << rc << "; ";
  auto pf = io::points_from_json(io::parse(io::read_file(file("fermat_points.json"))));
  auto want = oracle::fermat_cubic_points();
  if (pf.points.size() != want.size()) f << pf.points.size() << " points; ";
  for (const auto& w : want) {
    bool hit = std::any_of(pf.points.begin(), pf.points.end(),
                           [&](const ProjectivePoint& p) { return p.is_exact() && p.exact_equal(w); });
    if (!hit) f << "missing point; ";
  }
  if (secs >= 10) f << "took " << secs << " s; ";
  std::ostringstream d;
  d << pf.points.size() << " exact points, " << std::fixed << std::setprecision(2) << secs << " s";
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome count_reproduction() {
  Failure f;
  const std::vector<std::pair<int, int>> sizes{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};
  double slowest = 0;
  double worst_residual = 0;
  for (auto [n, d] : sizes) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto t = random_tensor(n, d, seed);
      auto t0 = Clock::now();
      auto sol = eigenpoints(t);
      const double secs = since(t0);
      slowest = std::max(slowest, secs);
      if (!sol.certified || static_cast<long>(sol.points.size()) != expected_count(n, d))
        f << "(" << n << "," << d << ") seed " << seed << ": " << sol.points.size() << " points, certified "
          << sol.certified << "; ";
      if (secs >= 120) f << "(" << n << "," << d << ") seed " << seed << " took " << secs << " s; ";
      auto gens = minor_ideal_generators(EigenMatrix::of(t));
      for (const auto& e : sol.points) {
        if (e.point.is_exact()) {
          if (!vanishes_exactly(gens, e.point)) f << "exact point off the scheme; ";
        } else {
          const double r = generator_residual(gens, e.point);
          worst_residual = std::max(worst_residual, r);
          if (r >= 1e-8) f << "residual " << r << "; ";
        }
      }
      g_solved.push_back({n, d, seed, std::move(sol)});
    }
  }
  std::ostringstream d;
  d << "25 runs certified, slowest " << std::fixed << std::setprecision(2) << slowest << " s, max residual "
    << std::scientific << std::setprecision(1) << worst_residual;
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome betti_identity() {
  Failure f;
  auto t0 = Clock::now();
  int cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (int d = 2; d <= 7; ++d, ++cases)
      if (multiplicity_from_betti(eagon_northcott_betti(n, d), n) != expected_count(n, d))
        f << "(" << n << "," << d << ") mismatch; ";
  const double secs = since(t0);
  if (secs >= 1) f << "took " << secs << " s; ";
  std::ostringstream d;
  d << cases << " cases, " << std::fixed << std::setprecision(3) << secs << " s";
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome intersection_suite() {
  Failure f;
  auto t0 = Clock::now();
  for (int n = 3; n <= 8; ++n)
    for (int d = 3; d <= 8; ++d) {
      auto lat = eigensurface_lattice(n, d);
      auto c = eigencurve_class(lat, n, d);
      if (ci_degree(lat, c, c) != expected_count(n, d)) f << "ci degree (" << n << "," << d << "); ";
    }
  for (int d = 3; d <= 10; ++d) {
    auto lat = rank_two_lattice(3, d);
    if (adjunction_genus(lat, lat.combine(d - 1, 1)) != static_cast<long>(d) * d * d - 7L * d * (d - 1) / 2 - 1)
      f << "genus d=" << d << "; ";
  }
  for (int d = 3; d <= 12; ++d) {
    auto r = riemann_roch_chi(d);
    if (r.chi_lattice != 3 * binomial_l(d, 2) + 3 + binomial_l(d - 1, 3)) f << "chi d=" << d << "; ";
  }
  for (int d = 3; d <= 50; ++d) {
    auto ab = alpha_beta_solutions(d);
    if (!ab.first_integral || ab.second_integral) f << "alpha/beta d=" << d << "; ";
  }
  auto cubic = cubic_surface_lattice();
  auto census = cubic_surface_lines(cubic);
  if (census.lines.size() != 27 || !census.all_exceptional || !census.curves_degree_seven) f << "line census; ";
  const double secs = since(t0);
  if (secs >= 1) f << "took " << secs << " s; ";
  std::ostringstream d;
  d << "36 degree, 8 genus, 10 chi, 48 alpha/beta checks, 27 lines, " << std::fixed << std::setprecision(3) << secs
    << " s";
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome round_trip() {
  Failure f;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto t = random_tensor(3, 3, seed);
    const std::string tf = file("rt_tensor_" + std::to_string(seed) + ".json");
    const std::string pf = file("rt_points_" + std::to_string(seed) + ".json");
    io::write_file(tf, io::to_json(t).dump());
    if (cli("solve " + tf + " --out " + pf) != 0) f << "seed " << seed << " not certified; ";
    const int rc = cli("verify " + pf + " --degree 3 --json", file("rt_verify.json"));
    auto rep = io::parse(io::read_file(file("rt_verify.json")));
    if (rc != 0 || rep["decision"] != "YES") f << "seed " << seed << " decision " << rep["decision"] << "; ";
    auto pts = io::points_from_json(io::parse(io::read_file(pf)));
    auto kernel = eigenscheme_kernel(PointSet(pts.n, pts.points), 3, false);
    if (!kernel_contains(kernel, TensorSpaceBasis(3, 3), t)) f << "seed " << seed << " tensor not in kernel; ";
  }
  return {!f.any, f.any ? f.msg.str() : "5 of 5 YES, original tensor in kernel"};
}

Outcome negative_control() {
  Failure f;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const std::string pf = file("neg_" + std::to_string(seed) + ".json");
    write_points(pf, 3, oracle::random_points(3, 15, 1000 + seed));
    const int rc = cli("verify " + pf + " --degree 3 --json", file("neg_out.json"));
    auto rep = io::parse(io::read_file(file("neg_out.json")));
    if (rc != 2 || rep["decision"] != "NO") f << "set " << seed << " decision " << rep["decision"] << "; ";
    if (rep["kernel"]["dimension"] != 4) f << "set " << seed << " kernel " << rep["kernel"]["dimension"] << "; ";
  }
  return {!f.any, f.any ? f.msg.str() : "5 of 5 NO, kernel dimension 4"};
}

Outcome enlargement() {
  Failure f;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const std::string wf = file("w_" + std::to_string(seed) + ".json");
    auto w = oracle::random_points(3, 10, 2000 + seed);
    write_points(wf, 3, w);
    const std::string zf = file("z_" + std::to_string(seed) + ".json");
    if (cli("enlarge " + wf + " --degree 3 --out " + zf) != 0) {
      f << "set " << seed << " failed; ";
      continue;
    }
    auto z = io::parse(io::read_file(zf));
    auto pts = io::points_from_json(z["eigenscheme"]);
    if (pts.points.size() != 15) f << "set " << seed << ": " << pts.points.size() << " points; ";
    for (const auto& p : w) {
      bool hit = std::any_of(pts.points.begin(), pts.points.end(),
                             [&](const ProjectivePoint& q) { return q.is_exact() && q.exact_equal(p); });
      if (!hit) f << "set " << seed << " lost an input point; ";
    }
    auto t = io::tensor_from_json(z["tensor"]).tensor;
    auto gens = minor_ideal_generators(EigenMatrix::of(t));
    for (const auto& p : w)
      if (!vanishes_exactly(gens, p)) f << "set " << seed << " input not on the eigenscheme; ";
  }
  return {!f.any, f.any ? f.msg.str() : "5 of 5 enlarged to 15 points containing the input exactly"};
}

Outcome configuration_properties() {
  Failure f;
  if (g_solved.empty()) return {false, "no solutions from the count criterion"};
  std::size_t quadric_checks = 0;
  for (const auto& s : g_solved) {
    if (!s.solution.certified) continue;
    PointSet z = PointSet::from_solution(s.solution);
    auto col = max_collinear(z);
    if (static_cast<int>(col.max_count) > s.d)
      f << "(" << s.n << "," << s.d << ") seed " << s.seed << ": " << col.max_count << " collinear; ";
    if (s.n == 3 && s.d == 3) {
      auto r = subset_on_hypersurface(z, 2, 14);
      ++quadric_checks;
      if (r.found) f << "(3,3) seed " << s.seed << ": 14 points on a quadric; ";
    }
  }
  std::ostringstream d;
  d << g_solved.size() << " collinearity scans, " << quadric_checks << " quadric scans";
  return {!f.any, f.any ? f.msg.str() : d.str()};
}

Outcome shift_invariance() {
  Failure f;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto t = random_tensor(3, 3, seed);
    auto h = random_form(4, 1, 3000 + seed);
    auto s = degenerate_shift(t, h);
    if (minor_ideal_generators(EigenMatrix::of(s)) != minor_ideal_generators(EigenMatrix::of(t)))
      f << "seed " << seed << " generators differ; ";
    auto a = eigenpoints(t), b = eigenpoints(s);
    if (!a.certified || !b.certified || !same_point_sets(a, b)) f << "seed " << seed << " point sets differ; ";
  }
  return {!f.any, f.any ? f.msg.str() : "5 of 5 identical generators and point sets"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Fermat golden test", fermat_golden},
      {"count reproduction", count_reproduction},
      {"Betti/multiplicity identity", betti_identity},
      {"intersection-theory suite", intersection_suite},
      {"round trip", round_trip},
      {"negative control", negative_control},
      {"enlargement", enlargement},
      {"configuration properties", configuration_properties},
      {"degenerate-shift invariance", shift_invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << "  " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  fs::remove_all(work_dir());
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
