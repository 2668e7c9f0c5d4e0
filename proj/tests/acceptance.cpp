// Acceptance checks: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cubeknot/cli.hpp"
#include "cubeknot/cube.hpp"
#include "cubeknot/knot_id.hpp"
#include "cubeknot/legendrian.hpp"
#include "cubeknot/lifting.hpp"
#include "cubeknot/search.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace cubeknot;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s (%s%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int cli(std::vector<std::string> args, const std::string& in_text, std::string& out_text) {
  args.insert(args.begin(), "cubeknot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(in_text);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  out_text = out.str();
  return code;
}

int worker_count() { return static_cast<int>(std::max(4u, std::min(8u, std::thread::hardware_concurrency()))); }

std::set<int> rotation_set(int p) {
  std::set<int> s;
  for (int t = 0; 2 * t < p - 2; ++t) {
    s.insert(p - 2 - 4 * t);
    s.insert(-(p - 2 - 4 * t));
  }
  return s;
}

const fs::path kWork = fs::temp_directory_path() / "cubeknot_acceptance";

// Shared between criteria 2, 4 and 5.
std::vector<GridDiagram> kmin5_candidates;

}  // namespace

int main() {
  fs::remove_all(kWork);
  fs::create_directories(kWork);
  const int jobs = worker_count();

  report(1, "kmax cubes for p = 3, 5, 7", [](Outcome& o) {
    const auto start = Clock::now();
    for (int p : {3, 5, 7}) {
      std::string cube_text, validated;
      o.require(cli({"construct", "kmax-cube", "--p", std::to_string(p)}, "", cube_text) == 0, "construct exit code");
      o.require(cli({"validate", "-"}, cube_text, validated) == 0 && validated == "ok\n", "validate kmax-cube");
      const auto c = parse_cube(cube_text);
      o.require(c.n == p + 2, "cube size p+2");
      const auto z = project(c, Axis::Z);
      const auto f = front_invariants(z, Hand::Left);
      o.require(f.tb == -2 * p && f.rot == p - 2, "z-projection (tb, rot)");
      o.require(jones(z) == jones(canonical_kmax_grid(p)), "Jones of z-projection");
      o.detail << "p=" << p << " tb=" << f.tb << " rot=" << f.rot << "; ";
    }
    o.require(Clock::now() - start < std::chrono::seconds(10), "runtime under 10 s");
  });

  report(2, "p=5 rot=-3 at size 7: candidates, no lifts, c_l > 7", [&](Outcome& o) {
    ExperimentOptions opts;
    opts.out_path = (kWork / "kmin5_n7.jsonl").string();
    opts.jobs = jobs;
    const auto rep = run_experiment({5, -10, -3}, 7, opts);
    o.detail << "candidates=" << rep.candidates << " lifted=" << rep.lifted << " detected=" << rep.detected
             << " conclusion='" << rep.conclusion << "' jobs=" << jobs << "; ";
    o.require(rep.complete, "run complete");
    o.require(rep.candidates > 0, "nonempty candidate set");
    o.require(rep.lifted == 0, "zero lifts");
    o.require(rep.conclusion == "c_l > 7", "conclusion");

    std::istringstream lines(slurp(opts.out_path));
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      if (j.contains("summary")) continue;
      kmin5_candidates.push_back(parse_grid(j["grid"].get<std::string>()));
    }
    o.require(kmin5_candidates.size() == rep.candidates, "records match candidate count");
    for (const auto& g : kmin5_candidates) {
      o.require(jones(g) == oracle::left_torus_jones(5), "candidate Jones");
      o.require(count_lifts(g) == 0, "independent zero lift count");
    }
  });

  report(3, "p=3 rot=+1 and rot=-1 at size 5 both lift", [&](Outcome& o) {
    for (int rot : {1, -1}) {
      ExperimentOptions opts;
      opts.jobs = jobs;
      const auto rep = run_experiment({3, -6, rot}, 5, opts);
      o.detail << "rot=" << rot << " candidates=" << rep.candidates << " lifted=" << rep.lifted << "; ";
      o.require(rep.complete && rep.lifted > 0, "lift found");
      o.require(rep.conclusion == "c_l <= 5", "conclusion");
    }
  });

  report(4, "K_min candidates satisfy the bend identities and writhe bound", [&](Outcome& o) {
    o.require(!kmin5_candidates.empty(), "population from criterion 2");
    std::size_t checked = 0;
    auto check_all = [&](int p, const std::vector<GridDiagram>& gs) {
      for (const auto& g : gs) {
        const auto r = check_bend_identities(g, p);
        o.require(r.precondition_ok, "precondition");
        o.require(r.identities_hold(), "cusp identities");
        o.require(r.writhe_bound_ok, "writhe bound");
        const auto l = front_invariants(g, Hand::Left);
        const auto rt = front_invariants(g, Hand::Right);
        const int w = writhe(g);
        o.require(l.down_cusps == 2 + w + p && l.up_cusps == w + 3 * p - 2, "left cusp counts");
        o.require(rt.down_cusps == 2 - p - w && rt.up_cusps == 2 - p - w, "right cusp counts");
        o.require(-p - 2 <= w && w < 2 - p, "writhe window");
        ++checked;
      }
    };
    check_all(5, kmin5_candidates);
    std::vector<GridDiagram> p3;
    enumerate_grids(5, class_filter({3, -6, -1}, 5), [&](const GridDiagram& g) { p3.push_back(g); });
    check_all(3, p3);
    o.detail << "checked=" << checked << "; ";
  });

  report(5, "detector soundness", [&](Outcome& o) {
    std::size_t matched = 0;
    for (const auto& g : kmin5_candidates) {
      const auto m = detect_type_configurations(g);
      if (!m.empty()) {
        ++matched;
        o.require(count_lifts(g) == 0, "matched candidate has no lift");
      }
    }
    std::mt19937_64 rng(20260101);
    std::size_t liftable = 0, projections = 0, tried = 0;
    while (liftable < 10000) {
      const auto g = oracle::random_knot(3 + static_cast<int>(rng() % 5), rng);
      ++tried;
      const auto c = find_lift(g);
      if (!c) {
        if (!detect_type_configurations(g).empty()) o.require(count_lifts(g) == 0, "random matched grid unliftable");
        continue;
      }
      ++liftable;
      o.require(detect_type_configurations(g).empty(), "no match on a liftable grid");
      for (Axis a : {Axis::X, Axis::Y}) {
        ++projections;
        o.require(detect_type_configurations(project(*c, a)).empty(), "no match on a cube projection");
      }
    }
    o.detail << "kmin5 matched=" << matched << "/" << kmin5_candidates.size() << " liftable=" << liftable
             << " tried=" << tried << " projections=" << projections << "; ";
  });

  report(6, "lift_search count equals exhaustive n! enumeration", [](Outcome& o) {
    std::size_t grids = 0;
    for (int n = 2; n <= 4; ++n)
      for (const auto& g : oracle::all_grids(n, true)) {
        o.require(count_lifts(g) == oracle::naive_lift_count(g), "exhaustive n <= 4");
        ++grids;
      }
    std::mt19937_64 rng(606);
    std::uint64_t total = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto g = oracle::random_knot(5, rng);
      const auto naive = oracle::naive_lift_count(g);
      o.require(count_lifts(g) == naive, "random n = 5");
      total += naive;
      ++grids;
    }
    o.detail << "grids=" << grids << " lifts at n=5: " << total << "; ";
  });

  report(7, "tb/rot formulas, Legendrian classes and the trefoil Jones", [](Outcome& o) {
    for (int p = 3; p <= 9; p += 2) {
      const auto lo = front_invariants(canonical_kmin_grid(p), Hand::Left);
      const auto hi = front_invariants(canonical_kmax_grid(p), Hand::Left);
      o.require(lo.tb == -2 * p && lo.rot == 2 - p, "kmin (tb, rot)");
      o.require(hi.tb == -2 * p && hi.rot == p - 2, "kmax (tb, rot)");
      std::set<int> rots;
      for (const auto& c : legendrian_classes(p)) {
        o.require(c.tb == -2 * p, "class tb");
        rots.insert(c.rot);
      }
      o.require(rots == rotation_set(p), "rotation set");
    }
    const auto t = canonical_kmin_grid(3);
    const auto v = jones(t);
    o.require(v == oracle::jones(t), "trefoil Jones vs state sum");
    o.require(jones_t_string(v) == "-t^-4 + t^-3 + t^-1", "trefoil Jones value");
    o.detail << "V = " << jones_t_string(v) << "; ";
  });

  report(8, "stabilization invariance, round trips, parallel determinism", [&](Outcome& o) {
    std::mt19937_64 rng(808);
    const Corner kinds[] = {Corner::NE, Corner::NW, Corner::SE, Corner::SW};
    int moves = 0;
    while (moves < 1000) {
      const auto g = oracle::random_knot(3 + static_cast<int>(rng() % 5), rng);
      const MarkKind m = (rng() % 2) ? MarkKind::X : MarkKind::O;
      const Corner k = kinds[rng() % 4];
      if (!is_legendrian_preserving(m, k, Hand::Left)) continue;
      const auto s = stabilize(g, m, static_cast<int>(rng() % static_cast<unsigned>(g.size())), k);
      const auto a = front_invariants(g, Hand::Left), b = front_invariants(s, Hand::Left);
      o.require(a.tb == b.tb && a.rot == b.rot, "(tb, rot) preserved");
      o.require(jones(s) == jones(g), "Jones preserved");
      if (crossings(s).size() <= 12) o.require(oracle::jones(s) == oracle::jones(g), "oracle Jones preserved");
      ++moves;
    }

    int round_trips = 0;
    for (int i = 0; i < 500; ++i) {
      const auto g = oracle::random_knot(2 + i % 9, rng);
      o.require(parse_grid(serialize_grid(g)) == g, "grid round trip");
      o.require(serialize_grid(parse_grid(serialize_grid(g))) == serialize_grid(g), "grid text stable");
      if (auto c = find_lift(g)) {
        o.require(same_marks(parse_cube(serialize_cube(*c)), *c), "cube round trip");
        ++round_trips;
      }
    }

    auto run = [&](const LegendrianClassSpec& spec, int n, int j, std::optional<std::uint64_t> stop, const char* name) {
      ExperimentOptions opts;
      opts.out_path = (kWork / name).string();
      opts.jobs = j;
      opts.stop_after = stop;
      run_experiment(spec, n, opts);
      return slurp(opts.out_path);
    };
    o.require(run({3, -6, 1}, 5, 1, {}, "s3.jsonl") == run({3, -6, 1}, 5, jobs, {}, "p3.jsonl"), "p=3 outputs identical");
    o.require(run({5, -10, -3}, 7, 1, 700, "s5.jsonl") == run({5, -10, -3}, 7, jobs, 700, "p5.jsonl"),
              "p=5 partial outputs identical");
    const auto full = slurp((kWork / "kmin5_n7.jsonl").string());
    ExperimentOptions serial;
    serial.out_path = (kWork / "kmin5_n7_serial.jsonl").string();
    serial.jobs = 1;
    serial.checkpoint_path = (kWork / "kmin5.ckpt").string();
    serial.checkpoint_every = 500;
    serial.stop_after = 2000;
    run_experiment({5, -10, -3}, 7, serial);
    serial.stop_after.reset();
    serial.resume = true;
    run_experiment({5, -10, -3}, 7, serial);
    o.require(slurp(serial.out_path) == full, "p=5 serial resumed run identical to parallel run");
    o.detail << "stabilizations=" << moves << " cube round trips=" << round_trips << "; ";
  });

  fs::remove_all(kWork);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
