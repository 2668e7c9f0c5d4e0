#include "cubeknot/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cubeknot/cube.hpp"
#include "cubeknot/grid.hpp"
#include "cubeknot/knot_id.hpp"
#include "cubeknot/legendrian.hpp"
#include "cubeknot/lifting.hpp"
#include "cubeknot/render.hpp"
#include "cubeknot/search.hpp"

namespace cubeknot {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream s;
  if (path == "-") {
    s << in.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  s << f.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw IoError("cannot write " + path);
}

enum class FileKind { Grid, Cube };

FileKind kind_of(const std::string& path, const std::string& text) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".grid") return FileKind::Grid;
  if (ext == ".cube") return FileKind::Cube;
  std::istringstream s(text);
  for (std::string tok; s >> tok;) {
    if (tok[0] == '#') {
      std::getline(s, tok);
      continue;
    }
    if (tok == "grid") return FileKind::Grid;
    if (tok == "cube") return FileKind::Cube;
    break;
  }
  throw Failure("cannot tell whether " + path + " holds a grid or a cube");
}

GridDiagram load_grid(const std::string& path, std::istream& in) {
  auto g = parse_grid(read_input(path, in));
  const auto rep = validate_grid(g);
  if (!rep.ok()) throw Failure(rep.violations.front());
  return g;
}

GridDiagram load_knot(const std::string& path, std::istream& in) {
  auto g = load_grid(path, in);
  if (component_count(g) != 1) throw Failure("grid is a link");
  return g;
}

std::string census_line(const CornerCensus& c) {
  std::ostringstream s;
  s << "X_NE=" << c.x_ne << " X_NW=" << c.x_nw << " X_SE=" << c.x_se << " X_SW=" << c.x_sw << " O_NE=" << c.o_ne
    << " O_NW=" << c.o_nw << " O_SE=" << c.o_se << " O_SW=" << c.o_sw;
  return s.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"grid and cube diagrams, Legendrian invariants and lifting"};
  app.require_subcommand(1);

  std::string file, out_path, hand = "left", format, what;
  bool count = false;
  int p = 0, rot = 0, size = 0, jobs = 1;
  std::string resume;
  std::uint64_t checkpoint_every = 64;
  std::uint64_t stop_after = 0;

  auto* validate = app.add_subcommand("validate", "check a .grid or .cube file");
  validate->add_option("file", file, "input path, - for stdin")->required();

  auto* invariants = app.add_subcommand("invariants", "writhe, corner census and front invariants");
  invariants->add_option("grid", file)->required();
  invariants->add_option("--hand", hand)->check(CLI::IsMember({"left", "right"}));

  auto* lift = app.add_subcommand("lift", "lift a grid to a cube diagram");
  lift->add_option("grid", file)->required();
  lift->add_flag("--count", count, "count all height assignments that lift");
  lift->add_option("--out", out_path, "write the cube here");

  auto* stab = app.add_subcommand("stabilized-lift", "lift after stabilizations that keep the left front");
  stab->add_option("grid", file)->required();
  stab->add_option("--out", out_path);

  auto* detect = app.add_subcommand("detect", "Type 1 / Type 2 configurations");
  detect->add_option("grid", file)->required();

  auto* construct = app.add_subcommand("construct", "canonical torus-knot grids and cubes");
  construct->add_option("what", what)->required()->check(CLI::IsMember({"kmax-grid", "kmin-grid", "kmax-cube"}));
  construct->add_option("--p", p)->required();
  construct->add_option("--out", out_path);

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial");
  jones_cmd->add_option("grid", file)->required();

  auto* experiment = app.add_subcommand("experiment", "enumerate a Legendrian class at one size and lift every candidate");
  experiment->add_option("--p", p)->required();
  experiment->add_option("--rot", rot)->required();
  experiment->add_option("--size", size)->required();
  experiment->add_option("--out", out_path)->required();
  experiment->add_option("--resume", resume, "checkpoint file; resumed from if present");
  experiment->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  experiment->add_option("--checkpoint-every", checkpoint_every)->check(CLI::PositiveNumber);
  experiment->add_option("--stop-after", stop_after, "stop after this many xcol ranks")->group("");

  auto* render = app.add_subcommand("render", "ASCII or SVG picture of a grid or cube");
  render->add_option("file", file)->required();
  render->add_option("--format", format)->required()->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) {
      const std::string text = read_input(file, in);
      std::vector<std::string> problems;
      try {
        if (kind_of(file, text) == FileKind::Grid) problems = validate_grid(parse_grid(text)).violations;
        else problems = validate_cube(parse_cube(text)).violations;
      } catch (const GridParseError& e) {
        problems.push_back(e.what());
      } catch (const CubeParseError& e) {
        problems.push_back(e.what());
      }
      if (problems.empty()) {
        out << "ok\n";
        return 0;
      }
      for (const auto& v : problems) out << v << '\n';
      return 1;
    }
    if (invariants->parsed()) {
      const auto g = load_knot(file, in);
      const auto cc = corner_census(g);
      const int w = writhe(g);
      const auto f = front_invariants(cc, w, hand_from_string(hand));
      out << "hand=" << hand << "\nwrithe=" << w << "\ncensus " << census_line(cc) << "\nD=" << f.down_cusps
          << " U=" << f.up_cusps << "\ntb=" << f.tb << " rot=" << f.rot << "\nmaxima=" << f.maxima
          << " minima=" << f.minima << '\n';
      return 0;
    }
    if (lift->parsed()) {
      const auto g = load_knot(file, in);
      if (count) {
        const auto n = count_lifts(g);
        out << "lifts=" << n << '\n';
        return n > 0 ? 0 : 1;
      }
      auto cube = find_lift(g);
      if (!cube) {
        const auto order = partial_order(g);
        out << "no lift" << (order.acyclic ? "" : " (bend order is cyclic)") << '\n';
        return 1;
      }
      write_output(out_path, serialize_cube(*cube), out);
      return 0;
    }
    if (stab->parsed()) {
      const auto g = load_knot(file, in);
      const auto r = lift_with_stabilizations(g);
      for (const auto& m : r.moves) err << "stabilize " << m << '\n';
      write_output(out_path, serialize_cube(r.cube), out);
      return 0;
    }
    if (detect->parsed()) {
      const auto g = load_knot(file, in);
      const auto matches = detect_type_configurations(g);
      out << "matches=" << matches.size() << '\n';
      for (const auto& m : matches) {
        out << "type " << m.type << " bend " << m.bend << " region cols " << m.region.col_lo << ".." << m.region.col_hi
            << " rows " << m.region.row_lo << ".." << m.region.row_hi << " path";
        for (int b : m.path) out << ' ' << b;
        out << '\n';
      }
      return 0;
    }
    if (construct->parsed()) {
      std::string text;
      if (what == "kmin-grid") text = serialize_grid(canonical_kmin_grid(p));
      else if (what == "kmax-grid") text = serialize_grid(canonical_kmax_grid(p));
      else text = serialize_cube(kmax_cube(p));
      write_output(out_path, text, out);
      return 0;
    }
    if (jones_cmd->parsed()) {
      const auto v = jones(load_knot(file, in));
      out << "V(t) = " << jones_t_string(v) << "\nq: " << v.to_string() << '\n';
      return 0;
    }
    if (experiment->parsed()) {
      ExperimentOptions opts;
      opts.out_path = out_path;
      opts.jobs = jobs;
      opts.checkpoint_every = checkpoint_every;
      if (!resume.empty()) {
        opts.checkpoint_path = resume;
        opts.resume = std::filesystem::exists(resume);
      }
      if (stop_after > 0) opts.stop_after = stop_after;
      const LegendrianClassSpec spec{p, -2 * p, rot};
      const auto classes = legendrian_classes(p);
      if (std::find(classes.begin(), classes.end(), spec) == classes.end())
        throw Failure("rot " + std::to_string(rot) + " is not a maximal-tb class of the (" + std::to_string(p) + ",2) torus knot");
      const auto rep = run_experiment(spec, size, opts);
      out << report_to_json(rep) << '\n';
      return rep.complete ? 0 : 1;
    }
    if (render->parsed()) {
      const std::string text = read_input(file, in);
      std::string pic;
      if (kind_of(file, text) == FileKind::Grid) {
        const auto g = parse_grid(text);
        pic = format == "ascii" ? render_grid_ascii(g) : render_grid_svg(g);
      } else {
        const auto c = parse_cube(text);
        if (!validate_cube(c).marking_ok) throw Failure("cube fails the marking conditions");
        pic = format == "ascii" ? render_cube_ascii(c) : render_cube_svg(c);
      }
      write_output(out_path, pic, out);
      return 0;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CheckpointError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cubeknot
