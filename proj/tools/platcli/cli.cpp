#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "plat/braid.hpp"
#include "plat/canonical.hpp"
#include "plat/census.hpp"
#include "plat/grid.hpp"
#include "plat/knotcodes.hpp"
#include "plat/spheres.hpp"

namespace plat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

PlatGrid load(const std::string& path, std::istream& in) {
  return parse_plat(read_source(path, in));
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected comma-separated integers, got '" +
                       text + "'");
    }
  }
  return values;
}

TwistRegionId parse_region(const std::string& text, const char* flag) {
  const auto values = parse_int_list(text, flag);
  if (values.size() != 2) throw UsageError(std::string(flag) + ": expected <row>,<col>");
  return {values[0], values[1]};
}

std::string yes_no(bool value) { return value ? "true" : "false"; }

void print_report(std::ostream& out, const HypothesisReport& report, const std::string& prefix) {
  out << prefix << "width_ok=" << yes_no(report.width_ok) << '\n'
      << prefix << "twist_ok=" << yes_no(report.twist_ok) << '\n'
      << prefix << "length_ok=" << yes_no(report.length_ok) << '\n'
      << prefix << "distance="
      << (report.distance ? std::to_string(*report.distance) : std::string("n/a")) << '\n'
      << prefix << "unique_bridge_sphere=" << yes_no(report.unique_bridge_sphere) << '\n';
}

std::string join(const std::vector<int>& values, char sep = ',') {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Canonical forms for highly twisted plat diagrams"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Line-oriented key=value output");

  std::string input;
  std::string second;

  auto* validate_cmd = app.add_subcommand("validate", "Check the shape of a plat file");
  validate_cmd->add_option("file", input, "Plat file (default: stdin)");

  auto* braid_cmd = app.add_subcommand("braid", "Convert between plats and braid words");
  braid_cmd->add_option("file", input, "Plat file (default: stdin)");
  std::string word_text;
  std::optional<int> word_n;
  std::optional<int> word_strands;
  braid_cmd->add_option("--from-word", word_text, "Braid word to convert into a plat");
  braid_cmd->add_option("--n", word_n, "Plat length for --from-word");
  braid_cmd->add_option("--strands", word_strands, "Strand count for --from-word");

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical form");
  canon_cmd->add_option("file", input, "Plat file (default: stdin)");

  auto* eq_cmd = app.add_subcommand("eq", "Decide whether two plats present the same knot");
  eq_cmd->add_option("first", input, "First plat file")->required();
  eq_cmd->add_option("second", second, "Second plat file")->required();

  auto* distance_cmd = app.add_subcommand("distance", "Bridge distance of the induced sphere");
  distance_cmd->add_option("file", input, "Plat file (default: stdin)");

  auto* spheres_cmd = app.add_subcommand("spheres", "Vertical sphere combinatorics");
  spheres_cmd->add_option("file", input, "Plat file (default: stdin)");
  bool list_spheres = false;
  bool count_spheres = false;
  std::string classify_text;
  std::string isolate_text;
  std::string check_text;
  std::string corner_text;
  spheres_cmd->add_flag("--list", list_spheres, "List every vertical sphere");
  spheres_cmd->add_flag("--count", count_spheres, "Count vertical spheres");
  spheres_cmd->add_option("--classify", classify_text, "Classify region <row>,<col>");
  spheres_cmd->add_option("--isolate", isolate_text, "Isolating pair for region <row>,<col>");
  spheres_cmd->add_option("--check", check_text, "Classify sphere c_1,...,c_{n-1}");
  spheres_cmd->add_option("--corner", corner_text, "Corner fraction: tl, tr, bl or br");

  auto* census_cmd = app.add_subcommand("census", "Orbit counts and random samples");
  CensusSpec spec;
  std::string coeffs_text;
  std::size_t sample_k = 0;
  bool dump = false;
  std::optional<int> genericity_m;
  census_cmd->add_option("--m", spec.m, "Plat width")->required();
  census_cmd->add_option("--n", spec.n, "Plat length")->required();
  census_cmd->add_option("--coeffs", coeffs_text, "Comma-separated coefficient set")->required();
  census_cmd->add_option("--cmin", spec.c_min, "Required twist bound");
  census_cmd->add_option("--seed", spec.seed, "Sampling seed");
  census_cmd->add_option("--sample-k", sample_k, "Number of grids to sample");
  census_cmd->add_flag("--dump", dump, "Print canonical representatives of the sample");
  census_cmd->add_option("--genericity", genericity_m,
                         "Also print the genericity ratio for coefficients in [-M, M]");

  auto* pd_cmd = app.add_subcommand("pd", "Planar diagram code");
  pd_cmd->add_option("file", input, "Plat file (default: stdin)");
  auto* gauss_cmd = app.add_subcommand("gauss", "Signed Gauss code");
  gauss_cmd->add_option("file", input, "Plat file (default: stdin)");
  auto* svg_cmd = app.add_subcommand("svg", "Render the plat as SVG");
  svg_cmd->add_option("file", input, "Plat file (default: stdin)");
  std::string overlay_text;
  std::string svg_output;
  svg_cmd->add_option("--overlay", overlay_text, "Draw sphere c_1,...,c_{n-1}");
  svg_cmd->add_option("-o,--output", svg_output, "Write to this file instead of stdout");
  auto* fingerprint_cmd = app.add_subcommand("fingerprint", "Invariant fingerprint");
  fingerprint_cmd->add_option("file", input, "Plat file (default: stdin)");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (validate_cmd->parsed()) {
      const PlatGrid grid = load(input, in);
      const auto result = validate(grid);
      if (result.ok()) {
        out << (machine ? "status=valid\n" : "valid\n");
        return kSuccess;
      }
      for (const auto& v : result.violations) {
        out << (machine ? "violation=" : "") << error_name(v.code) << ": " << v.message << '\n';
      }
      err << "error: " << error_name(result.violations.front().code) << '\n';
      return kDomainError;
    }

    if (braid_cmd->parsed()) {
      if (!word_text.empty() || braid_cmd->count("--from-word") > 0) {
        const BraidWord word = parse_braid(word_text, word_strands);
        out << format_plat(from_braid_word(word, word_n));
      } else {
        const BraidWord word = to_braid_word(load(input, in));
        out << (machine ? "word=" : "") << serialize_braid(word) << '\n';
      }
      return kSuccess;
    }

    if (canon_cmd->parsed()) {
      const CanonicalForm form = canonicalize(load(input, in));
      out << "# realized_by=" << symmetry_name(form.realized_by)
          << " orbit_size=" << form.orbit_size << '\n'
          << format_plat(form.grid);
      return kSuccess;
    }

    if (eq_cmd->parsed()) {
      const PlatGrid g1 = load(input, in);
      const PlatGrid g2 = load(second, in);
      const EquivalenceVerdict verdict = decide_equivalence(g1, g2);
      out << verdict_token(verdict.verdict) << '\n';
      print_report(out, verdict.first, "first.");
      print_report(out, verdict.second, "second.");
      if (g1.closure == Closure::EvenPlat || g2.closure == Closure::EvenPlat) {
        out << "note=even plats are not decided\n";
      }
      return kSuccess;
    }

    if (distance_cmd->parsed()) {
      const PlatGrid grid = load(input, in);
      const int distance = bridge_distance(grid);
      const int threshold = 4 * grid.m * (grid.m - 2);
      if (machine) {
        out << "distance=" << distance << '\n'
            << "unique_bridge_sphere=" << yes_no(grid.n > threshold) << '\n';
      } else {
        if (grid.n <= threshold) {
          out << "# hypotheses: n=" << grid.n << " <= 4m(m-2)=" << threshold
              << "; the bridge sphere need not be unique\n";
        } else {
          out << "# hypotheses: n=" << grid.n << " > 4m(m-2)=" << threshold
              << "; distance exceeds 2m=" << 2 * grid.m << "\n";
        }
        out << distance << '\n';
      }
      return kSuccess;
    }

    if (spheres_cmd->parsed()) {
      const PlatGrid grid = load(input, in);
      bool did_something = false;
      if (count_spheres) {
        out << (machine ? "count=" : "vertical spheres: ") << count_vertical_spheres(grid)
            << '\n';
        did_something = true;
      }
      if (list_spheres) {
        for (const auto& s : enumerate_vertical_spheres(grid)) out << "S(" << join(s.c) << ")\n";
        did_something = true;
      }
      if (!check_text.empty()) {
        const auto c = parse_int_list(check_text, "--check");
        const auto spec_out = check_sphere(grid, c);
        out << (machine ? "kind=" : "") << sphere_kind_name(spec_out.kind) << '\n';
        did_something = true;
      }
      if (!classify_text.empty()) {
        const auto region = parse_region(classify_text, "--classify");
        out << (machine ? "class=" : "") << region_class_name(classify_region(grid, region))
            << '\n';
        did_something = true;
      }
      if (!isolate_text.empty()) {
        const auto region = parse_region(isolate_text, "--isolate");
        const auto pair = isolating_sphere_for(grid, region);
        out << "s1=" << join(pair.s1.c) << " kind=" << sphere_kind_name(pair.s1.kind) << '\n'
            << "s2=" << join(pair.s2.c) << " kind=" << sphere_kind_name(pair.s2.kind) << '\n';
        did_something = true;
      }
      if (!corner_text.empty()) {
        Corner corner;
        if (corner_text == "tl") corner = Corner::TopLeft;
        else if (corner_text == "tr") corner = Corner::TopRight;
        else if (corner_text == "bl") corner = Corner::BottomLeft;
        else if (corner_text == "br") corner = Corner::BottomRight;
        else throw UsageError("--corner: expected tl, tr, bl or br");
        out << (machine ? "fraction=" : "") << corner_fraction(grid, corner).get_str() << '\n';
        did_something = true;
      }
      if (!did_something) {
        throw UsageError("spheres: pass --count, --list, --check, --classify, --isolate or --corner");
      }
      return kSuccess;
    }

    if (census_cmd->parsed()) {
      for (int value : parse_int_list(coeffs_text, "--coeffs")) spec.coefficient_set.push_back(value);
      const OrbitReport report = count_orbits(spec);
      out << "total_grids=" << report.total_grids << '\n'
          << "orbit_count=" << report.orbit_count << '\n';
      for (std::size_t k = 0; k < kAllSymmetries.size(); ++k) {
        out << "fixed." << symmetry_name(kAllSymmetries[k]) << '=' << report.fixed_counts[k]
            << '\n';
      }
      if (genericity_m) {
        const auto regions = static_cast<int>(twist_region_count(spec.m, spec.n));
        out << "genericity_ratio=" << genericity_ratio(*genericity_m, regions).get_str() << '\n';
      }
      if (sample_k > 0) {
        const auto grids = sample(spec, sample_k);
        const auto forms = dedupe(grids);
        out << "sampled=" << grids.size() << '\n' << "sampled_orbits=" << forms.size() << '\n';
        if (dump) {
          // Sorted so the dump does not depend on sampling order.
          std::vector<PlatGrid> reps;
          for (const auto& f : forms) reps.push_back(f.grid);
          std::sort(reps.begin(), reps.end(), grid_less);
          for (const auto& g : reps) out << format_plat(g);
        }
      }
      return kSuccess;
    }

    if (pd_cmd->parsed()) {
      out << format_pd(to_pd_code(load(input, in))) << '\n';
      return kSuccess;
    }

    if (gauss_cmd->parsed()) {
      out << format_gauss(gauss_code(load(input, in))) << '\n';
      return kSuccess;
    }

    if (svg_cmd->parsed()) {
      const PlatGrid grid = load(input, in);
      std::optional<VerticalSphereSpec> overlay;
      if (!overlay_text.empty()) overlay = check_sphere(grid, parse_int_list(overlay_text, "--overlay"));
      const std::string document = render_svg(grid, overlay);
      if (svg_output.empty()) {
        out << document;
      } else {
        std::ofstream file(svg_output);
        if (!file) throw UsageError("cannot write '" + svg_output + "'");
        file << document;
      }
      return kSuccess;
    }

    if (fingerprint_cmd->parsed()) {
      const InvariantFingerprint fp = fingerprint(load(input, in));
      if (machine) {
        out << "components=" << fp.components << '\n' << "determinant=" << fp.determinant << '\n';
        if (fp.alexander_evals) {
          for (const auto& [t, value] : *fp.alexander_evals) {
            out << "alexander(" << t << ")=" << value << '\n';
          }
        }
      } else {
        out << format_fingerprint(fp) << '\n';
      }
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace plat::cli
