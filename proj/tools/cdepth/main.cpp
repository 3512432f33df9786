#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cdepth/cdepth.hpp"
#include "selftest.hpp"

namespace fs = std::filesystem;
using namespace cdepth;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

unsigned default_threads() {
  if (const char* env = std::getenv("CDEPTH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring CDEPTH_THREADS=" << env << "\n";
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Relative output paths land in CDEPTH_OUTPUT_DIR when it is set.
fs::path output_path(const std::string& path) {
  fs::path p(path);
  if (p.is_relative())
    if (const char* dir = std::getenv("CDEPTH_OUTPUT_DIR")) p = fs::path(dir) / p;
  return p;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const fs::path p = output_path(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + p.string());
}

Configuration load(const std::string& path) { return parse_configuration(read_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colourful simplicial depth: exact enumeration, proof traces and minimal-system search"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string format_name = "human";
  std::string output;
  unsigned threads = default_threads();
  bool selftest = false;
  app.add_flag("--selftest", selftest, "Run the built-in example table and exit");
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output,-o", output, "Write the report here instead of standard output");
  app.add_option("--threads", threads, "Worker threads (default from CDEPTH_THREADS, else 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string input;
  auto* depth = app.add_subcommand("depth", "Depth report of a configuration file");
  depth->add_option("--input,-i", input, "Configuration file")->required();

  int trace_colour = 0;
  auto* trace = app.add_subcommand("trace", "Replay the lower-bound argument on a configuration");
  trace->add_option("--input,-i", input, "Configuration file")->required();
  trace->add_option("--colour", trace_colour, "Colour to start from (1-based; default: every colour)")
      ->check(CLI::PositiveNumber);

  std::uint64_t sample = 0, seed = 0;
  std::size_t extra_probes = 32;
  auto* octa = app.add_subcommand("octa-check", "Check the octahedron dichotomy and parity at probe directions");
  octa->add_option("--input,-i", input, "Configuration file")->required();
  octa->add_option("--sample", sample, "Check this many random octahedra instead of all");
  octa->add_option("--probes", extra_probes, "Random generic probe directions added to the antipodes")
      ->capture_default_str();
  octa->add_option("--seed", seed, "Seed for probes and sampling")->capture_default_str();

  std::string system_out;
  auto* extract = app.add_subcommand("extract", "Vector system of a configuration with property verdicts");
  extract->add_option("--input,-i", input, "Configuration file")->required();
  extract->add_option("--system-out", system_out, "Also write the system in text format");

  std::string check_input;
  auto* check = app.add_subcommand("check-system", "Property verdicts for a system text file");
  check->add_option("--input,-i", check_input, "System file")->required();

  std::size_t d = 2, max_size = 0;
  bool diamond = false, plain = false, all = false;
  std::uint64_t node_budget = 0;
  std::string checkpoint;
  bool quiet = false;
  auto* search = app.add_subcommand("search-nu", "Smallest vector system with the parity (and covering) property");
  search->add_option("--d", d, "Dimension (1 to 4)")->required();
  search->add_option("--max-size", max_size, "Largest system size examined")->required();
  search->add_flag("--diamond", diamond, "Drop the covering property, require a nonempty system");
  search->add_flag("--plain-exhaustive", plain, "Search without symmetry reduction");
  search->add_flag("--all", all, "Collect every inequivalent minimum system");
  search->add_option("--node-budget", node_budget, "Stop after this many nodes (0: no limit)");
  search->add_option("--checkpoint", checkpoint, "Resume from and save to this file (symmetry-reduced only)");
  search->add_flag("--quiet", quiet, "No progress on standard error");

  RandomSpec spec;
  auto* random = app.add_subcommand("random", "Emit a random valid configuration");
  random->add_option("--d", spec.d, "Dimension")->required();
  random->add_option("--bound", spec.bound, "Coordinates lie in [-bound, bound]")->capture_default_str();
  random->add_option("--seed", spec.seed, "Seed")->capture_default_str();
  random->add_flag("--diamond", diamond, "Diamond core condition instead of full");
  random->add_option("--attempts", spec.attempts, "Rejection budget (seeds scanned with --target-depth)")
      ->capture_default_str();
  std::uint64_t target_depth = 0;
  random->add_option("--target-depth", target_depth,
                     "Scan seeds upward from --seed until a full-core configuration has this depth");

  std::int64_t bounds_d = 4, bounds_to = 0;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the minimum depth");
  bounds->add_option("--d", bounds_d, "Dimension (or first of a range)")->check(CLI::PositiveNumber)->capture_default_str();
  bounds->add_option("--to", bounds_to, "Last dimension of the range");

  std::uint64_t budget = 100000;
  auto* find = app.add_subcommand("find-diamond-d2", "Search for a diamond-core planar configuration of depth 3");
  find->add_option("--seed", seed, "Seed")->capture_default_str();
  find->add_option("--budget", budget, "Candidate configurations to try")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const Format format = parse_format(format_name);
    if (selftest) return tool::run_selftest(std::cout);
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kInputError;
    }

    if (*depth) {
      emit(render(enumerate_depth(load(input), threads), format), output);
      return kOk;
    }
    if (*trace) {
      const Configuration config = load(input);
      const Engine engine(config, threads);
      if (trace_colour > static_cast<int>(config.colours()))
        throw Error(ErrorKind::invalid_argument, "colour out of range");
      std::string text;
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (std::size_t q = 0; q < config.colours(); ++q) {
        if (trace_colour && static_cast<int>(q) + 1 != trace_colour) continue;
        const ProofTrace t = proof_trace(engine, q);
        if (format == Format::json) list.push_back(to_json(t));
        else text += render(t, format);
      }
      if (format == Format::json) text = (trace_colour ? list[0] : list).dump(2) + "\n";
      emit(text, output);
      return kOk;
    }
    if (*octa) {
      const Configuration config = load(input);
      const Engine engine(config, threads);
      const OctahedronSweep sweep = octahedron_sweep(engine, extra_probes, seed, sample, threads);
      emit(render(sweep, format), output);
      return sweep.violations == 0 ? kOk : kFailed;
    }
    if (*extract) {
      const Configuration config = load(input);
      const SystemReport r = system_report(extract_system(config, threads));
      emit(render(r, format), output);
      if (!system_out.empty()) emit(serialize_system(r.system), system_out);
      const bool ok = r.property2.ok && (config.mode() == CoreMode::diamond || r.property1.ok);
      return ok ? kOk : kFailed;
    }
    if (*check) {
      const SystemReport r = system_report(parse_system(read_file(check_input)));
      emit(render(r, format), output);
      return r.property1.ok && r.property2.ok ? kOk : kFailed;
    }
    if (*search) {
      SearchOptions o;
      o.d = d;
      o.mode = diamond ? CoreMode::diamond : CoreMode::full;
      o.max_size = max_size;
      o.threads = threads;
      o.plain = plain;
      o.node_budget = node_budget;
      o.collect_all = all;
      o.checkpoint = checkpoint.empty() ? "" : output_path(checkpoint).string();
      if (!quiet)
        o.progress = [](const SearchProgress& p) {
          const double rate = p.seconds > 0 ? static_cast<double>(p.nodes) / p.seconds : 0.0;
          std::cerr << "size " << p.level << ": " << p.nodes << " nodes";
          if (p.frontier) std::cerr << ", " << p.frontier << " at this size";
          std::cerr << ", " << static_cast<std::uint64_t>(rate) << " nodes/s\n";
        };
      const SearchCertificate cert = search_min_system(o);
      emit(render(cert, format), output);
      if (cert.outcome == SearchOutcome::budget_exhausted) return kFailed;
      if (cert.outcome == SearchOutcome::witness && !cert.witness_verified) return kFailed;
      return kOk;
    }
    if (*random) {
      spec.mode = diamond ? CoreMode::diamond : CoreMode::full;
      if (target_depth && diamond) throw Error(ErrorKind::invalid_argument, "--target-depth needs full mode");
      emit(serialize_configuration(target_depth ? find_depth_witness(spec, target_depth) : random_configuration(spec)),
           output);
      return kOk;
    }
    if (*bounds) {
      std::vector<BoundValues> rows;
      for (std::int64_t k = bounds_d; k <= std::max(bounds_d, bounds_to); ++k) rows.push_back(bound_formulas(k));
      emit(render(rows, format), output);
      return kOk;
    }
    if (*find) {
      const Configuration config = find_diamond_witness_d2(seed, budget);
      emit(serialize_configuration(config), output);
      return enumerate_depth(config).depth == 3 ? kOk : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::budget_exhausted:
      case ErrorKind::proof_violation: return kFailed;
      default: return kInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
