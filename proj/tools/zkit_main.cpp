// zkit: batch runner for .zk scripts.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zkit/error.hpp"
#include "zkit/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"zkit: Zariski lattice and gluing computations over computable rings"};
  std::string script_path;
  bool json_out = false, fail_fast = false, print_only = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_pairs;
  std::optional<unsigned> max_exp;
  std::optional<long> timeout_ms;
  app.add_option("script", script_path, "script file, or - for stdin")->required();
  app.add_flag("--json", json_out, "emit the JSON report");
  app.add_option("--seed", seed, "seed for sampling commands (default: $ZKIT_SEED, else 0)");
  app.add_option("--max-pairs", max_pairs, "S-pair cap per Groebner basis run");
  app.add_option("--max-exp", max_exp, "cap for least-exponent searches");
  app.add_flag("--fail-fast", fail_fast, "stop at the first error");
  app.add_option("--timeout-ms", timeout_ms, "per-statement time limit");
  app.add_flag("--print", print_only, "parse and pretty-print the script without running it");
  CLI11_PARSE(app, argc, argv);

  std::string source;
  if (script_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    source = buf.str();
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "zkit: cannot open " << script_path << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    source = buf.str();
  }

  if (print_only) {
    try {
      std::cout << zkit::dsl::print(zkit::dsl::parse(source));
      return 0;
    } catch (const zkit::Error& e) {
      std::cerr << script_path << ":" << e.what() << "\n";
      return 2;
    }
  }

  zkit::dsl::RunOptions opts;
  if (seed) {
    opts.seed = *seed;
  } else if (const char* env = std::getenv("ZKIT_SEED")) {
    opts.seed = std::strtoull(env, nullptr, 10);
  }
  opts.max_pairs = max_pairs;
  opts.max_exponent = max_exp;
  opts.timeout_ms = timeout_ms;
  opts.fail_fast = fail_fast;
  if (script_path != "-") opts.base_dir = std::filesystem::path(script_path).parent_path().string();

  zkit::dsl::Report report = zkit::dsl::run_source(source, opts);
  if (json_out) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.render();
  }
  return report.exit_code();
}
