#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blowup/cli/corpus.hpp"

namespace {

using blowup::cli::json;

int execute(const std::string& text, const blowup::cli::Defaults& d, bool pretty) {
  auto emit = [pretty](const json& rep) {
    if (pretty) std::cout << blowup::cli::render(rep);
    else std::cout << rep.dump() << '\n';
    std::cout.flush();
  };
  try {
    blowup::cli::Session s = blowup::cli::parse_session(text);
    return blowup::cli::run_session(s, d, emit);
  } catch (const blowup::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const blowup::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return blowup::exit_code(e.kind());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blowup-lab: reduction numbers, regularity and Hilbert data of blowup algebras"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> horizon, seed, window;
  bool pretty = false, as_json = false;
  app.add_option("--horizon", horizon, "default search horizon");
  app.add_option("--seed", seed, "seed for generic reductions (default 0)");
  app.add_option("--window", window, "Hilbert fit window");
  auto* pretty_flag = app.add_flag("--pretty", pretty, "render tables instead of JSON");
  app.add_flag("--json", as_json, "newline-delimited JSON (default)")->excludes(pretty_flag);

  std::string file, stmts;
  auto* run = app.add_subcommand("run", "run a session file");
  run->add_option("file", file, "session file (.bl)")->required();
  auto* eval = app.add_subcommand("eval", "run statements given inline");
  eval->add_option("statements", stmts, "statements separated by ';'")->required();
  auto* corpus = app.add_subcommand("corpus", "run the golden corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const blowup::cli::Defaults d{horizon, seed, window};
  if (run->parsed()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot read " << file << '\n';
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return execute(buf.str(), d, pretty);
  }
  if (eval->parsed()) return execute(stmts, d, pretty);
  if (corpus->parsed()) {
    const int failed = blowup::cli::golden_corpus(d, [pretty](const json& rep) {
      if (pretty) std::cout << blowup::cli::render(rep);
      else std::cout << rep.dump() << '\n';
      std::cout.flush();
    });
    if (failed) std::cerr << failed << " golden check(s) failed\n";
    return failed ? 4 : 0;
  }
  return 1;
}
