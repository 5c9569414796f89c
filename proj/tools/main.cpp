#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11/CLI11.hpp>

#include "kcomm/oracle.hpp"
#include "kcomm_cli/commands.hpp"

namespace {

int report(const std::string& what, int code) {
  std::cerr << "error: " << what << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kcomm;

  CLI::App app{"K0 classes of finite-dimensional k[t1..tn]-modules given by commuting matrices"};
  std::string command;
  std::string input;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(cli::command_names()));
  app.add_option("input", input, "Input file (`-` for stdin)")->required();
  app.add_flag("--json", json, "Emit a single JSON document");
  app.add_option("--seed", seed, "Seed for randomized factorization steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kInputError;
  }

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) return report("cannot read " + input, cli::kInputError);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  try {
    const cli::JobDescription job = cli::parse_job(text);
    const cli::CommandResult result = cli::run_command(command, job, {json, seed});
    std::cout << result.output;
    return result.exit_code;
  } catch (const ParseError& e) {
    return report(input + ":" + std::to_string(e.where().line) + ":" + std::to_string(e.where().column) + ": " +
                      e.message(),
                  cli::kInputError);
  } catch (const std::invalid_argument& e) {  // usage, dimension, polynomial, bound errors
    return report(e.what(), cli::kInputError);
  } catch (const std::domain_error& e) {  // field errors
    return report(e.what(), cli::kInputError);
  } catch (const std::exception& e) {
    return report(std::string("internal error: ") + e.what(), cli::kVerificationFailure);
  }
}
