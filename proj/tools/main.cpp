#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gindepth/errors.hpp"
#include "gindepth/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Groebner toolkit: Hilbert data, generic initial ideals, and "
      "primality/depth criteria for graded quotients"};
  app.get_formatter()->column_width(28);

  std::string command;
  std::string path;
  gindepth::RunOptions opt;
  long long s = -1;
  bool json = false;

  app.add_option("command", command,
                 "hilbert | in | gin | borel | obstruct | depth | section | verify")
      ->required();
  app.add_option("file", path, "ideal file: `ring <n>`, then one polynomial per line")
      ->required();
  app.add_option("--field", opt.field, "coefficient field: q or p:<odd prime>")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "base seed for randomized subroutines")
      ->capture_default_str();
  app.add_option("--trials", opt.trials, "coordinate samples per gin computation")
      ->capture_default_str();
  app.add_option("--s", s, "hyperplane sections to apply (depth command)");
  app.add_flag("--json", json, "emit the machine-readable report");

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  opt.command = command;
  if (s >= 0) opt.s = static_cast<std::size_t>(s);

  try {
    const gindepth::Report report = gindepth::run(opt, buffer.str());
    std::cout << (json ? report.to_json() : report.to_human());
    return report.exit_code;
  } catch (const gindepth::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
