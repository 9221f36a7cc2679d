#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cli_common.hpp"
#include "revspec/revspec.hpp"

using namespace revspec;
namespace fs = std::filesystem;

namespace {

rtm::Machine load_checked(const std::string& path) {
  rtm::Machine m = rtm::parse_machine(cli::read_input(path));
  const auto diags = rtm::check_machine(m);
  if (!diags.empty()) throw Error(ErrorKind::Usage, path + " is not a reversible machine: " + diags.front());
  return m;
}

ExperimentReport perform(const std::string& which, const rtm::Machine& m) {
  return which == "commute" ? commute(m) : neutralize(m);
}

void print_report(const std::string& which, const std::string& path, const ExperimentReport& r) {
  const auto& v = r.verdict;
  std::cout << which << " " << path << ": " << (v.equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << " ("
            << v.left_blocks << " / " << v.right_blocks << " blocks)\n";
  if (!v.equivalent && v.witness) {
    std::cout << (v.witness->block ? "first difference at block b" + std::to_string(*v.witness->block)
                                   : std::string("declarations differ"))
              << "\n--- forward interpreter\n" << v.witness->left << "+++ inverse interpreter\n"
              << v.witness->right;
  }
}

int corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".rtm") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorKind::Usage, "no .rtm files in " + dir);

  bool all = true;
  std::printf("%-24s %6s %-16s %-16s %7s\n", "machine", "rules", "commute", "neutralize", "blocks");
  for (const auto& f : files) {
    const rtm::Machine m = load_checked(f.string());
    std::string cells[2];
    std::size_t blocks = 0;
    int k = 0;
    for (const char* which : {"commute", "neutralize"}) {
      try {
        const ExperimentReport r = perform(which, m);
        cells[k] = r.verdict.equivalent ? "EQUIVALENT" : "NOT EQUIVALENT";
        all &= r.verdict.equivalent;
        blocks = r.verdict.left_blocks;
      } catch (const Error& e) {
        cells[k] = "ERROR";
        all = false;
        std::cerr << f.filename().string() << " " << which << ": " << e.what() << "\n";
      }
      ++k;
    }
    std::printf("%-24s %6zu %-16s %-16s %7zu\n", f.filename().string().c_str(), m.rules.size(), cells[0].c_str(),
                cells[1].c_str(), blocks);
  }
  return all ? cli::kOk : cli::kNotEquivalent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check that inversion and specialization commute on machines", "experiment"};
  std::string file, dir;
  auto* cm = app.add_subcommand("commute", "pe(interp, inv(m)) against pe(inv(interp), m)");
  cm->add_option("file", file, "Machine file")->required();
  auto* nt = app.add_subcommand("neutralize", "pe(interp, m) against pe(inv(interp), inv(m))");
  nt->add_option("file", file, "Machine file")->required();
  app.add_option("--corpus", dir, "Run both experiments on every .rtm file in a directory");
  app.require_subcommand(0, 1);

  return cli::main_wrapper(app, argc, argv, [&]() -> int {
    if (!dir.empty()) return corpus(dir);
    if (!*cm && !*nt) throw Error(ErrorKind::Usage, "expected commute, neutralize or --corpus DIR");
    const std::string which = *cm ? "commute" : "neutralize";
    const ExperimentReport r = perform(which, load_checked(file));
    print_report(which, file, r);
    return r.verdict.equivalent ? cli::kOk : cli::kNotEquivalent;
  });
}
