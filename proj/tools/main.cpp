// Command line front end. Payloads are JSON by default; --human switches to
// a compact text rendering. Exit codes: 0 clean, 1 a check failed or a scan
// found a violation, 2 usage or input errors.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmss/cli.hpp"

namespace {

void emit(const lmss::cli::CommandResult& res, bool human) {
  if (human)
    std::cout << res.human;
  else
    std::cout << res.payload.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally maximum stable set toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  app.add_flag("--human", human, "text output instead of JSON");
  std::string format = "edgelist";
  app.add_option("--format", format, "input format: edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string analyze_path;
  CLI::App* analyze = app.add_subcommand("analyze", "stability, matching, and recognition summary");
  analyze->add_option("path", analyze_path, "graph file, - for stdin")->required();

  std::string verify_path;
  std::string verify_check;
  int verify_atlas_n = 0;
  int verify_jobs = 1;
  CLI::App* verify = app.add_subcommand("verify", "run one check on a graph or the atlas");
  verify->add_option("--check", verify_check, "theorem2, corollary1, lemma-match, or nt")->required();
  verify->add_option("path", verify_path, "graph file, - for stdin");
  verify->add_option("--atlas", verify_atlas_n, "check every connected graph up to this order");
  verify->add_option("--jobs", verify_jobs, "worker threads for --atlas");

  std::string extend_path;
  std::string extend_matching_text;
  CLI::App* extend = app.add_subcommand("extend-matching", "grow a matching to a maximum one when possible");
  extend->add_option("--matching", extend_matching_text, "edges as u-v,w-x")->required();
  extend->add_option("path", extend_path, "graph file, - for stdin")->required();

  std::string line_path;
  CLI::App* line = app.add_subcommand("line-graph", "emit the line graph and the edge correspondence");
  line->add_option("path", line_path, "graph file, - for stdin")->required();

  std::string psi_path;
  int psi_max_size = -1;
  CLI::App* psi = app.add_subcommand("psi", "enumerate locally maximum stable sets");
  psi->add_option("--max-size", psi_max_size, "cap member size");
  psi->add_option("path", psi_path, "graph file, - for stdin")->required();

  int scan_max_n = 6;
  std::string scan_checks;
  std::string scan_path;
  int scan_jobs = 1;
  CLI::App* scan = app.add_subcommand("scan", "run checks across the atlas or a graph6 stream");
  scan->add_option("--max-n", scan_max_n, "largest vertex count for the built-in atlas");
  scan->add_option("--checks", scan_checks, "comma separated: theorem2,corollary1,lemma_match,nt_extension,open_question");
  scan->add_option("--jobs", scan_jobs, "worker threads");
  scan->add_option("path", scan_path, "graph6 file, - for stdin (overrides --max-n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    lmss::cli::CommandResult res;
    if (*analyze) {
      res = lmss::cli::cmd_analyze(lmss::cli::load_graph(analyze_path, format));
    } else if (*verify) {
      if (verify_atlas_n > 0) {
        res = lmss::cli::cmd_verify_atlas(verify_check, verify_atlas_n,
                                          verify_jobs);
      } else if (!verify_path.empty()) {
        res = lmss::cli::cmd_verify(lmss::cli::load_graph(verify_path, format),
                                    verify_check);
      } else {
        std::cerr << "verify needs a path or --atlas N\n";
        return 2;
      }
    } else if (*extend) {
      res = lmss::cli::cmd_extend_matching(
          lmss::cli::load_graph(extend_path, format), extend_matching_text);
    } else if (*line) {
      res = lmss::cli::cmd_line_graph(lmss::cli::load_graph(line_path, format));
    } else if (*psi) {
      res = lmss::cli::cmd_psi(lmss::cli::load_graph(psi_path, format),
                               psi_max_size);
    } else if (*scan) {
      std::vector<std::string> names;
      std::string token;
      std::istringstream in(scan_checks);
      while (std::getline(in, token, ','))
        if (!token.empty()) names.push_back(token);
      res = lmss::cli::cmd_scan(scan_max_n, names, scan_path, scan_jobs);
    }
    emit(res, human);
    return res.exit_code;
  } catch (const lmss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
