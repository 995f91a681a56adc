// Command-line front end; talks to the core exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgc.h"

namespace {

int failWith(fgc_status s, const std::string& what) {
  std::fprintf(stderr, "error: %s: %s\n", what.c_str(), fgc_status_str(s));
  return 1;
}

void printReport(const std::string& kv, const std::string& format) {
  if (format == "kv") {
    std::fputs(kv.c_str(), stdout);
    return;
  }
  std::istringstream in(kv);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (line.rfind("report=", 0) == 0) {
      std::printf("== %s ==\n", line.substr(eq + 1).c_str());
      continue;
    }
    auto expectedPos = line.find(" expected=");
    if (expectedPos == std::string::npos) {
      std::printf("  %s\n", line.c_str());
      continue;
    }
    std::string name = line.substr(0, line.find('='));
    std::string value = line.substr(eq + 1, expectedPos - eq - 1);
    auto passPos = line.find(" pass=");
    std::string expected = line.substr(expectedPos + 10, passPos - expectedPos - 10);
    bool pass = line.substr(passPos + 6) == "1";
    std::printf("  [%s] %s = %s (expected %s)\n", pass ? "ok" : "FAIL", name.c_str(),
                value.c_str(), expected.c_str());
  }
}

int runGraphOp(const std::string& path, const std::string& op, int abVariant) {
  fgc_graph* g = nullptr;
  fgc_status s = fgc_graph_read(path.c_str(), &g);
  if (s != FGC_OK) return failWith(s, "reading " + path);
  fgc_chain* c = nullptr;
  if (op == "trace")
    s = fgc_trace(g, abVariant, &c);
  else if (op == "boundary")
    s = fgc_boundary(g, &c);
  else if (op == "phi")
    s = fgc_phi(g, &c);
  else if (op == "d")
    s = fgc_bordification_d(g, &c);
  else
    s = FGC_ERR_INVALID;
  if (s != FGC_OK) {
    fgc_graph_free(g);
    return failWith(s, op);
  }
  if (op == "phi") {
    long deg = 0;
    fgc_phi_degree(g, &deg);
    std::printf("# degree=%ld\n", deg);
  }
  char* text = nullptr;
  fgc_chain_text(c, &text);
  std::fputs(text, stdout);
  long terms = 0;
  fgc_chain_term_count(c, &terms);
  std::printf("# terms=%ld\n", terms);
  fgc_string_free(text);
  fgc_chain_free(c);
  fgc_graph_free(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forested graph complex toolkit"};
  app.require_subcommand(1);

  int threads = 1;
  std::string format = "human";
  std::string certPath;
  unsigned long long seed = 0;
  app.add_option("--threads", threads, "worker threads for the verification pipelines");
  app.add_option("--format", format, "report format: human or kv")
      ->check(CLI::IsMember({"human", "kv"}));
  app.add_option("--emit-certificate", certPath, "directory for machine-checkable certificates");
  app.add_option("--seed", seed, "seed for the randomized suites");

  auto* vmu3 = app.add_subcommand("verify-mu3", "rank-4 pipeline: D=-2C, -3A, the cycle z");
  auto* vmu5 = app.add_subcommand("verify-mu5", "rank-6 pipeline: 184/148/36/39/32/71/7/0");
  auto* vh9 = app.add_subcommand("verify-h9", "top quotient of the rank-6 complex vanishes");
  auto* selftest = app.add_subcommand("selftest", "randomized property suites");

  std::string traceFile, boundaryFile, phiFile, rankFile, dFile;
  bool abVariant = false;
  auto* trace = app.add_subcommand("trace", "graphical trace of a forested graph file");
  trace->add_option("file", traceFile)->required();
  trace->add_flag("--ab", abVariant, "type A/B variant of the trace");
  auto* boundary = app.add_subcommand("boundary", "boundary of a forested graph file");
  boundary->add_option("file", boundaryFile)->required();
  auto* phiCmd = app.add_subcommand("phi", "bordification cycle of an odd AB-graph file");
  phiCmd->add_option("file", phiFile)->required();
  auto* dCmd = app.add_subcommand("d", "bordification differential of a filtered graph file");
  dCmd->add_option("file", dFile)->required();
  auto* rankCmd = app.add_subcommand("rank", "exact rank of a matrix file");
  rankCmd->add_option("file", rankFile)->required();

  int chordsRank = 0;
  bool doEnumerate = false, doRelations = false;
  auto* chords = app.add_subcommand("chords", "chord diagrams of a given rank");
  chords->add_option("--rank", chordsRank, "rank (first Betti number)")->required();
  chords->add_flag("--enumerate", doEnumerate, "list diagrams as foot-pairing words");
  chords->add_flag("--relations", doRelations, "sliding relation count and rank");

  CLI11_PARSE(app, argc, argv);

  if (*vmu3 || *vmu5 || *vh9) {
    const char* which = *vmu3 ? "mu3" : *vmu5 ? "mu5" : "h9";
    char* report = nullptr;
    int allPass = 0;
    fgc_status s = fgc_verify(which, certPath.empty() ? nullptr : certPath.c_str(), threads,
                              &report, &allPass);
    if (!report) return failWith(s, "verify");
    printReport(report, format);
    fgc_string_free(report);
    return allPass ? 0 : 2;
  }
  if (*selftest) {
    char* report = nullptr;
    int allPass = 0;
    fgc_status s = fgc_selftest(seed, &report, &allPass);
    if (!report) return failWith(s, "selftest");
    printReport(report, format);
    fgc_string_free(report);
    return allPass ? 0 : 2;
  }
  if (*trace) return runGraphOp(traceFile, "trace", abVariant ? 1 : 0);
  if (*boundary) return runGraphOp(boundaryFile, "boundary", 0);
  if (*phiCmd) return runGraphOp(phiFile, "phi", 0);
  if (*dCmd) return runGraphOp(dFile, "d", 0);
  if (*rankCmd) {
    long r = 0;
    fgc_status s = fgc_matrix_rank_file(rankFile.c_str(), &r);
    if (s != FGC_OK) return failWith(s, "rank");
    std::printf("rank=%ld\n", r);
    return 0;
  }
  if (*chords) {
    if (doEnumerate || (!doRelations && !doEnumerate)) {
      char* lines = nullptr;
      fgc_status s = fgc_chords_enumerate(chordsRank, &lines);
      if (s != FGC_OK) return failWith(s, "chords");
      std::fputs(lines, stdout);
      fgc_string_free(lines);
    }
    if (doRelations) {
      long count = 0, rk = 0;
      fgc_status s = fgc_chords_relations(chordsRank, &count, &rk);
      if (s != FGC_OK) return failWith(s, "chords");
      std::printf("relations=%ld\nrank=%ld\n", count, rk);
    }
    return 0;
  }
  return 0;
}
