#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bcov/fixtures.hpp"
#include "bcov/report.hpp"
#include "bcov/svg.hpp"

using namespace bcov;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

Json load_input(const std::string& arg, const std::string& kind) {
  if (arg.rfind("fixtures:", 0) == 0) {
    Json j = load_fixture(arg.substr(9));
    if (!kind.empty() && j.value("kind", "") != kind)
      throw InputError("fixture '" + arg.substr(9) + "' is not a " + kind + " fixture");
    return j;
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open input file '" + arg + "'");
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw InputError("malformed JSON in '" + arg + "': " + std::string(e.what()));
  }
}

SigmaPoint parse_point(int n, const std::string& text) {
  std::vector<Rat> coords;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) coords.push_back(rat_parse(tok));
  if (static_cast<int>(coords.size()) != n)
    throw InputError("--point must list exactly " + std::to_string(n) + " rationals");
  return SigmaPoint(n, std::move(coords));
}

/* comma list of verdict tokens; returns false on contradiction */
bool check_expect(const std::string& expect,
                  const std::map<std::string, bool>& verdicts) {
  if (expect.empty()) return true;
  std::stringstream ss(expect);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    bool want = true;
    std::string key = tok;
    if (key.rfind("not-", 0) == 0) {
      want = false;
      key = key.substr(4);
    }
    auto it = verdicts.find(key);
    if (it == verdicts.end()) throw InputError("unknown --expect token '" + tok + "'");
    if (it->second != want) return false;
  }
  return true;
}

void print_envelope(const std::string& command, std::optional<std::uint64_t> seed,
                    double elapsed_ms, Json payload) {
  std::cout << make_envelope(command, seed, elapsed_ms, std::move(payload)).dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"branched covering toolkit"};
  app.require_subcommand(1);
  std::string command = join_argv(argc, argv);
  auto t0 = std::chrono::steady_clock::now();

  /* bezout */
  auto* bez = app.add_subcommand("bezout", "elementary symmetric coverings");
  bez->require_subcommand(1);
  int bn = 0;
  std::string bpoint, bfixture, bexpect;
  auto* ban = bez->add_subcommand("analyze", "fiber and branching data at a point");
  ban->add_option("--n", bn, "number of variables");
  ban->add_option("--point", bpoint, "comma-separated rational coordinates");
  ban->add_option("--fixture", bfixture, "named bezout fixture");
  ban->add_option("--expect", bexpect,
                  "verdict assertions: hyperbolic,collapse,branch (not- prefixes allowed)");
  std::string mexpr = "x1";
  std::string mwidth = "1/1000000000";
  auto* bmu = bez->add_subcommand("mu", "averaged evaluation over the fiber");
  bmu->add_option("--n", bn, "number of variables");
  bmu->add_option("--point", bpoint, "comma-separated rational coordinates");
  bmu->add_option("--fixture", bfixture, "named bezout fixture");
  bmu->add_option("--f", mexpr, "polynomial in x1..xn");
  bmu->add_option("--width", mwidth, "target enclosure width for irrational fibers");

  /* plcov */
  auto* pl = app.add_subcommand("plcov", "piecewise linear coverings");
  pl->require_subcommand(1);
  std::string pinput, psvg, pexpect;
  auto* pchk = pl->add_subcommand("check", "validate and analyze a covering");
  pchk->add_option("input", pinput, "JSON file or fixtures:<name>")->required();
  pchk->add_option("--svg", psvg, "write a rendering to this path");
  pchk->add_option("--expect", pexpect,
                   "verdict assertions: quasi,branched (not- prefixes allowed)");

  /* fintop */
  auto* ft = app.add_subcommand("fintop", "finite topological spaces");
  ft->require_subcommand(1);
  std::uint64_t fseed = 0;
  long ftrials = 1000;
  int fmax = 5, fdom = 4, fcod = 3;
  auto* ffz = ft->add_subcommand("fuzz", "randomized lemma certification");
  ffz->add_option("--seed", fseed, "RNG seed");
  ffz->add_option("--trials", ftrials, "number of random instances");
  ffz->add_option("--max-points", fmax, "maximum points per space");
  auto* fsw = ft->add_subcommand("sweep", "exhaustive lemma certification");
  fsw->add_option("--max-points", fdom, "maximum domain size (codomain capped at 3)");
  fsw->add_option("--max-codomain", fcod, "maximum codomain size");
  std::string flemma, finstance, fexpect;
  auto* fck = ft->add_subcommand("check", "run one lemma on one instance");
  fck->add_option("--lemma", flemma, "lemma id")->required();
  fck->add_option("--instance", finstance, "JSON file or fixtures:<name>")->required();
  fck->add_option("--expect", fexpect,
                  "verdict assertions: qualifying,holds (not- prefixes allowed)");

  auto* fx = app.add_subcommand("fixtures", "list shipped fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (ban->parsed() || bmu->parsed()) {
      SigmaPoint a = bfixture.empty() ? parse_point(bn, bpoint) : bezout_fixture(bfixture);
      if (ban->parsed()) {
        BezoutAnalysis res = analyze_point(a);
        bool ok = check_expect(bexpect, {{"hyperbolic", res.hyperbolic},
                                         {"collapse", res.collapse},
                                         {"branch", res.branch}});
        print_envelope(command, std::nullopt, ms_since(t0), bezout_to_json(res));
        return ok ? 0 : 1;
      }
      MPoly f = parse_poly(mexpr, a.n);
      Json payload;
      try {
        Rat v = mu_exact(a, f);
        payload["mode"] = "exact";
        payload["value"] = rat_json(v);
      } catch (const std::domain_error&) {
        QInterval iv = mu_interval(a, f, rat_parse(mwidth));
        payload["mode"] = "interval";
        payload["value"] = interval_json(iv);
      }
      print_envelope(command, std::nullopt, ms_since(t0), payload);
      return 0;
    }
    if (pchk->parsed()) {
      PLCovering cov = plcov_from_json(load_input(pinput, "plcov"));
      BranchReport rep = analyze(cov);
      if (!psvg.empty()) emit_svg(cov, rep, psvg);
      bool ok = check_expect(pexpect, {{"quasi", rep.is_quasi}, {"branched", rep.is_branched}});
      print_envelope(command, std::nullopt, ms_since(t0), branch_report_to_json(rep));
      return ok ? 0 : 1;
    }
    if (ffz->parsed()) {
      FuzzSummary sum = fuzz(fseed, ftrials, fmax);
      print_envelope(command, fseed, ms_since(t0), fuzz_summary_to_json(sum));
      return sum.failures.empty() ? 0 : 1;
    }
    if (fsw->parsed()) {
      FuzzSummary sum = sweep(std::min(fdom, 4), std::min(fcod, 3));
      print_envelope(command, std::nullopt, ms_since(t0), fuzz_summary_to_json(sum));
      return sum.failures.empty() ? 0 : 1;
    }
    if (fck->parsed()) {
      FinMap m = finmap_from_json(load_input(finstance, "fintop"));
      LemmaVerdict v = check_lemma(flemma, m);
      bool ok = check_expect(fexpect, {{"qualifying", v.qualifying}, {"holds", v.holds}});
      print_envelope(command, std::nullopt, ms_since(t0), lemma_verdict_to_json(v));
      return ok ? 0 : 1;
    }
    if (fx->parsed()) {
      Json payload;
      payload["directory"] = fixtures_dir();
      payload["names"] = fixture_names();
      print_envelope(command, std::nullopt, ms_since(t0), payload);
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
