// knotsig: exact Seifert-matrix invariants from the command line.
//
//   knotsig invariants knot.json
//   knotsig at knot.json --x 1/2 [--lower]
//   knotsig pretzel 3 -3 -4
//   knotsig batch corpus.jsonl --out reports.jsonl [--jobs N]
//   knotsig profile knot.json --tsv profile.tsv
//
// Exit status reports I/O and validation problems only; verdicts are data.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "knotsig/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw knotsig::Error(knotsig::ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw knotsig::Error(knotsig::ErrorCode::Parse, "cannot write '" + path + "'");
  out << content;
}

knotsig::SeifertMatrix load_knot(const std::string& path) {
  const auto rec = knotsig::parse_knot_text(read_file(path));
  return knotsig::validate_seifert(rec.matrix, rec.name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact knot invariants from Seifert matrices"};
  app.require_subcommand(1);

  std::string input;
  auto* invariants = app.add_subcommand("invariants", "Full invariant report as JSON");
  invariants->add_option("input", input, "Knot file {\"name\", \"matrix\"}")->required();

  std::string x_text;
  bool lower = false;
  auto* at = app.add_subcommand("at", "Rank and signature at one circle point");
  at->add_option("input", input, "Knot file")->required();
  at->add_option("--x", x_text, "Real part of omega as p/q, in [-1, 1]")->required();
  at->add_flag("--lower", lower, "Use the lower half circle");

  std::vector<long long> params;
  auto* pretzel = app.add_subcommand("pretzel", "Doubly-slice verdict for P(3,-3,-m)");
  pretzel->add_option("params", params, "Three pretzel parameters")->required()->expected(3);

  std::string out_path;
  unsigned jobs = 1;
  auto* batch = app.add_subcommand("batch", "Reports for a JSON-lines corpus");
  batch->add_option("corpus", input, "Corpus, one knot object per line")->required();
  batch->add_option("--out", out_path, "Output JSON-lines file")->required();
  batch->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string tsv_path;
  auto* profile = app.add_subcommand("profile", "Tab-separated signature step table");
  profile->add_option("input", input, "Knot file")->required();
  profile->add_option("--tsv", tsv_path, "Output TSV file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*invariants) {
      std::cout << knotsig::knot_report(load_knot(input)).dump(2) << '\n';
    } else if (*at) {
      const auto a = load_knot(input);
      const knotsig::CirclePoint omega(knotsig::parse_rational(x_text),
                                       lower ? knotsig::Half::Lower : knotsig::Half::Upper);
      const auto in = knotsig::levine_tristram_at(a, omega);
      std::cout << "x " << knotsig::to_string(omega.x()) << '\n'
                << "half " << knotsig::to_string(omega.half()) << '\n'
                << "field_D " << omega.field() << '\n'
                << "rank " << in.rank << '\n'
                << "signature " << in.signature << '\n';
    } else if (*pretzel) {
      std::cout << knotsig::pretzel_report(params[0], params[1], params[2]).dump(2) << '\n';
    } else if (*batch) {
      const auto corpus = knotsig::parse_corpus(read_file(input));
      write_file(out_path, knotsig::run_batch(corpus, jobs));
    } else if (*profile) {
      write_file(tsv_path, knotsig::profile_tsv(load_knot(input)));
    }
  } catch (const knotsig::Error& e) {
    std::cerr << "knotsig: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
