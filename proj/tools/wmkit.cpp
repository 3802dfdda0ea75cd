// Command-line frontend: verify / classify / expand / search / construct /
// survey over the matrix text format. Output is line-oriented plain text and
// byte-identical across runs. Exit codes: 0 for a positive outcome, 1 for a
// negative mathematical outcome or verification failure, 2 for parse/usage
// errors (diagnostic on stderr).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "wmkit/classify.hpp"
#include "wmkit/construct.hpp"
#include "wmkit/errors.hpp"
#include "wmkit/io.hpp"
#include "wmkit/matrix.hpp"
#include "wmkit/search.hpp"
#include "wmkit/survey.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wmkit::FormatError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_verify(const std::string& path) {
  const wmkit::TernaryMatrix a = wmkit::parse_matrix_text(read_file(path));
  const wmkit::VerificationReport report = wmkit::gram_check(a);
  if (report.is_weighing) {
    std::cout << "W(" << a.order() << "," << report.weight << ")\n";
    return 0;
  }
  std::cout << "NOT_WEIGHING\n";
  for (const wmkit::GramDefect& d : report.defects)
    std::cout << "(" << d.row_a << "," << d.row_b << ") " << d.inner << "\n";
  return 1;
}

int run_classify(const std::string& path) {
  const wmkit::TernaryMatrix a = wmkit::parse_matrix_text(read_file(path));
  try {
    std::cout << wmkit::to_string(wmkit::classify_toeplitz_weighing(a)) << "\n";
    return 0;
  } catch (const wmkit::NotToeplitzError&) {
    std::cout << "NOT_TOEPLITZ\n";
  } catch (const wmkit::NotWeighingError&) {
    std::cout << "NOT_WEIGHING\n";
  } catch (const wmkit::MixedSignsError&) {
    std::cout << "MIXED_SIGNS\n";
  }
  return 1;
}

int run_expand(const std::string& kind, const std::string& row_token) {
  const wmkit::RowSpec row = wmkit::parse_rowspec_string(row_token);
  const wmkit::TernaryMatrix a =
      kind == "cw" ? wmkit::expand_circulant(row) : wmkit::expand_negacyclic(row);
  std::cout << wmkit::to_matrix_text(a);
  return 0;
}

int run_search(const std::string& kind, int order, int weight, bool count_only, bool canonical,
               std::optional<std::uint64_t> limit) {
  wmkit::SearchOptions opts;
  opts.count_only = count_only;
  opts.canonical_dedup = canonical;
  opts.limit = limit;
  const wmkit::ShiftRing ring =
      kind == "cw" ? wmkit::ShiftRing::Circulant : wmkit::ShiftRing::Negacyclic;
  const wmkit::SearchResult result = wmkit::search_rows(ring, order, weight, opts);
  if (count_only) {
    std::cout << result.count << "\n";
  } else {
    for (const wmkit::RowSpec& r : result.rows) std::cout << wmkit::to_rowspec_string(r) << "\n";
  }
  return 0;
}

int run_construct_conference(int q) {
  try {
    const wmkit::ConferenceWitness witness = wmkit::negacyclic_conference(q);
    std::cout << "# NW(" << q + 1 << "," << q << ") first_row="
              << wmkit::to_rowspec_string(witness.row) << "\n"
              << wmkit::to_matrix_text(wmkit::expand_negacyclic(witness.row));
    return 0;
  } catch (const wmkit::NotOddPrimePowerError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_survey(int max_order) {
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "n\tpredicted\tcw\tnw\tverdict\twitness\n";
  for (const wmkit::SurveyRow& row : wmkit::conference_survey(max_order)) {
    std::cout << row.order << "\t" << yn(row.predicted) << "\t" << yn(row.cw_found) << "\t"
              << yn(row.nw_found) << "\t" << (row.exists ? "exists" : "not_exists") << "\t"
              << (row.witness ? wmkit::to_rowspec_string(*row.witness) : "-") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighing matrix toolkit: circulant / negacyclic / Toeplitz structure"};
  app.require_subcommand(1);

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "check AA^T = kI for a matrix file");
  verify_cmd->add_option("file", verify_path, "matrix text file")->required();

  std::string classify_path;
  auto* classify_cmd =
      app.add_subcommand("classify", "classify a constant-diagonal weighing matrix");
  classify_cmd->add_option("file", classify_path, "matrix text file")->required();

  std::string expand_kind;
  std::string expand_row;
  auto* expand_cmd = app.add_subcommand("expand", "expand a generator row to a full matrix");
  expand_cmd->add_option("--kind", expand_kind, "cw (circulant) or nw (negacyclic)")
      ->required()
      ->check(CLI::IsMember({"cw", "nw"}));
  expand_cmd->add_option("--row", expand_row, "rowspec over {+,-,0}, e.g. \"0++-\"")->required();

  std::string search_kind;
  int search_order = 0;
  int search_weight = 0;
  bool search_count_only = false;
  bool search_canonical = false;
  std::uint64_t search_limit = 0;
  auto* search_cmd = app.add_subcommand("search", "enumerate weighing generator rows");
  search_cmd->add_option("--kind", search_kind, "cw or nw")
      ->required()
      ->check(CLI::IsMember({"cw", "nw"}));
  search_cmd->add_option("--order", search_order, "matrix order n")->required();
  search_cmd->add_option("--weight", search_weight, "weight k")->required();
  search_cmd->add_flag("--count-only", search_count_only, "print the count instead of rows");
  search_cmd->add_flag("--canonical", search_canonical, "one representative per orbit");
  auto* limit_opt = search_cmd->add_option("--limit", search_limit, "stop after this many rows")
                        ->check(CLI::PositiveNumber);

  auto* construct_cmd = app.add_subcommand("construct", "build verified matrices");
  construct_cmd->require_subcommand(1);
  int conference_q = 0;
  auto* conference_cmd =
      construct_cmd->add_subcommand("conference", "negacyclic conference matrix NW(q+1,q)");
  conference_cmd->add_option("-q", conference_q, "odd prime power weight q")->required();

  int survey_max = 14;
  auto* survey_cmd = app.add_subcommand("survey", "conference existence table for n = 3..N");
  survey_cmd->add_option("--max-n", survey_max, "largest order (default 14)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify_cmd) return run_verify(verify_path);
    if (*classify_cmd) return run_classify(classify_path);
    if (*expand_cmd) return run_expand(expand_kind, expand_row);
    if (*search_cmd)
      return run_search(search_kind, search_order, search_weight, search_count_only,
                        search_canonical,
                        limit_opt->count() > 0 ? std::optional<std::uint64_t>(search_limit)
                                               : std::nullopt);
    if (*construct_cmd) return run_construct_conference(conference_q);
    if (*survey_cmd) return run_survey(survey_max);
  } catch (const wmkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
