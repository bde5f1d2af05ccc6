// sgclass command-line front end.
//
// Exit codes: 0 success, 1 a check reported FAIL or the oracle found a
// mismatch, 2 usage or parse error, 3 invalid mathematical input,
// 4 certification failure after all retries.

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "sgclass/checks.hpp"
#include "sgclass/families.hpp"
#include "sgclass/oracle.hpp"
#include "sgclass/report.hpp"

namespace fs = std::filesystem;
using namespace sgclass;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kUnknownTheorem:
      return 2;
    case ErrorCode::kHorizonTooSmall:
    case ErrorCode::kBoxTooSmall:
    case ErrorCode::kNotCertified:
      return 4;
    default:
      return 3;
  }
}

struct CheckRow {
  std::string name;
  ValidatorOutcome outcome;
  std::string error;  // set when classification itself failed
};

CheckRow check_one(CheckId id, const SemigroupDocument& doc, const ClassifyOptions& options) {
  CheckRow row{doc.name, {}, {}};
  try {
    const auto report = classify(doc, options);
    row.outcome = run_check(id, report, to_semigroup(doc));
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<CheckRow> check_all(CheckId id, const std::vector<SemigroupDocument>& docs,
                                const ClassifyOptions& options) {
  std::vector<CheckRow> rows(docs.size());
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < docs.size(); i = next++) rows[i] = check_one(id, docs[i], options);
    }));
  }
  for (auto& f : pool) f.get();
  return rows;
}

std::vector<SemigroupDocument> read_corpus(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SemigroupDocument> docs;
  for (const auto& f : files) docs.push_back(read_document(f));
  return docs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of graded affine semigroup rings"};
  app.require_subcommand(1);

  ClassifyOptions options;
  Int max_degree = 0;
  std::string format = "json";
  std::string input;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a semigroup document");
  classify_cmd->add_option("file", input, "Input JSON document")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--max-degree", max_degree, "Degree budget (default adaptive)")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--multiple-bound", options.multiple_bound,
                           "Largest multiple tried in the semi-standard test")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  Int n = 0, k = 0;
  std::string out_path;
  auto* family_cmd = app.add_subcommand("family", "Write the S(n,k) document");
  family_cmd->add_option("--n", n)->required();
  family_cmd->add_option("--k", k)->required();
  family_cmd->add_option("-o,--output", out_path, "Output path")->required();

  std::string check_id;
  std::string corpus_dir;
  std::uint64_t seed = 1;
  CorpusBounds bounds;
  Int family_grid = 0;
  bool use_fixtures = false;
  auto* check_cmd = app.add_subcommand("check", "Run a theorem validator over a set of instances");
  check_cmd->add_option("theorem", check_id, "3.5 3.6 3.7 5.1 5.3 6.1 6.2 6.3")->required();
  auto* corpus_opt = check_cmd->add_option("--corpus", corpus_dir, "Directory of JSON documents")
                         ->check(CLI::ExistingDirectory);
  auto* seed_opt = check_cmd->add_option("--seed", seed, "Generate a random corpus with this seed");
  check_cmd->add_option("--count", bounds.count, "Corpus size")->needs(seed_opt);
  check_cmd->add_option("--max-coord", bounds.max_coord, "Coordinate bound")->needs(seed_opt);
  check_cmd->add_option("--max-generators", bounds.max_generators, "Generator bound")->needs(seed_opt);
  check_cmd->add_option("--max-gen-degree", bounds.max_degree, "Generator degree bound")->needs(seed_opt);
  auto* grid_opt = check_cmd->add_option("--family-grid", family_grid, "S(n,k) for 2 <= n <= N");
  auto* fix_opt = check_cmd->add_flag("--fixtures", use_fixtures, "Built-in fixture catalog");
  corpus_opt->excludes(seed_opt, grid_opt, fix_opt);
  seed_opt->excludes(grid_opt, fix_opt);
  grid_opt->excludes(fix_opt);

  std::string fixtures_dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the fixture catalog as documents");
  fixtures_cmd->add_option("-o,--output", fixtures_dir, "Output directory")->required();

  std::size_t samples = 1000;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the staircase with direct membership");
  oracle_cmd->add_option("file", input, "Input JSON document")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--samples", samples)->required();
  oracle_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (max_degree > 0) options.max_degree = max_degree;

    if (*classify_cmd) {
      const auto report = classify(read_document(input), options);
      if (format == "json") {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        std::cout << to_text(report);
      }
      return 0;
    }

    if (*family_cmd) {
      write_document(out_path, family_document(n, k));
      return 0;
    }

    if (*fixtures_cmd) {
      fs::create_directories(fixtures_dir);
      for (const auto& f : fixture_catalog()) {
        write_document(fs::path(fixtures_dir) / (f.name + ".json"), f.document);
      }
      return 0;
    }

    if (*check_cmd) {
      const CheckId id = parse_check_id(check_id);
      std::vector<SemigroupDocument> docs;
      if (!corpus_dir.empty()) {
        docs = read_corpus(corpus_dir);
      } else if (*seed_opt) {
        docs = corpus_generate(seed, bounds);
      } else if (family_grid > 0) {
        for (Int nn = 2; nn <= family_grid; ++nn) {
          for (Int kk = 1; kk <= nn + 1; ++kk) docs.push_back(family_document(nn, kk));
        }
      } else if (use_fixtures) {
        for (const auto& f : fixture_catalog()) docs.push_back(f.document);
      } else {
        std::cerr << "check needs one of --corpus, --seed, --family-grid, --fixtures\n";
        return 2;
      }
      const auto rows = check_all(id, docs, options);
      std::size_t pass = 0, fail = 0, vac = 0, err = 0;
      for (const auto& row : rows) {
        if (!row.error.empty()) {
          ++err;
          std::cout << row.name << "\tERROR\t" << row.error << '\n';
          continue;
        }
        switch (row.outcome.verdict) {
          case Verdict::kPass: ++pass; break;
          case Verdict::kFail: ++fail; break;
          case Verdict::kVacuous: ++vac; break;
        }
        std::cout << row.name << '\t' << to_string(row.outcome.verdict) << '\t'
                  << row.outcome.detail << '\n';
      }
      std::cout << check_key(id) << ": " << rows.size() << " instances, " << pass << " PASS, "
                << fail << " FAIL, " << vac << " VACUOUS, " << err << " ERROR\n";
      return fail == 0 && err == 0 ? 0 : 1;
    }

    if (*oracle_cmd) {
      const AffineSemigroup s = to_semigroup(read_document(input));
      const Staircase t = build_certified_staircase(
          s, 4 * (s.max_generator_degree() + static_cast<Int>(s.dim()) + 5));
      const auto result = oracle_compare(s, t, samples, seed);
      std::cout << "samples " << result.samples << ", members " << result.members
                << ", mismatches " << result.mismatches.size() << '\n';
      for (const auto& v : result.mismatches) std::cout << "  mismatch " << v << '\n';
      return result.mismatches.empty() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
