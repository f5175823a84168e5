// Command-line front end: classify vector and point sets, construct
// extensions, run the exhaustive theorem sweeps, and verify the
// symmetric-group corollaries. One JSON document in, one JSON document out.
//
// Exit codes: 0 decided, 2 input error, 3 budget exceeded,
// 4 hypotheses inapplicable, 5 violation (conclusion or oracle discrepancy).

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "permext/io.hpp"
#include "permext/permext.hpp"

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInapplicable = 4;
constexpr int kExitViolation = 5;

using permext::io::json;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

permext::Vector parse_seed(const permext::FieldSpec& field, std::size_t dim,
                           const std::string& text) {
  std::vector<permext::Scalar> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    coords.push_back(permext::Scalar::parse(field, token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coords.size() != dim)
    throw permext::ParseError("--seed: expected " + std::to_string(dim) + " coordinates");
  return permext::Vector(field, std::move(coords));
}

int run_classify_linear(const std::string& path, const std::optional<std::string>& field) {
  const auto doc = permext::io::load_input_document(path, field);
  if (doc.vectors.empty()) throw permext::ParseError(path + ": document has no \"vectors\"");
  const permext::VectorSet xs(doc.field, doc.dim, doc.vectors);
  emit(permext::io::classification_document(permext::classify_linear(xs)));
  return kExitDecided;
}

int run_classify_projective(const std::string& path, const std::optional<std::string>& field) {
  const auto doc = permext::io::load_input_document(path, field);
  if (doc.points.empty()) throw permext::ParseError(path + ": document has no \"points\"");
  const permext::ProjSet xs(doc.field, doc.dim, doc.points);
  emit(permext::io::classification_document(permext::classify_projective(xs)));
  return kExitDecided;
}

int run_extend(const std::string& path, bool projective,
               const std::optional<std::string>& field) {
  const auto doc = permext::io::load_input_document(path, field);
  if (!doc.permutation.has_value())
    throw permext::ParseError(path + ": document has no \"permutation\"");
  if (projective) {
    if (doc.points.empty()) throw permext::ParseError(path + ": document has no \"points\"");
    const permext::ProjSet xs(doc.field, doc.dim, doc.points);
    const auto a = permext::extend_permutation_projective(xs, *doc.permutation);
    std::optional<permext::Matrix> rep;
    if (a.has_value()) rep = a->representative();
    emit(permext::io::extension_document(rep));
  } else {
    if (doc.vectors.empty()) throw permext::ParseError(path + ": document has no \"vectors\"");
    const permext::VectorSet xs(doc.field, doc.dim, doc.vectors);
    emit(permext::io::extension_document(permext::extend_permutation_linear(xs, *doc.permutation)));
  }
  return kExitDecided;
}

int run_oracle_verify(int theorem, std::size_t n, std::int64_t p, std::size_t max_size,
                      std::uint64_t budget, unsigned workers) {
  permext::SearchBudget b;
  b.max_group_order = budget;
  b.workers = workers;
  const permext::SweepReport report = theorem == 1
                                          ? permext::exhaustive_theorem1_check(n, p, max_size, b)
                                          : permext::exhaustive_theorem2_check(n, p, max_size, b);
  emit(permext::io::sweep_report_document(report));
  std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
  return report.discrepancies.empty() ? kExitDecided : kExitViolation;
}

int run_verify_corollary(const std::string& path, int which, std::size_t m,
                         const std::optional<std::string>& seed_text,
                         const std::optional<std::string>& field) {
  const auto doc = permext::io::load_input_document(path, field);
  if (doc.generators.empty())
    throw permext::ParseError(path + ": document has no \"generators\"");
  const permext::MatrixGroupGens gens(doc.field, doc.dim, doc.generators);

  permext::Vector seed = permext::Vector::unit(doc.field, doc.dim, 0);
  if (seed_text.has_value())
    seed = parse_seed(doc.field, doc.dim, *seed_text);
  else if (doc.seed.has_value())
    seed = *doc.seed;

  const permext::CorollaryReport report =
      which == 1 ? permext::verify_corollary1(gens, m, seed)
                 : permext::verify_corollary2(gens, m, permext::ProjPoint(seed));
  emit(permext::io::corollary_report_document(report));
  if (!report.hypotheses_ok) return kExitInapplicable;
  return report.conclusions_ok ? kExitDecided : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extendability of permutations on vector and projective point sets"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::string> field_override;
  bool projective = false;
  int theorem = 1;
  std::size_t n_dim = 2;
  std::int64_t p_mod = 2;
  std::size_t max_size = 6;
  std::uint64_t budget = 100'000'000;
  unsigned workers = 1;
  int which = 1;
  std::size_t degree = 2;
  std::optional<std::string> seed_text;

  auto add_field_flag = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_override, "field override, \"Q\" or \"GF(p)\"");
  };

  auto* classify_linear = app.add_subcommand("classify-linear", "classify a vector set");
  classify_linear->add_option("file", file, "input JSON document")->required();
  add_field_flag(classify_linear);

  auto* classify_projective =
      app.add_subcommand("classify-projective", "classify a projective point set");
  classify_projective->add_option("file", file, "input JSON document")->required();
  add_field_flag(classify_projective);

  auto* extend = app.add_subcommand("extend", "construct an extension of a permutation");
  extend->add_option("file", file, "input JSON document")->required();
  extend->add_flag("--projective", projective, "extend on points instead of vectors");
  add_field_flag(extend);

  auto* oracle = app.add_subcommand("oracle-verify", "exhaustively certify a theorem");
  oracle->add_option("--theorem", theorem, "1 (linear) or 2 (projective)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  oracle->add_option("--n", n_dim, "dimension")->required();
  oracle->add_option("--p", p_mod, "prime modulus")->required();
  oracle->add_option("--max-size", max_size, "largest subset size (<= 6)");
  oracle->add_option("--budget", budget, "largest admissible group order");
  oracle->add_option("--workers", workers, "worker threads for the sweep");

  auto* corollary = app.add_subcommand("verify-corollary", "verify a symmetric matrix group");
  corollary->add_option("file", file, "input JSON document with generators")->required();
  corollary->add_option("--which", which, "1 (linear) or 2 (projective)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  corollary->add_option("--m", degree, "claimed symmetric degree")->required();
  corollary->add_option("--seed", seed_text, "orbit seed, comma-separated scalars");
  add_field_flag(corollary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (app.got_subcommand(classify_linear)) return run_classify_linear(file, field_override);
    if (app.got_subcommand(classify_projective))
      return run_classify_projective(file, field_override);
    if (app.got_subcommand(extend)) return run_extend(file, projective, field_override);
    if (app.got_subcommand(oracle))
      return run_oracle_verify(theorem, n_dim, p_mod, max_size, budget, workers);
    if (app.got_subcommand(corollary))
      return run_verify_corollary(file, which, degree, seed_text, field_override);
  } catch (const permext::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const permext::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const permext::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
