// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nearby/cli.hpp"
#include "nearby/document.hpp"
#include "nearby/gluing.hpp"
#include "nearby/kgroup.hpp"
#include "nearby/monodromy.hpp"
#include "nearby/theorems.hpp"
#include "oracles.hpp"

using namespace nearby;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::string first_failure;

  void fail(const std::string& what) {
    if (passed) first_failure = what;
    passed = false;
  }
};

int report(int id, const std::string& title, const Outcome& o) {
  std::cout << "criterion " << id << " [" << title << "]: " << (o.passed ? "PASS" : "FAIL") << "  " << o.summary;
  if (!o.passed) std::cout << "  first failure: " << o.first_failure;
  std::cout << std::endl;
  return o.passed ? 0 : 1;
}

std::string seed_tag(std::uint64_t seed) { return "seed " + std::to_string(seed); }

// Corpus shared by criteria 3 and 4: monodromy-filtered random nilpotents.
NilpotentModel random_model(std::uint64_t seed) {
  return NilpotentModel::pure_from_matrix(random_nilpotent(seed + 10000, 8), static_cast<int>(seed % 5) - 2);
}

const std::vector<std::string> kLabels{"A", "B", "C"};

JordanStringModel pure_model(std::uint64_t seed) {
  return generate_model(seed, 4, 5, static_cast<int>(seed % 5) - 1, kLabels);
}

Outcome monodromy_axioms() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t max_dim = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const QMatrix n = random_nilpotent(seed, 8);
    max_dim = std::max(max_dim, n.rows());
    const int c = static_cast<int>(seed % 7) - 3;
    if (!oracle::deligne_axioms(oracle::read(n), oracle::read(monodromy_filtration(n, c)), c))
      o.fail(seed_tag(seed));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) o.fail("runtime " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << "1000 matrices, dim <= " << max_dim << ", " << secs << " s";
  o.summary = s.str();
  return o;
}

Outcome jordan_oracle() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t cases = 0;
  auto run_case = [&](const std::vector<std::size_t>& sizes, int c) {
    ++cases;
    const auto f = monodromy_filtration(oracle::to_qmatrix(oracle::jordan(sizes)), c);
    if (f.graded_dims() != oracle::jordan_graded_dims(sizes, c)) {
      o.fail("graded dims for case " + std::to_string(cases));
      return;
    }
    const auto weights = oracle::jordan_weights(sizes, c);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      QVector e(weights.size());
      e[i] = 1;
      if (!f.at(weights[i]).contains(e) || f.at(weights[i] - 1).contains(e))
        o.fail("weight of basis vector " + std::to_string(i) + " in case " + std::to_string(cases));
    }
  };
  for (std::size_t s = 1; s <= 6; ++s)
    for (int c = -2; c <= 2; ++c) run_case({s}, c);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::size_t> sizes(1 + rng() % 4);
    for (auto& s : sizes) s = 1 + rng() % 6;
    run_case(sizes, static_cast<int>(rng() % 7) - 3);
  }
  o.summary = std::to_string(cases) + " block configurations, block sizes <= 6";
  return o;
}

Outcome monodromy_sequence() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto m = random_model(seed);
    const auto r = verify_monodromy_sequence(m.space(), m.monodromy());
    bool positions = r.positions.size() == 4;
    for (const auto& p : r.positions) positions = positions && p.exact;
    if (!positions || !r.passed) o.fail(seed_tag(seed));
  }
  o.summary = "1000 models, exact at 4 positions, all maps strict";
  return o;
}

Outcome intermediate_stalks() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto m = random_model(seed);
    const auto r = verify_intermediate_stalks(m.space(), m.monodromy());
    const auto& k = r.kernel_side;
    const auto& c = r.cokernel_side;
    const std::size_t rk = rank(m.matrix());
    const bool ok = r.passed && k.subspace_matches && k.filtration_matches && k.complementary_vanishes &&
                    c.subspace_matches && c.filtration_matches && c.complementary_vanishes &&
                    k.dim == m.dim() - rk && c.dim == m.dim() - rk;
    if (!ok) o.fail(seed_tag(seed));
  }
  o.summary = "1000 models, kernel and cokernel sides";
  return o;
}

Outcome primitive_and_class() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto strings = pure_model(seed);
    const auto m = strings.to_model();
    const auto d = primitive_decomposition(m);
    bool rows_ok = d.dims_match && d.labels_match;
    for (const auto& row : d.rows) rows_ok = rows_ok && row.graded_dim == row.predicted_dim;
    const auto gk = graded_kernel(m);
    if (!rows_ok || kclass_of_space(m.space()) != kclass_psi_from_kernel(gk.grading, m.n())) o.fail(seed_tag(seed));
  }
  o.summary = "1000 pure models, per-weight dimensions and classes";
  return o;
}

Outcome independence() {
  Outcome o;
  std::size_t distinct = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto a = pure_model(seed).to_model();
    const auto b = generate_scrambled(a, seed);
    const auto r = verify_kclass_independence(a, b);
    if (r.status != IndependenceStatus::Equal || r.kernel_a != r.kernel_b || r.class_a != r.class_b)
      o.fail("scrambled " + seed_tag(seed));

    // Neighbouring seeds of the same weight usually have different kernels.
    const auto c = pure_model(seed + 5).to_model();
    const auto q = verify_kclass_independence(a, c);
    if (q.kernel_a != q.kernel_b) {
      ++distinct;
      if (q.status != IndependenceStatus::HypothesisNotSatisfied) o.fail("distinct kernels " + seed_tag(seed));
    } else if (q.status != IndependenceStatus::Equal) {
      o.fail("equal kernels " + seed_tag(seed));
    }
  }
  if (distinct == 0) o.fail("no pairs with distinct kernels were generated");
  o.summary = "500 scrambled pairs equal; " + std::to_string(distinct) + " distinct-kernel pairs flagged";
  return o;
}

WeightedSpace random_point(std::mt19937_64& rng, int n) {
  const std::size_t dim = rng() % 3;
  const auto f = WeightFiltration::trivial(dim, n);
  return WeightedSpace(f, LabeledGrading::uniform(f, "P"));
}

Outcome local_invariant_cycles() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t implications = 0, counterexamples = 0;
  auto implication = [&](const DiskModel& dm, int k, const std::string& tag) {
    ++implications;
    const bool exact = verify_local_invariant_cycles(dm, k).exact;
    if (verify_weight_mechanics(dm, k).all_hold() && !exact) o.fail("implication " + tag);
    return exact;
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto strings = pure_model(seed);
    const auto open = generate_scrambled(strings, seed);
    const DiskModel dm(open, random_point(rng, strings.n()), true);
    for (int k : {-1, 0}) {
      if (!implication(dm, k, seed_tag(seed))) o.fail("pure " + seed_tag(seed) + " k=" + std::to_string(k));
    }

    const DiskModel shriek(open, WeightedSpace::zero(), false, Extension::Shriek);
    ++counterexamples;
    if (implication(shriek, -1, "j_! " + seed_tag(seed))) o.fail("j_! exact, " + seed_tag(seed));
    if (verify_weight_mechanics(shriek, -1).holds(WeightClaim::SurjectiveOnLowWeights))
      o.fail("surjectivity on low weights holds for j_!, " + seed_tag(seed));
    implication(shriek, 0, "j_! " + seed_tag(seed));
    const DiskModel star(open, WeightedSpace::zero(), false, Extension::Star);
    for (int k : {-1, 0}) implication(star, k, "j_* " + seed_tag(seed));
  }
  o.summary = "1000 pure (model, k) checks; " + std::to_string(counterexamples) + " j_! counterexamples fail on surjectivity on low weights; " +
              std::to_string(implications) + " implications";
  return o;
}

Outcome cli_round_trip() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "nearby_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t failing_reports = 0;
  auto check_exit = [&](const ModelDocument& doc, const std::string& tag) {
    const auto path = (dir / "doc.json").string();
    std::ofstream(path) << serialize_document(doc);
    std::ostringstream out, err;
    const int code = cli::run({"nearby", "check", path, "--format", "json"}, out, err);
    const auto report = cli::check_document(doc);
    const auto j = nlohmann::json::parse(out.str());
    if (!report.passed()) ++failing_reports;
    if (code != (report.passed() ? cli::kOk : cli::kVerificationFailed) || j["passed"].get<bool>() != report.passed())
      o.fail("exit code " + tag);
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cli::GenOptions opts;
    opts.seed = seed;
    opts.strings = 1 + seed % 4;
    opts.max_length = 1 + seed % 5;
    opts.weight = static_cast<int>(seed % 4) - 1;
    opts.scramble = seed % 2 == 1;
    opts.labels = {"L", "P"};
    const auto doc = cli::generate_document(opts);
    const auto text = serialize_document(doc);
    const auto back = parse_document(text);
    if (!(back == doc) || serialize_document(back) != text) o.fail("round trip " + seed_tag(seed));
    check_exit(doc, seed_tag(seed));

    // A failing companion: same N, everything in one weight.
    const auto m = std::holds_alternative<NilpotentModel>(doc.payload)
                       ? std::get<NilpotentModel>(doc.payload)
                       : std::get<JordanStringModel>(doc.payload).to_model();
    const NilpotentModel flat(WeightedSpace(WeightFiltration::trivial(m.dim(), m.center())), m.n(), m.monodromy());
    check_exit({flat}, "flat " + seed_tag(seed));
  }
  std::filesystem::remove_all(dir);
  o.summary = "100 documents round-trip; 200 check runs, " + std::to_string(failing_reports) + " expected failures";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "monodromy filtration axioms", monodromy_axioms());
  failures += report(2, "Jordan oracle", jordan_oracle());
  failures += report(3, "exact sequence for N", monodromy_sequence());
  failures += report(4, "kernel and cokernel of the intermediate extension", intermediate_stalks());
  failures += report(5, "primitive decomposition and classes", primitive_and_class());
  failures += report(6, "class independence", independence());
  failures += report(7, "local invariant cycles", local_invariant_cycles());
  failures += report(8, "CLI round trip and exit codes", cli_round_trip());
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
