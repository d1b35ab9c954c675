#include "nearby/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nearby/error.hpp"
#include "nearby/kgroup.hpp"

namespace nearby::cli {

using nlohmann::json;

namespace {

json dims_to_json(const std::map<int, std::size_t>& dims) {
  json out = json::object();
  for (const auto& [k, d] : dims) out[std::to_string(k)] = d;
  return out;
}

json kclass_to_json(const KClass& c) {
  json terms = json::array();
  for (const auto& [label, coefficient] : c.terms())
    terms.push_back({{"label", label.label}, {"twist", label.twist}, {"coefficient", coefficient}});
  return {{"class", to_string(c)}, {"terms", std::move(terms)}};
}

std::string hard_lefschetz_detail(const HardLefschetzReport& hl) {
  for (const auto& s : hl.steps) {
    if (!s.bijective)
      return "N^" + std::to_string(s.k) + " not bijective (" + std::to_string(s.source_dim) + " -> " +
             std::to_string(s.target_dim) + (s.detail.empty() ? "" : "; " + s.detail) + ")";
  }
  if (!hl.respects_weights) return "N does not send W_k into W_{k-2}";
  if (!hl.matches_monodromy_filtration) return "W is not the monodromy filtration centered at n-1";
  return {};
}

void check_nilpotent(Report& r, const NilpotentModel& m) {
  const int c = m.center();
  r.data["n"] = m.n();
  r.data["dim"] = m.dim();
  r.data["graded_dims"] = dims_to_json(m.space().filtration().graded_dims());

  const auto f = monodromy_filtration(m.matrix(), c);
  r.add("monodromy_filtration", satisfies_monodromy_axioms(m.matrix(), f, c));

  const auto hl = verify_hard_lefschetz(m);
  r.add("hard_lefschetz", hl.passed, hard_lefschetz_detail(hl));
  // Everything below needs a pure model.
  if (!hl.passed) return;

  const auto gk = graded_kernel(m);
  r.add("graded_kernel", true, to_string(gk.grading));

  const auto pd = primitive_decomposition(m);
  r.add("primitive_decomposition_dims", pd.dims_match);
  r.add("primitive_decomposition_labels", pd.labels_match,
        pd.labels_match ? "" : "predicted " + to_string(pd.predicted_grading));

  const KClass direct = kclass_of_space(m.space());
  const KClass assembled = kclass_psi_from_kernel(gk.grading, m.n());
  r.add("kclass_from_kernel", direct == assembled,
        direct == assembled ? "" : to_string(direct) + " vs " + to_string(assembled));
  r.data["class"] = to_string(direct);

  const auto seq = verify_monodromy_sequence(m.space(), m.monodromy());
  std::string dims;
  for (auto d : seq.dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  r.add("monodromy_sequence", seq.passed, "dims " + dims + (seq.exact ? "" : "; not exact") + (seq.strict ? "" : "; not strict"));

  const auto prop = verify_intermediate_stalks(m.space(), m.monodromy());
  r.add("intermediate_stalk_kernel", prop.kernel_side.subspace_matches && prop.kernel_side.filtration_matches &&
                               prop.kernel_side.complementary_vanishes,
        prop.kernel_side.detail);
  r.add("intermediate_stalk_cokernel", prop.cokernel_side.subspace_matches && prop.cokernel_side.filtration_matches &&
                                 prop.cokernel_side.complementary_vanishes,
        prop.cokernel_side.detail);
}

void check_gluing(Report& r, const GluingDatum& g) {
  const auto psi = psi_u(g);
  r.data["psi_dim"] = g.psi().dim();
  r.data["phi_dim"] = g.phi().dim();
  const auto istar = i_upper_star(g);
  const auto ishriek = i_upper_shriek(g);
  r.data["i_star_cohomology"] = {{"-1", istar.cohomology(-1).dim()}, {"0", istar.cohomology(0).dim()}};
  r.data["i_shriek_cohomology"] = {{"0", ishriek.cohomology(0).dim()}, {"1", ishriek.cohomology(1).dim()}};

  r.add("can_strict", check_strict(g.can(), g.psi(), g.phi()));
  r.add("var_strict", check_strict(g.var(), g.phi(), g.psi()));
  const auto seq = verify_monodromy_sequence(psi.space, psi.monodromy);
  r.add("monodromy_sequence", seq.passed, (seq.exact ? "" : "not exact; ") + std::string(seq.strict ? "" : "not strict"));
  const auto prop = verify_intermediate_stalks(psi.space, psi.monodromy);
  r.add("intermediate_stalks", prop.passed, prop.kernel_side.detail + prop.cokernel_side.detail);
}

void check_disk(Report& r, const DiskModel& dm, std::optional<int> only_k) {
  r.data["n"] = dm.n();
  r.data["pure"] = dm.pure();
  r.data["extension"] = std::string(to_string(dm.extension()));
  std::vector<int> ks = only_k ? std::vector<int>{*only_k} : std::vector<int>{-1, 0};
  for (int k : ks) {
    const std::string tag = "[k=" + std::to_string(k) + "]";
    const auto lic = verify_local_invariant_cycles(dm, k);
    std::string detail = "image dim " + std::to_string(lic.image.dim()) + ", ker N dim " +
                         std::to_string(lic.kernel_of_n.dim());
    if (!lic.note.empty()) detail += "; " + lic.note;
    r.add("local_invariant_cycles" + tag, lic.exact, detail);
    const auto wm = verify_weight_mechanics(dm, k);
    for (const auto& claim : wm.claims) r.add("weights" + tag + "." + std::string(to_string(claim.claim)), claim.holds, claim.detail);
    r.add("implication" + tag, !wm.all_hold() || lic.exact, "all weight claims hold => exact");
  }
}

NilpotentModel model_of(const ModelDocument& doc) {
  if (const auto* m = std::get_if<NilpotentModel>(&doc.payload)) return *m;
  if (const auto* s = std::get_if<JordanStringModel>(&doc.payload)) return s->to_model();
  throw Error(ErrorCode::Validation, "expected a nilpotent or pure_strings document, got " +
                                         std::string(to_string(doc.kind())));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(std::ostream& out, const Report& r, const std::string& format) {
  if (format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << to_text(r);
  }
}

}  // namespace

Report check_document(const ModelDocument& doc) {
  Report r{"check", std::string(to_string(doc.kind())), {}, json::object()};
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, NilpotentModel>) {
          check_nilpotent(r, payload);
        } else if constexpr (std::is_same_v<T, JordanStringModel>) {
          check_nilpotent(r, payload.to_model());
        } else if constexpr (std::is_same_v<T, GluingDatum>) {
          check_gluing(r, payload);
        } else {
          check_disk(r, payload.model(), std::nullopt);
        }
      },
      doc.payload);
  return r;
}

Report monodromy_report(const ModelDocument& doc, std::optional<int> center) {
  Report r{"monodromy", std::string(to_string(doc.kind())), {}, json::object()};
  QMatrix n;
  int default_center = 0;
  if (const auto* g = std::get_if<GluingDatum>(&doc.payload)) {
    n = g->monodromy();
  } else if (const auto* d = std::get_if<DiskDocument>(&doc.payload)) {
    const auto open = as_nilpotent(d->open);
    n = open.matrix();
    default_center = open.center();
  } else {
    const auto m = model_of(doc);
    n = m.matrix();
    default_center = m.center();
  }
  const int c = center.value_or(default_center);
  const auto f = monodromy_filtration(n, c);
  r.add("axioms", satisfies_monodromy_axioms(n, f, c));
  r.data["center"] = c;
  r.data["graded_dims"] = dims_to_json(f.graded_dims());
  r.data["filtration"] = filtration_to_json(f);
  return r;
}

Report kclass_report(const ModelDocument& doc) {
  Report r{"kclass", std::string(to_string(doc.kind())), {}, json::object()};
  WeightedSpace psi;
  if (const auto* g = std::get_if<GluingDatum>(&doc.payload)) {
    psi = g->psi();
  } else if (const auto* d = std::get_if<DiskDocument>(&doc.payload)) {
    psi = as_nilpotent(d->open).space();
  } else {
    psi = model_of(doc).space();
  }
  const auto c = kclass_of_space(psi);
  r.data = kclass_to_json(c);
  return r;
}

Report independence_report(const ModelDocument& a, const ModelDocument& b) {
  Report r{"independence", std::string(to_string(a.kind())) + "/" + std::string(to_string(b.kind())), {},
           json::object()};
  const auto rep = verify_kclass_independence(model_of(a), model_of(b));
  r.add("kclass_independence", rep.passed(), std::string(to_string(rep.status)));
  r.data["status"] = std::string(to_string(rep.status));
  r.data["kernel_a"] = to_string(rep.kernel_a);
  r.data["kernel_b"] = to_string(rep.kernel_b);
  r.data["class_a"] = to_string(rep.class_a);
  r.data["class_b"] = to_string(rep.class_b);
  if (rep.status != IndependenceStatus::HypothesisNotSatisfied)
    r.data["class_from_kernel"] = to_string(rep.class_from_kernel);
  return r;
}

Report lic_report(const ModelDocument& doc, std::optional<int> k) {
  const auto* d = std::get_if<DiskDocument>(&doc.payload);
  if (!d) throw Error(ErrorCode::Validation, "lic needs a disk document, got " + std::string(to_string(doc.kind())));
  Report r{"lic", "disk", {}, json::object()};
  check_disk(r, d->model(), k);
  return r;
}

ModelDocument generate_document(const GenOptions& opts) {
  const auto model = generate_model(opts.seed, opts.strings, opts.max_length, opts.weight, opts.labels);
  if (opts.scramble) return {generate_scrambled(model, opts.seed)};
  return {model};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of weight and monodromy identities for nearby cycles on the disk", "nearby"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string file, file_b;
  std::optional<int> center, k;
  GenOptions gen;

  auto* check = app.add_subcommand("check", "Run every verifier applicable to a model document");
  check->add_option("file", file)->required();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* mono = app.add_subcommand("monodromy", "Print the monodromy filtration");
  mono->add_option("file", file)->required();
  mono->add_option("--center", center, "Center of the filtration (default n-1)");
  mono->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* kclass = app.add_subcommand("kclass", "Print the Grothendieck class of the nearby-cycles space");
  kclass->add_option("file", file)->required();
  kclass->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated pure model document");
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--strings", gen.strings, "Maximum number of Jordan strings")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--maxlen", gen.max_length, "Maximum string length")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--weight", gen.weight, "Purity weight n");
  gen_cmd->add_option("--labels", gen.labels, "Labels to draw from")->delimiter(',');
  gen_cmd->add_flag("--scramble", gen.scramble, "Conjugate by a random invertible matrix");

  auto* indep = app.add_subcommand("independence", "Compare Grothendieck classes of two pure models");
  indep->add_option("file_a", file)->required();
  indep->add_option("file_b", file_b)->required();
  indep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lic = app.add_subcommand("lic", "Local invariant cycles and weight mechanics on a disk model");
  lic->add_option("file", file)->required();
  lic->add_option("--k", k, "Cohomological degree (default: -1 and 0)");
  lic->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseFailure;
  }

  try {
    if (*gen_cmd) {
      out << serialize_document(generate_document(gen));
      return kOk;
    }
    const ModelDocument doc = parse_document(read_file(file));
    Report report;
    if (*check) {
      report = check_document(doc);
    } else if (*mono) {
      report = monodromy_report(doc, center);
    } else if (*kclass) {
      report = kclass_report(doc);
    } else if (*indep) {
      report = independence_report(doc, parse_document(read_file(file_b)));
    } else {
      report = lic_report(doc, k);
    }
    emit(out, report, format);
    return report.passed() ? kOk : kVerificationFailed;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.is_parse_error() ? kParseFailure : kValidationFailure;
  }
}

}  // namespace nearby::cli
