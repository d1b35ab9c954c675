#include "nearby/document.hpp"

#include <charconv>
#include <limits>

#include "nearby/error.hpp"

namespace nearby {

using nlohmann::json;

std::string_view to_string(DocumentKind k) noexcept {
  switch (k) {
    case DocumentKind::Nilpotent: return "nilpotent";
    case DocumentKind::PureStrings: return "pure_strings";
    case DocumentKind::Gluing: return "gluing";
    case DocumentKind::Disk: return "disk";
  }
  return "unknown";
}

NilpotentModel as_nilpotent(const OpenPart& open) {
  if (const auto* strings = std::get_if<JordanStringModel>(&open)) return strings->to_model();
  return std::get<NilpotentModel>(open);
}

DiskModel DiskDocument::model() const { return DiskModel(as_nilpotent(open), point, pure, extension); }

DocumentKind ModelDocument::kind() const noexcept { return static_cast<DocumentKind>(payload.index()); }

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::Parse, "field " + (path.empty() ? std::string("/") : path) + ": " + message);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing");
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long long integer_at(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long long>();
}

int int_at(const json& v, const std::string& path) {
  const long long x = integer_at(v, path);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) fail(path, "integer out of range");
  return static_cast<int>(x);
}

std::size_t count_at(const json& v, const std::string& path) {
  const long long x = integer_at(v, path);
  if (x < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(x);
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

int weight_key(const std::string& key, const std::string& path) {
  int w = 0;
  const auto* end = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(key.data(), end, w);
  if (ec != std::errc() || ptr != end) fail(path, "weight key '" + key + "' is not an integer");
  return w;
}

Rational rational_at(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (!v.is_string()) fail(path, "expected a rational string \"p\" or \"p/q\"");
  const auto q = parse_rational(v.get<std::string>());
  if (!q) fail(path, "malformed rational '" + v.get<std::string>() + "'");
  return *q;
}

QVector vector_at(const json& v, const std::string& path, std::size_t len) {
  if (!v.is_array()) fail(path, "expected an array");
  if (v.size() != len) fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
  QVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], path + "/" + std::to_string(i)));
  return out;
}

QMatrix matrix_at(const json& v, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!v.is_array()) fail(path, "expected an array of rows");
  if (v.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  std::vector<QVector> out;
  for (std::size_t r = 0; r < rows; ++r) out.push_back(vector_at(v[r], path + "/" + std::to_string(r), cols));
  return QMatrix::from_rows(out, cols);
}

QMatrix square_matrix_at(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of rows");
  return matrix_at(v, path, v.size(), v.size());
}

WeightFiltration filtration_at(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_object()) fail(path, "expected an object mapping weights to basis rows");
  std::vector<FiltrationStep> steps;
  for (const auto& [key, rows] : v.items()) {
    const std::string p = path + "/" + key;
    const int w = weight_key(key, p);
    if (!rows.is_array()) fail(p, "expected an array of basis rows");
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < rows.size(); ++i) basis.push_back(vector_at(rows[i], p + "/" + std::to_string(i), dim));
    steps.push_back({w, Subspace::span(basis, dim)});
  }
  return WeightFiltration(dim, std::move(steps));
}

LabeledGrading grading_at(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object mapping weights to labels");
  LabeledGrading g;
  for (const auto& [key, entries] : v.items()) {
    const std::string p = path + "/" + key;
    const int w = weight_key(key, p);
    if (!entries.is_array()) fail(p, "expected an array of labels");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string ep = p + "/" + std::to_string(i);
      const auto& e = entries[i];
      const std::size_t mult = count_at(field(e, ep, "multiplicity"), ep + "/multiplicity");
      if (mult == 0) fail(ep + "/multiplicity", "must be at least 1");
      g.add(w, {string_at(field(e, ep, "label"), ep + "/label"), int_at(field(e, ep, "twist"), ep + "/twist")}, mult);
    }
  }
  return g;
}

WeightedSpace space_at(const json& v, const std::string& path) {
  const std::size_t dim = count_at(field(v, path, "dim"), path + "/dim");
  auto f = filtration_at(field(v, path, "filtration"), path + "/filtration", dim);
  if (const json* g = optional_field(v, "grading")) return WeightedSpace(std::move(f), grading_at(*g, path + "/grading"));
  return WeightedSpace(std::move(f));
}

NilpotentModel nilpotent_at(const json& j, const std::string& path) {
  const int n = int_at(field(j, path, "n"), path + "/n");
  QMatrix matrix = square_matrix_at(field(j, path, "matrix"), path + "/matrix");
  if (!is_nilpotent(matrix)) throw Error(ErrorCode::NotNilpotent, "field " + path + "/matrix: matrix is not nilpotent");
  const std::size_t dim = matrix.rows();
  const json* f = optional_field(j, "filtration");
  const json* g = optional_field(j, "grading");
  if (!f && !g) return NilpotentModel::pure_from_matrix(matrix, n);
  WeightFiltration filtration =
      f ? filtration_at(*f, path + "/filtration", dim) : monodromy_filtration(matrix, n - 1);
  LabeledGrading grading;
  if (g) {
    grading = grading_at(*g, path + "/grading");
  } else if (auto lefschetz = lefschetz_grading(filtration, n - 1)) {
    grading = std::move(*lefschetz);
  } else {
    grading = LabeledGrading::uniform(filtration);
  }
  return NilpotentModel(WeightedSpace(std::move(filtration), std::move(grading)), n, {std::move(matrix), -1});
}

JordanStringModel strings_at(const json& j, const std::string& path) {
  const int n = int_at(field(j, path, "n"), path + "/n");
  const json& arr = field(j, path, "strings");
  if (!arr.is_array()) fail(path + "/strings", "expected an array");
  std::vector<JordanString> strings;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/strings/" + std::to_string(i);
    strings.push_back({string_at(field(arr[i], p, "label"), p + "/label"), count_at(field(arr[i], p, "length"), p + "/length")});
  }
  return JordanStringModel(std::move(strings), n);
}

Extension extension_at(const json& v, const std::string& path) {
  const std::string s = string_at(v, path);
  if (s == "intermediate") return Extension::Intermediate;
  if (s == "shriek") return Extension::Shriek;
  if (s == "star") return Extension::Star;
  fail(path, "unknown extension '" + s + "'");
}

OpenPart open_at(const json& j, const std::string& path) {
  const std::string kind = string_at(field(j, path, "kind"), path + "/kind");
  if (kind == "nilpotent") return nilpotent_at(j, path);
  if (kind == "pure_strings") return strings_at(j, path);
  fail(path + "/kind", "open part must be 'nilpotent' or 'pure_strings', got '" + kind + "'");
}

json rational_to_json(const Rational& q) { return format_rational(q); }

json grading_to_json(const LabeledGrading& g) {
  json out = json::object();
  for (const auto& [k, piece] : g.entries()) {
    json arr = json::array();
    for (const auto& [label, mult] : piece)
      arr.push_back({{"label", label.label}, {"twist", label.twist}, {"multiplicity", mult}});
    out[std::to_string(k)] = std::move(arr);
  }
  return out;
}

json space_to_json(const WeightedSpace& ws) {
  return {{"dim", ws.dim()}, {"filtration", filtration_to_json(ws.filtration())}, {"grading", grading_to_json(ws.grading())}};
}

json nilpotent_to_json(const NilpotentModel& m) {
  return {{"kind", "nilpotent"},
          {"n", m.n()},
          {"matrix", matrix_to_json(m.matrix())},
          {"filtration", filtration_to_json(m.space().filtration())},
          {"grading", grading_to_json(m.space().grading())}};
}

json strings_to_json(const JordanStringModel& m) {
  json arr = json::array();
  for (const auto& s : m.strings()) arr.push_back({{"label", s.label}, {"length", s.length}});
  return {{"kind", "pure_strings"}, {"n", m.n()}, {"strings", std::move(arr)}};
}

}  // namespace

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json filtration_to_json(const WeightFiltration& f) {
  json out = json::object();
  for (const auto& step : f.steps()) out[std::to_string(step.weight)] = matrix_to_json(step.space.basis());
  return out;
}

ModelDocument document_from_json(const json& j) {
  const std::string kind = string_at(field(j, "", "kind"), "/kind");
  if (kind == "nilpotent") return {nilpotent_at(j, "")};
  if (kind == "pure_strings") return {strings_at(j, "")};
  if (kind == "gluing") {
    WeightedSpace psi = space_at(field(j, "", "psi"), "/psi");
    WeightedSpace phi = space_at(field(j, "", "phi"), "/phi");
    QMatrix can = matrix_at(field(j, "", "can"), "/can", phi.dim(), psi.dim());
    QMatrix var = matrix_at(field(j, "", "var"), "/var", psi.dim(), phi.dim());
    return {GluingDatum(std::move(psi), std::move(phi), {std::move(can), 0}, {std::move(var), -1})};
  }
  if (kind == "disk") {
    DiskDocument disk{open_at(field(j, "", "open"), "/open"), space_at(field(j, "", "point"), "/point"), true,
                      Extension::Intermediate};
    if (const json* p = optional_field(j, "pure")) {
      if (!p->is_boolean()) fail("/pure", "expected a boolean");
      disk.pure = p->get<bool>();
    }
    if (const json* e = optional_field(j, "extension")) disk.extension = extension_at(*e, "/extension");
    disk.model();  // validates purity claims
    return {std::move(disk)};
  }
  fail("/kind", "unknown kind '" + kind + "'");
}

ModelDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                      e.what());
  }
  return document_from_json(j);
}

json to_json(const ModelDocument& doc) {
  return std::visit(
      [](const auto& payload) -> json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, NilpotentModel>) {
          return nilpotent_to_json(payload);
        } else if constexpr (std::is_same_v<T, JordanStringModel>) {
          return strings_to_json(payload);
        } else if constexpr (std::is_same_v<T, GluingDatum>) {
          return {{"kind", "gluing"},
                  {"psi", space_to_json(payload.psi())},
                  {"phi", space_to_json(payload.phi())},
                  {"can", matrix_to_json(payload.can().matrix)},
                  {"var", matrix_to_json(payload.var().matrix)}};
        } else {
          const json open = std::visit(
              [](const auto& o) -> json {
                if constexpr (std::is_same_v<std::decay_t<decltype(o)>, NilpotentModel>) {
                  return nilpotent_to_json(o);
                } else {
                  return strings_to_json(o);
                }
              },
              payload.open);
          return {{"kind", "disk"},
                  {"open", open},
                  {"point", space_to_json(payload.point)},
                  {"pure", payload.pure},
                  {"extension", std::string(to_string(payload.extension))}};
        }
      },
      doc.payload);
}

std::string serialize_document(const ModelDocument& doc) { return to_json(doc).dump(2) + "\n"; }

}  // namespace nearby
