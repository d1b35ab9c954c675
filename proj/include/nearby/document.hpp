#pragma once

// Model documents: one JSON object per file.
//
//   {"kind": "nilpotent", "n": 1,
//    "matrix": [["0", "1"], ["0", "0"]],
//    "filtration": {"-1": [["1", "0"]], "1": [["1", "0"], ["0", "1"]]},   optional
//    "grading": {"-1": [{"label": "pt", "twist": 0, "multiplicity": 1}]}} optional
//
//   {"kind": "pure_strings", "n": 1, "strings": [{"label": "L", "length": 2}]}
//
//   {"kind": "gluing", "psi": SPACE, "phi": SPACE, "can": MATRIX, "var": MATRIX}
//
//   {"kind": "disk", "open": <nilpotent or pure_strings document>, "point": SPACE,
//    "pure": true, "extension": "intermediate" | "shriek" | "star"}
//
// SPACE is {"dim": d, "filtration": {...}, "grading": {...}} with an optional
// grading. Rationals are strings "p" or "p/q"; bare JSON integers are accepted
// on input. A nilpotent document without a filtration gets the monodromy
// filtration centered at n-1; a missing grading gets default labels.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "nearby/gluing.hpp"
#include "nearby/monodromy.hpp"
#include "nearby/theorems.hpp"

namespace nearby {

enum class DocumentKind { Nilpotent, PureStrings, Gluing, Disk };

std::string_view to_string(DocumentKind k) noexcept;

using OpenPart = std::variant<NilpotentModel, JordanStringModel>;

NilpotentModel as_nilpotent(const OpenPart& open);

struct DiskDocument {
  OpenPart open;
  WeightedSpace point;
  bool pure = true;
  Extension extension = Extension::Intermediate;

  // Throws NotPure (see DiskModel).
  DiskModel model() const;

  friend bool operator==(const DiskDocument&, const DiskDocument&) = default;
};

struct ModelDocument {
  std::variant<NilpotentModel, JordanStringModel, GluingDatum, DiskDocument> payload;

  DocumentKind kind() const noexcept;
  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

// Throws Error(Parse) with line/column or a JSON-pointer field path, and the
// library's validation errors when the content violates an invariant.
ModelDocument parse_document(std::string_view text);
ModelDocument document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ModelDocument& doc);
std::string serialize_document(const ModelDocument& doc);

// Shared by reports.
nlohmann::json matrix_to_json(const QMatrix& m);
nlohmann::json filtration_to_json(const WeightFiltration& f);

}  // namespace nearby
