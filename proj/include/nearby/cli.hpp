#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nearby/document.hpp"
#include "nearby/report.hpp"

namespace nearby::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kParseFailure = 2, kValidationFailure = 3 };

// Every verifier applicable to the document's kind.
Report check_document(const ModelDocument& doc);
// Monodromy filtration of the document's N; center defaults to n-1 (0 for
// gluing documents).
Report monodromy_report(const ModelDocument& doc, std::optional<int> center);
Report kclass_report(const ModelDocument& doc);
Report independence_report(const ModelDocument& a, const ModelDocument& b);
// k defaults to both -1 and 0.
Report lic_report(const ModelDocument& doc, std::optional<int> k);

struct GenOptions {
  std::uint64_t seed = 0;
  std::size_t strings = 3;
  std::size_t max_length = 4;
  int weight = 1;
  bool scramble = false;
  std::vector<std::string> labels{"L"};
};

ModelDocument generate_document(const GenOptions& opts);

// argv-style entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearby::cli
