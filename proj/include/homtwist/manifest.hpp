#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homtwist/gallery.hpp"

namespace homtwist {

enum class Expect { Pass, Fail, Any };
std::string_view to_string(Expect e);

/// A named object: either explicit structure constants or a gallery bundle
/// whose members are addressed as "<name>.<member>".
struct ObjectDef {
  std::string name;
  Object value;
  std::string gallery;  // non-empty for gallery entries
  GalleryParams params;

  bool is_gallery() const { return !gallery.empty(); }
};

/// One check or construction. Constructions bind their output to `bind`
/// (several outputs bind as "<bind>.<member>").
struct Task {
  std::string verb;
  std::vector<std::string> args;
  GalleryParams params;  // scalar parameters, e.g. q for clifford
  std::string bind;
  Expect expect = Expect::Pass;
};

struct Manifest {
  std::vector<ObjectDef> objects;
  std::vector<Task> tasks;
};

/// Parses manifest JSON. Malformed JSON and schema violations throw
/// SyntaxError (with line and column for JSON errors); bad literals throw
/// MalformedRational / ZeroDenominator; unknown kinds, verbs or references
/// throw UnknownName; repeated names throw DuplicateName; inconsistent
/// dimensions throw DimensionMismatch.
Manifest parse_manifest(std::string_view text);
std::string serialize_manifest(const Manifest& m);
bool operator==(const Manifest& a, const Manifest& b);

struct RunResult {
  int exit_code = 0;  // 0 all expectations met, 1 some expectation missed
  std::string report;
};

/// Executes tasks in order. Wiring errors (unknown member, wrong kind,
/// dimension mismatch) propagate as Error; the CLI maps them to exit 3.
RunResult run_manifest(const Manifest& m);

/// Basis-pair product table of an algebra, row = left factor. Tasks are
/// evaluated first so constructed names are addressable.
std::string product_table(const Manifest& m, const std::string& name);
std::string product_table(const HomAlgebra& a);

/// Verbs accepted in tasks, with their arity.
std::vector<std::pair<std::string, std::size_t>> manifest_verbs();

/// Exit code for an error escaping parse (2) or evaluation (3).
int exit_code_for(const Error& e, bool during_parse);

/// Parse and run manifest text the way `homtwist check` does.
struct CheckOutcome {
  int exit_code = 0;
  std::string output;
};
CheckOutcome check_manifest_text(std::string_view text);

}  // namespace homtwist
