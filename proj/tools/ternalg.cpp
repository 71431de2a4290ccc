// Command-line front end: check, derive and catalog.
// Exit codes: 0 pass, 1 failed check or builder precondition, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ternalg/catalog.hpp"
#include "ternalg/driver.hpp"
#include "ternalg/io.hpp"

using namespace ternalg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct InputError {
  std::string message;
};

struct Common {
  std::vector<std::string> inputs;
  std::string output;
  std::size_t max_dim = 0;
  bool complete_skew = false;
  RunOptions run;
};

unsigned default_jobs() {
  const char* env = std::getenv("TERNALG_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024) throw Error(Errc::ParseError, "TERNALG_JOBS must be a positive integer");
  return static_cast<unsigned>(v);
}

std::vector<Document> load(const Common& c) {
  if (c.max_dim != 0) set_dimension_cap(c.max_dim);
  std::vector<Document> docs;
  for (const auto& path : c.inputs) {
    CompletionLog log;
    try {
      docs.push_back(parse_document(read_file(path), ParseOptions{c.complete_skew}, &log));
    } catch (const Error& e) {
      throw InputError{path + ": " + e.what()};
    }
    for (const auto& line : log) std::cerr << path << ": " << line << "\n";
  }
  return docs;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

int precondition_failure(const Error& e, const CheckReport* report) {
  Json j = Json::object();
  j["error"] = std::string(errc_name(e.code()));
  j["message"] = e.what();
  if (report) j["report"] = report_to_json(*report);
  std::cout << j.dump(2) << "\n";
  std::cerr << "error: " << e.what() << "\n";
  return kExitFail;
}

bool is_builder_precondition(Errc code) {
  switch (code) {
    case Errc::SingularMatrix:
    case Errc::NotATrace:
    case Errc::NotRelativeRB:
    case Errc::NotRotaBaxter:
    case Errc::NotNijenhuis:
    case Errc::NotCoherent:
    case Errc::NotSkew:
    case Errc::NotSymplectic:
      return true;
    default:
      return false;
  }
}

void add_common(CLI::App* cmd, Common& c, bool need_output) {
  cmd->add_option("-o,--output", c.output, need_output ? "Output path" : "Write the report here instead of stdout");
  cmd->add_option("--max-dim", c.max_dim, "Dimension cap for inputs (default 16)");
  cmd->add_flag("--complete-skew", c.complete_skew, "Fill alternating orientations of listed bracket entries");
  cmd->add_option("--map", c.run.map, "Name of the map block to use (default: first)");
  cmd->add_option("--max-counterexamples", c.run.check.max_counterexamples, "Counterexamples to keep")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", c.run.check.jobs, "Worker threads for tuple enumeration (env TERNALG_JOBS)")
      ->check(CLI::Range(1u, 1024u));
  cmd->add_flag("--timing", c.run.check.timing, "Include wall-clock seconds in reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker and builder for ternary F-manifold algebras and related structures"};
  app.require_subcommand(1);

  Common check_opts, derive_opts;
  std::string kind, construction, emit_name, emit_out;

  try {
    check_opts.run.check.jobs = derive_opts.run.check.jobs = default_jobs();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* check = app.add_subcommand("check", "Run a checker on JSON documents and print a report");
  check->add_option("--kind", kind, "Structure, representation or operator kind")->required();
  check->add_flag("--rep", check_opts.run.rep, "Check the document's rep block against a representation kind");
  check->add_option("inputs", check_opts.inputs, "Input documents")->required()->check(CLI::ExistingFile);
  add_common(check, check_opts, false);

  auto* derive = app.add_subcommand("derive", "Build a new document from inputs");
  derive->add_option("construction", construction, "Construction name")->required();
  derive->add_option("inputs", derive_opts.inputs, "Input documents")->required()->check(CLI::ExistingFile);
  derive->add_option("--anchor", derive_opts.run.anchor, "fix-slot anchor: basis index or comma-separated coords");
  add_common(derive, derive_opts, true);

  auto* cat = app.add_subcommand("catalog", "List or emit built-in documents");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List catalog names");
  auto* emit_cmd = cat->add_subcommand("emit", "Write a catalog document");
  emit_cmd->add_option("name", emit_name, "Catalog name")->required();
  emit_cmd->add_option("-o,--output", emit_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*check) {
      const auto docs = load(check_opts);
      const CheckReport report = run_check(kind, docs, check_opts.run);
      emit(check_opts.output, serialize_report(report));
      return report.pass ? kExitPass : kExitFail;
    }
    if (*derive) {
      const auto docs = load(derive_opts);
      const Document out = run_derive(construction, docs, derive_opts.run);
      emit(derive_opts.output, serialize_document(out));
      return kExitPass;
    }
    if (*list) {
      for (const auto& e : catalog()) std::cout << e.name << "\t" << e.summary << "\n";
      return kExitPass;
    }
    if (*emit_cmd) {
      emit(emit_out, serialize_document(catalog_entry(emit_name).build()));
      return kExitPass;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    return precondition_failure(e, &e.report());
  } catch (const Error& e) {
    if (is_builder_precondition(e.code())) return precondition_failure(e, nullptr);
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
