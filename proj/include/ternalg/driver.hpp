#pragma once

#include <string>
#include <vector>

#include "ternalg/document.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

struct RunOptions {
  CheckOptions check;
  /// Interpret the check kind as a representation kind.
  bool rep = false;
  /// Map to use from the document; empty selects the first.
  std::string map;
  /// Anchor for fix-slot: a basis index ("3") or comma-separated coordinates ("0,0,0,1").
  std::string anchor;
};

/// Structure kinds plus coherence, trace, induced-condition, relative-rb(-comm/-3lie),
/// nijenhuis, cocycle, symplectic and homomorphism.
std::vector<std::string> check_kinds();
/// Representation kinds accepted with `rep`.
std::vector<std::string> rep_check_kinds();
/// direct-sum, tensor, fix-slot, trace-induce, semidirect, dual-rep, induce-pre, deform,
/// lift-nijenhuis, symplectic-pre, subadjacent, induced-rep.
std::vector<std::string> derive_names();

/// Runs one checker on the documents. Throws UnknownName for an unknown kind.
CheckReport run_check(const std::string& kind, const std::vector<Document>& docs, const RunOptions& options = {});
/// Runs one builder. Builders with hypotheses throw PreconditionError when they fail.
Document run_derive(const std::string& construction, const std::vector<Document>& docs,
                    const RunOptions& options = {});

}  // namespace ternalg
