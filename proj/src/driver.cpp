#include "ternalg/driver.hpp"

#include <algorithm>
#include <sstream>

#include "ternalg/constructions.hpp"
#include "ternalg/operators.hpp"
#include "ternalg/representations.hpp"
#include "ternalg/structures.hpp"

namespace ternalg {

namespace {

const std::vector<std::string> kExtraChecks = {
    "coherence",  "trace",     "induced-condition", "relative-rb", "relative-rb-comm", "relative-rb-3lie",
    "nijenhuis",  "cocycle",   "symplectic",        "homomorphism",
};

const std::vector<std::string> kDerive = {
    "direct-sum", "tensor", "fix-slot",       "trace-induce",   "semidirect",  "dual-rep",
    "induce-pre", "deform", "lift-nijenhuis", "symplectic-pre", "subadjacent", "induced-rep",
};

void need_docs(const std::vector<Document>& docs, std::size_t lo, std::size_t hi, const std::string& what) {
  if (docs.size() < lo || docs.size() > hi)
    throw Error(Errc::ArityMismatch, what + " takes " + std::to_string(lo) +
                                         (hi == lo ? "" : "-" + std::to_string(hi)) + " input document(s), got " +
                                         std::to_string(docs.size()));
}

const TraceFunctional& need_trace(const Document& d) {
  if (!d.trace) throw Error(Errc::MissingTensor, "document has no trace block");
  return *d.trace;
}

const Matrix& need_form(const Document& d) {
  if (!d.form) throw Error(Errc::MissingTensor, "document has no form block");
  return *d.form;
}

RepKind rep_kind_alias(const std::string& kind) {
  if (kind == "comm-assoc") return RepKind::CommAssoc;
  if (kind == "3-lie") return RepKind::ThreeLie;
  if (kind == "lie") return RepKind::Lie;
  if (kind == "f-manifold") return RepKind::FManifold;
  if (kind == "ternary-f-manifold") return RepKind::TernaryFManifold;
  return parse_rep_kind(kind);
}

Vec parse_anchor(const std::string& text, std::size_t n) {
  if (text.empty()) throw Error(Errc::ParseError, "fix-slot needs an anchor");
  if (text.find(',') == std::string::npos) {
    std::size_t pos = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != text.size() || idx >= n) throw Error(Errc::ParseError, "anchor index '" + text + "' out of range");
    return Vec::basis(n, idx);
  }
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) coords.push_back(Rational::parse(item));
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::ParseError, std::string("anchor: ") + e.what());
  }
  if (coords.size() != n) throw Error(Errc::ParseError, "anchor needs " + std::to_string(n) + " coordinates");
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = coords[i];
  return v;
}

Document algebra_only(AlgebraBundle a) { return Document{std::move(a), {}, {}, {}, {}}; }

}  // namespace

std::vector<std::string> check_kinds() {
  std::vector<std::string> out;
  for (auto k : all_kinds()) out.emplace_back(kind_name(k));
  out.insert(out.end(), kExtraChecks.begin(), kExtraChecks.end());
  return out;
}

std::vector<std::string> rep_check_kinds() {
  std::vector<std::string> out;
  for (auto k : {RepKind::CommAssoc, RepKind::ThreeLie, RepKind::Lie, RepKind::FManifold, RepKind::TernaryFManifold,
                 RepKind::DualConditions})
    out.emplace_back(rep_kind_name(k));
  return out;
}

std::vector<std::string> derive_names() { return kDerive; }

CheckReport run_check(const std::string& kind, const std::vector<Document>& docs, const RunOptions& options) {
  const CheckOptions& co = options.check;
  if (options.rep) {
    need_docs(docs, 1, 1, "rep check");
    return check_representation(rep_kind_alias(kind), docs[0].representation(), co);
  }
  if (kind == "homomorphism") {
    need_docs(docs, 1, 2, kind);
    const AlgebraBundle& dst = docs.size() == 2 ? docs[1].algebra : docs[0].algebra;
    return check_homomorphism(docs[0].map(options.map), docs[0].algebra, dst, co);
  }
  need_docs(docs, 1, 1, kind);
  const Document& d = docs[0];
  const AlgebraBundle& a = d.algebra;
  if (kind == "coherence") return check_coherence(a, co);
  if (kind == "trace") return check_trace(a, need_trace(d), co);
  if (kind == "induced-condition") return check_induced_condition(a, need_trace(d), co);
  if (kind == "relative-rb") return check_relative_rb(d.map(options.map), d.representation(), co);
  if (kind == "relative-rb-comm") return check_relative_rb_comm(d.map(options.map), d.representation(), co);
  if (kind == "relative-rb-3lie") return check_relative_rb_3lie(d.map(options.map), d.representation(), co);
  if (kind == "nijenhuis") return check_nijenhuis(d.map(options.map), a, co);
  if (kind == "cocycle") return check_cyclic_2cocycle(need_form(d), a, co);
  if (kind == "symplectic") return check_symplectic(need_form(d), a, co);
  return check_axioms(parse_kind(kind), a, co);
}

Document run_derive(const std::string& construction, const std::vector<Document>& docs, const RunOptions& options) {
  const std::string& c = construction;
  if (c == "direct-sum" || c == "tensor") {
    need_docs(docs, 2, 2, c);
    return algebra_only(c == "tensor" ? tensor_with_comm_assoc(docs[0].algebra, docs[1].algebra)
                                      : direct_sum(docs[0].algebra, docs[1].algebra));
  }
  if (std::find(kDerive.begin(), kDerive.end(), c) == kDerive.end())
    throw Error(Errc::UnknownName, "unknown construction '" + c + "'");
  need_docs(docs, 1, 1, c);
  const Document& d = docs[0];
  const AlgebraBundle& a = d.algebra;
  if (c == "fix-slot") {
    const Vec anchor = parse_anchor(options.anchor, a.dim);
    Document out = algebra_only(fix_slot_bracket(a, anchor));
    if (d.rep) out.rep = fix_slot_rep(*d.rep, anchor);
    return out;
  }
  if (c == "trace-induce") return algebra_only(trace_induced(a, need_trace(d)));
  if (c == "semidirect") return algebra_only(semidirect(d.representation()));
  if (c == "dual-rep") {
    Document out = algebra_only(a);
    out.rep = dual_rep(d.representation());
    return out;
  }
  if (c == "induce-pre") {
    if (d.rep) return algebra_only(induced_pre_fmanifold(d.map(options.map), *d.rep));
    return algebra_only(rb_induced_pre(d.map(options.map), a));
  }
  if (c == "deform") return algebra_only(deform(d.map(options.map), a));
  if (c == "lift-nijenhuis") {
    Document out = algebra_only(semidirect(d.representation()));
    out.maps.push_back({"N", lift_nijenhuis(d.map(options.map), *d.rep)});
    return out;
  }
  if (c == "symplectic-pre") return algebra_only(symplectic_induced_pre(need_form(d), a));
  if (c == "subadjacent") return algebra_only(subadjacent_ternary_fmanifold(a));
  // induced-rep
  RepBundle r = induced_rep_on_A(d.map(options.map), d.representation());
  Document out = algebra_only(r.algebra);
  out.rep = std::move(r);
  return out;
}

}  // namespace ternalg
