#include "ternalg/structures.hpp"

#include <algorithm>
#include <array>

namespace ternalg {

namespace {

enum Needs : unsigned { kProduct = 1, kBracket = 2, kBinary = 4 };

using DefectFn = Vec (*)(const AlgebraBundle&, std::span<const Vec>);

struct Identity {
  std::string_view id;
  std::size_t arity;
  unsigned needs;
  DefectFn fn;
};

// Shorthands: m = product, t = ternary bracket, l = binary bracket.
Vec m(const AlgebraBundle& b, const Vec& x, const Vec& y) { return mul(b, x, y); }
Vec t(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z) { return br3(b, x, y, z); }
Vec l(const AlgebraBundle& b, const Vec& x, const Vec& y) { return br2(b, x, y); }

// Pre-structure shorthands.
Vec dm(const AlgebraBundle& b, const Vec& x, const Vec& y) { return mul(b, x, y); }
Vec pb(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z) { return br3(b, x, y, z); }
Vec cb(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z) {
  return pre_cyclic_bracket(b, x, y, z);
}

Vec id_comm(const AlgebraBundle& b, std::span<const Vec> a) { return m(b, a[0], a[1]) - m(b, a[1], a[0]); }

Vec id_assoc(const AlgebraBundle& b, std::span<const Vec> a) {
  return m(b, m(b, a[0], a[1]), a[2]) - m(b, a[0], m(b, a[1], a[2]));
}

Vec id_zinbiel(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x = a[0], &y = a[1], &z = a[2];
  return dm(b, x, dm(b, y, z)) - dm(b, dm(b, y, x), z) - dm(b, dm(b, x, y), z);
}

Vec id_skew2(const AlgebraBundle& b, std::span<const Vec> a) { return l(b, a[0], a[1]) + l(b, a[1], a[0]); }

Vec id_jacobi(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x = a[0], &y = a[1], &z = a[2];
  return l(b, x, l(b, y, z)) + l(b, y, l(b, z, x)) + l(b, z, l(b, x, y));
}

Vec id_skew3(const AlgebraBundle& b, std::span<const Vec> a) {
  return t(b, a[0], a[1], a[2]) + t(b, a[1], a[0], a[2]);
}

Vec id_skew3_23(const AlgebraBundle& b, std::span<const Vec> a) {
  return t(b, a[0], a[1], a[2]) + t(b, a[0], a[2], a[1]);
}

Vec id_fundamental(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &x5 = a[4];
  return t(b, x1, x2, t(b, x3, x4, x5)) - t(b, t(b, x1, x2, x3), x4, x5) -
         t(b, x3, t(b, x1, x2, x4), x5) - t(b, x3, x4, t(b, x1, x2, x5));
}

Vec id_prelie3_skew(const AlgebraBundle& b, std::span<const Vec> a) {
  return pb(b, a[0], a[1], a[2]) + pb(b, a[1], a[0], a[2]);
}

Vec id_prelie3_a(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &x5 = a[4];
  return pb(b, x1, x2, pb(b, x3, x4, x5)) - pb(b, cb(b, x1, x2, x3), x4, x5) -
         pb(b, x3, cb(b, x1, x2, x4), x5) - pb(b, x3, x4, pb(b, x1, x2, x5));
}

Vec id_prelie3_b(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &x5 = a[4];
  return pb(b, cb(b, x1, x2, x3), x4, x5) - pb(b, x1, x2, pb(b, x3, x4, x5)) -
         pb(b, x2, x3, pb(b, x1, x4, x5)) - pb(b, x3, x1, pb(b, x2, x4, x5));
}

Vec id_leibniz_np(const AlgebraBundle& b, std::span<const Vec> a) {
  return leibnizator3(b, a[0], a[1], a[2], a[3]);
}

Vec id_hm2(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x = a[0], &y = a[1], &z = a[2], &w = a[3];
  return leibnizator2(b, m(b, x, y), z, w) - m(b, x, leibnizator2(b, y, z, w)) -
         m(b, y, leibnizator2(b, x, z, w));
}

Vec id_hm3(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &x5 = a[4];
  return leibnizator3(b, m(b, x1, x2), x3, x4, x5) - m(b, x1, leibnizator3(b, x2, x3, x4, x5)) -
         m(b, x2, leibnizator3(b, x1, x3, x4, x5));
}

Vec id_prefm_1(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &x5 = a[4];
  return f1(b, pre_sym_product(b, x1, x2), x3, x4, x5) - dm(b, x1, f1(b, x2, x3, x4, x5)) -
         dm(b, x2, f1(b, x1, x3, x4, x5));
}

Vec id_prefm_11(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &x5 = a[4];
  return f2(b, pre_sym_product(b, x1, x2), x3, x4, x5) - dm(b, x1, f2(b, x2, x3, x4, x5)) -
         dm(b, x2, f2(b, x1, x3, x4, x5));
}

Vec id_prefm_2(const AlgebraBundle& b, std::span<const Vec> a) {
  const Vec &x1 = a[0], &x2 = a[1], &x3 = a[2], &x4 = a[3], &x5 = a[4];
  return dm(b, pre_leibnizator(b, x1, x2, x3, x4), x5) - dm(b, x1, f2(b, x2, x3, x4, x5)) +
         f2(b, x2, x3, x4, dm(b, x1, x5));
}

Vec id_prenp_1(const AlgebraBundle& b, std::span<const Vec> a) { return f1(b, a[0], a[1], a[2], a[3]); }

Vec id_prenp_2(const AlgebraBundle& b, std::span<const Vec> a) { return -f2(b, a[0], a[1], a[2], a[3]); }

constexpr std::array<Identity, 19> kIdentities{{
    {"comm", 2, kProduct, id_comm},
    {"assoc", 3, kProduct, id_assoc},
    {"zinbiel", 3, kProduct, id_zinbiel},
    {"skew2", 2, kBinary, id_skew2},
    {"jacobi", 3, kBinary, id_jacobi},
    {"skew3", 3, kBracket, id_skew3},
    {"skew3-23", 3, kBracket, id_skew3_23},
    {"fundamental", 5, kBracket, id_fundamental},
    {"prelie3-skew", 3, kBracket, id_prelie3_skew},
    {"prelie3-a", 5, kBracket, id_prelie3_a},
    {"prelie3-b", 5, kBracket, id_prelie3_b},
    {"leibniz-np", 4, kProduct | kBracket, id_leibniz_np},
    {"hm2", 4, kProduct | kBinary, id_hm2},
    {"hm3", 5, kProduct | kBracket, id_hm3},
    {"prefm-1", 5, kProduct | kBracket, id_prefm_1},
    {"prefm-11", 5, kProduct | kBracket, id_prefm_11},
    {"prefm-2", 5, kProduct | kBracket, id_prefm_2},
    {"prenp-1", 4, kProduct | kBracket, id_prenp_1},
    {"prenp-2", 4, kProduct | kBracket, id_prenp_2},
}};

const Identity& find_identity(std::string_view id) {
  for (const auto& e : kIdentities)
    if (e.id == id) return e;
  throw Error(Errc::UnknownName, "unknown identity '" + std::string(id) + "'");
}

void require_tensors(const Identity& e, const AlgebraBundle& b) {
  if (e.needs & kProduct) (void)b.prod();
  if (e.needs & kBracket) (void)b.br();
  if (e.needs & kBinary) (void)b.br2();
}

struct KindEntry {
  StructureKind kind;
  std::string_view name;
  std::vector<std::string> ids;
};

const std::vector<KindEntry>& kind_table() {
  static const std::vector<KindEntry> table = {
      {StructureKind::CommAssoc, "comm-assoc", {"comm", "assoc"}},
      {StructureKind::Zinbiel, "zinbiel", {"zinbiel"}},
      {StructureKind::Lie, "lie", {"skew2", "jacobi"}},
      {StructureKind::ThreeLie, "3-lie", {"skew3", "skew3-23", "fundamental"}},
      {StructureKind::ThreePreLie, "3-pre-lie", {"prelie3-skew", "prelie3-a", "prelie3-b"}},
      {StructureKind::FManifold, "f-manifold", {"comm", "assoc", "skew2", "jacobi", "hm2"}},
      {StructureKind::TernaryFManifold,
       "ternary-f-manifold",
       {"comm", "assoc", "skew3", "skew3-23", "fundamental", "hm3"}},
      {StructureKind::TernaryNambuPoisson,
       "ternary-nambu-poisson",
       {"comm", "assoc", "skew3", "skew3-23", "fundamental", "leibniz-np"}},
      {StructureKind::TernaryPreFManifold,
       "ternary-pre-f-manifold",
       {"zinbiel", "prelie3-skew", "prelie3-a", "prelie3-b", "prefm-1", "prefm-11", "prefm-2"}},
      {StructureKind::TernaryPreNambuPoisson,
       "ternary-pre-nambu-poisson",
       {"zinbiel", "prelie3-skew", "prelie3-a", "prelie3-b", "prenp-1", "prenp-2"}},
  };
  return table;
}

const KindEntry& kind_entry(StructureKind kind) {
  for (const auto& e : kind_table())
    if (e.kind == kind) return e;
  throw Error(Errc::UnknownName, "unknown structure kind");
}

}  // namespace

std::string_view kind_name(StructureKind kind) { return kind_entry(kind).name; }

StructureKind parse_kind(std::string_view name) {
  for (const auto& e : kind_table())
    if (e.name == name) return e.kind;
  throw Error(Errc::UnknownName, "unknown structure kind '" + std::string(name) + "'");
}

const std::vector<StructureKind>& all_kinds() {
  static const std::vector<StructureKind> kinds = [] {
    std::vector<StructureKind> v;
    for (const auto& e : kind_table()) v.push_back(e.kind);
    return v;
  }();
  return kinds;
}

const std::vector<std::string>& kind_identities(StructureKind kind) { return kind_entry(kind).ids; }

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : kIdentities) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

std::size_t identity_arity(std::string_view id) { return find_identity(id).arity; }

Vec eval_defect(std::string_view id, const AlgebraBundle& b, std::span<const Vec> args) {
  const Identity& e = find_identity(id);
  if (args.size() != e.arity)
    throw Error(Errc::ArityMismatch, "identity '" + std::string(id) + "' takes " +
                                         std::to_string(e.arity) + " arguments, got " +
                                         std::to_string(args.size()));
  require_tensors(e, b);
  for (const auto& a : args)
    if (a.size() != b.dim) throw Error(Errc::DimensionMismatch, "argument length differs from bundle dim");
  return e.fn(b, args);
}

std::vector<Condition> axiom_conditions(StructureKind kind, const AlgebraBundle& b) {
  std::vector<Condition> out;
  for (const auto& id : kind_identities(kind)) {
    const Identity& e = find_identity(id);
    require_tensors(e, b);
    out.push_back({id, std::vector<std::size_t>(e.arity, b.dim),
                   [&b, fn = e.fn](std::span<const Vec> a) { return fn(b, a); }});
  }
  return out;
}

CheckReport check_axioms(StructureKind kind, const AlgebraBundle& b, const CheckOptions& options) {
  return run_conditions(std::string(kind_name(kind)), axiom_conditions(kind, b), options);
}

Vec leibnizator3(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4) {
  return t(b, x1, x2, m(b, x3, x4)) - m(b, x3, t(b, x1, x2, x4)) - m(b, t(b, x1, x2, x3), x4);
}

Vec leibnizator2(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z) {
  return l(b, x, m(b, y, z)) - m(b, l(b, x, y), z) - m(b, y, l(b, x, z));
}

Vec pre_sym_product(const AlgebraBundle& b, const Vec& x, const Vec& y) { return dm(b, x, y) + dm(b, y, x); }

Vec pre_cyclic_bracket(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z) {
  return pb(b, x, y, z) + pb(b, y, z, x) + pb(b, z, x, y);
}

Vec pre_leibnizator(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4) {
  return cb(b, x1, x2, pre_sym_product(b, x3, x4)) - pre_sym_product(b, x3, cb(b, x1, x2, x4)) -
         pre_sym_product(b, cb(b, x1, x2, x3), x4);
}

Vec f1(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4) {
  return pb(b, x1, x2, dm(b, x3, x4)) - dm(b, x3, pb(b, x1, x2, x4)) - dm(b, cb(b, x1, x2, x3), x4);
}

Vec f2(const AlgebraBundle& b, const Vec& x1, const Vec& x2, const Vec& x3, const Vec& x4) {
  return dm(b, x3, pb(b, x1, x2, x4)) + dm(b, x2, pb(b, x1, x3, x4)) -
         pb(b, x1, pre_sym_product(b, x2, x3), x4);
}

Vec k_op(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z, const Vec& u) {
  return t(b, x, y, m(b, z, u)) + t(b, x, z, m(b, u, y)) + t(b, x, u, m(b, y, z));
}

std::vector<Condition> homomorphism_conditions(const Matrix& f, const AlgebraBundle& src,
                                               const AlgebraBundle& dst) {
  if (f.rows() != dst.dim || f.cols() != src.dim)
    throw Error(Errc::DimensionMismatch, "map is " + std::to_string(f.rows()) + "x" +
                                             std::to_string(f.cols()) + ", expected " +
                                             std::to_string(dst.dim) + "x" + std::to_string(src.dim));
  std::vector<Condition> out;
  const std::size_t n = src.dim;
  if (src.product) {
    (void)dst.prod();
    out.push_back({"hom-product", {n, n}, [&f, &src, &dst](std::span<const Vec> a) {
                     return f * mul(src, a[0], a[1]) - mul(dst, f * a[0], f * a[1]);
                   }});
  }
  if (src.bracket) {
    (void)dst.br();
    out.push_back({"hom-bracket", {n, n, n}, [&f, &src, &dst](std::span<const Vec> a) {
                     return f * br3(src, a[0], a[1], a[2]) - br3(dst, f * a[0], f * a[1], f * a[2]);
                   }});
  }
  if (src.binary_bracket) {
    (void)dst.br2();
    out.push_back({"hom-binary-bracket", {n, n}, [&f, &src, &dst](std::span<const Vec> a) {
                     return f * br2(src, a[0], a[1]) - br2(dst, f * a[0], f * a[1]);
                   }});
  }
  return out;
}

CheckReport check_homomorphism(const Matrix& f, const AlgebraBundle& src, const AlgebraBundle& dst,
                               const CheckOptions& options) {
  return run_conditions("homomorphism", homomorphism_conditions(f, src, dst), options);
}

}  // namespace ternalg
