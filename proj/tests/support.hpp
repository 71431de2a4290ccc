#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ternalg/catalog.hpp"
#include "ternalg/constructions.hpp"
#include "ternalg/operators.hpp"
#include "ternalg/representations.hpp"
#include "ternalg/structures.hpp"

namespace testsupport {

using namespace ternalg;

inline Vec e(std::size_t n, std::size_t i) { return Vec::basis(n, i); }

/// Small random rationals, with zeros and fractions mixed in.
inline Rational random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_scalar(rng);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng);
  return m;
}

/// Every basis tuple with the given slot dimensions, last slot fastest.
inline std::vector<std::vector<std::size_t>> basis_tuples(const std::vector<std::size_t>& dims) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t d : dims)
    if (d == 0) return out;
  while (true) {
    out.push_back(idx);
    std::size_t s = dims.size();
    while (s > 0) {
      --s;
      if (++idx[s] < dims[s]) break;
      idx[s] = 0;
      if (s == 0) return out;
    }
    if (dims.empty()) return out;
  }
}

/// Independent raw-index oracle for x·y.
inline Vec oracle_mul(const Tensor3& c, const Vec& x, const Vec& y) {
  const std::size_t n = c.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c(i, j, k);
  return out;
}

/// Independent raw-index oracle for [x,y,z].
inline Vec oracle_br(const Tensor4& f, const Vec& x, const Vec& y, const Vec& z) {
  const std::size_t n = f.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[l] += x[i] * y[j] * z[k] * f(i, j, k, l);
  return out;
}

/// Runs the CLI and returns its exit code; stdout is captured into `out` when given.
inline int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(TERNALG_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  std::string buf;
  char chunk[4096];
  std::size_t got;
  while ((got = fread(chunk, 1, sizeof chunk, p)) > 0) buf.append(chunk, got);
  const int status = pclose(p);
  if (out) *out = buf;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace testsupport
