#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ternalg/linalg.hpp"

namespace ternalg {

/// A finite-dimensional space with optional structure tensors.
///
/// For pre-structures (Zinbiel / 3-pre-Lie) the same `product` and `bracket`
/// slots hold the pre-operations; the structure kind decides how they are read.
struct AlgebraBundle {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::optional<Tensor3> product;
  std::optional<Tensor4> bracket;
  std::optional<Tensor3> binary_bracket;
  std::optional<Vec> unit;

  /// Throws InvalidBundle or DimensionCap.
  void validate() const;

  const Tensor3& prod() const;
  const Tensor4& br() const;
  const Tensor3& br2() const;

  friend bool operator==(const AlgebraBundle&, const AlgebraBundle&) = default;
};

/// Bundle with labels e1..en and no tensors.
AlgebraBundle make_bundle(std::size_t dim, std::string name = {});
std::vector<std::string> default_labels(std::size_t dim, std::string_view stem = "e");

// Operations through the bundle's tensors; MissingTensor if absent.
Vec mul(const AlgebraBundle& b, const Vec& x, const Vec& y);
Vec br3(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z);
Vec br2(const AlgebraBundle& b, const Vec& x, const Vec& y);

}  // namespace ternalg
