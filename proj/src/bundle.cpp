#include "ternalg/bundle.hpp"

#include <string>

namespace ternalg {

std::vector<std::string> default_labels(std::size_t dim, std::string_view stem) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(std::string(stem) + std::to_string(i + 1));
  return labels;
}

AlgebraBundle make_bundle(std::size_t dim, std::string name) {
  AlgebraBundle b;
  b.name = std::move(name);
  b.dim = dim;
  b.basis_labels = default_labels(dim);
  return b;
}

void AlgebraBundle::validate() const {
  if (dim > dimension_cap())
    throw Error(Errc::DimensionCap,
                "dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(dimension_cap()));
  if (basis_labels.size() != dim)
    throw Error(Errc::InvalidBundle, "basis has " + std::to_string(basis_labels.size()) +
                                         " labels for dimension " + std::to_string(dim));
  if (product && product->dim() != dim) throw Error(Errc::InvalidBundle, "product tensor dimension");
  if (bracket && bracket->dim() != dim) throw Error(Errc::InvalidBundle, "bracket tensor dimension");
  if (binary_bracket && binary_bracket->dim() != dim)
    throw Error(Errc::InvalidBundle, "binary bracket tensor dimension");
  if (unit) {
    if (unit->size() != dim) throw Error(Errc::InvalidBundle, "unit vector dimension");
    if (!product) throw Error(Errc::InvalidBundle, "unit given without a product");
    for (std::size_t i = 0; i < dim; ++i) {
      const Vec e = Vec::basis(dim, i);
      if (apply_bilinear(*product, e, *unit) != e || apply_bilinear(*product, *unit, e) != e)
        throw Error(Errc::InvalidBundle, "unit fails x*1 = 1*x = x at basis index " + std::to_string(i));
    }
  }
}

const Tensor3& AlgebraBundle::prod() const {
  if (!product) throw Error(Errc::MissingTensor, "bundle '" + name + "' has no product");
  return *product;
}

const Tensor4& AlgebraBundle::br() const {
  if (!bracket) throw Error(Errc::MissingTensor, "bundle '" + name + "' has no ternary bracket");
  return *bracket;
}

const Tensor3& AlgebraBundle::br2() const {
  if (!binary_bracket) throw Error(Errc::MissingTensor, "bundle '" + name + "' has no binary bracket");
  return *binary_bracket;
}

Vec mul(const AlgebraBundle& b, const Vec& x, const Vec& y) { return apply_bilinear(b.prod(), x, y); }

Vec br3(const AlgebraBundle& b, const Vec& x, const Vec& y, const Vec& z) {
  return apply_trilinear(b.br(), x, y, z);
}

Vec br2(const AlgebraBundle& b, const Vec& x, const Vec& y) { return apply_bilinear(b.br2(), x, y); }

}  // namespace ternalg
