#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ternalg/bundle.hpp"
#include "ternalg/constructions.hpp"
#include "ternalg/representations.hpp"

namespace ternalg {

struct NamedMap {
  std::string name;
  Matrix matrix;

  friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

/// One scenario: an algebra plus whatever module, maps, form and trace go with it.
/// `rep`, when present, carries a copy of `algebra`.
struct Document {
  AlgebraBundle algebra;
  std::optional<RepBundle> rep;
  std::vector<NamedMap> maps;
  std::optional<Matrix> form;
  std::optional<TraceFunctional> trace;

  /// Named map, or the first map when `name` is empty. Throws UnknownName.
  [[nodiscard]] const Matrix& map(const std::string& name = {}) const;
  /// Throws MissingRep.
  [[nodiscard]] const RepBundle& representation() const;

  friend bool operator==(const Document&, const Document&) = default;
};

}  // namespace ternalg
