#include "ternalg/document.hpp"

namespace ternalg {

const Matrix& Document::map(const std::string& name) const {
  if (maps.empty()) throw Error(Errc::UnknownName, "document has no maps");
  if (name.empty()) return maps.front().matrix;
  for (const auto& m : maps)
    if (m.name == name) return m.matrix;
  throw Error(Errc::UnknownName, "no map named '" + name + "'");
}

const RepBundle& Document::representation() const {
  if (!rep) throw Error(Errc::MissingRep, "document has no rep block");
  return *rep;
}

}  // namespace ternalg
