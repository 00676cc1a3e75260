#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qentro/matrix.hpp"

namespace qentro {

// On-disk matrix document: JSON object with integer "dim", dim x dim real
// grids "re" and "im", and an optional "label" string. Unknown keys are
// ignored. All malformed input surfaces as ParseError.
struct StateFileDocument {
  std::size_t dim = 0;
  std::vector<std::vector<double>> re;
  std::vector<std::vector<double>> im;
  std::string label;

  ComplexMatrix to_matrix() const;
  static StateFileDocument from_matrix(const ComplexMatrix& m,
                                       std::string label = {});
};

StateFileDocument parse_state_document(const std::string& text);
StateFileDocument load_state_document(const std::string& path);

nlohmann::ordered_json state_document_to_json(const StateFileDocument& doc);
void save_state_document(const StateFileDocument& doc,
                         const std::string& path);

}  // namespace qentro
