#include "qentro/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qentro {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> parse_grid(const json& j, const char* name,
                                            std::size_t dim) {
  if (!j.contains(name))
    throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "'");
  const json& g = j.at(name);
  if (!g.is_array() || g.size() != dim)
    throw Error(ErrorKind::ParseError,
                std::string("'") + name + "' must be an array of " +
                    std::to_string(dim) + " rows");
  std::vector<std::vector<double>> grid(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = g.at(i);
    if (!row.is_array() || row.size() != dim)
      throw Error(ErrorKind::ParseError,
                  std::string("'") + name + "' row " + std::to_string(i) +
                      " must hold " + std::to_string(dim) + " numbers");
    grid[i].reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const json& cell = row.at(k);
      if (!cell.is_number())
        throw Error(ErrorKind::ParseError,
                    std::string("'") + name + "' entry (" +
                        std::to_string(i) + "," + std::to_string(k) +
                        ") is not a number");
      const double v = cell.get<double>();
      if (!std::isfinite(v))
        throw Error(ErrorKind::ParseError,
                    std::string("non-finite entry in '") + name + "'");
      grid[i].push_back(v);
    }
  }
  return grid;
}

}  // namespace

ComplexMatrix StateFileDocument::to_matrix() const {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = Complex(re[i][j], im[i][j]);
  return m;
}

StateFileDocument StateFileDocument::from_matrix(const ComplexMatrix& m,
                                                 std::string label) {
  StateFileDocument doc;
  doc.dim = m.dim();
  doc.label = std::move(label);
  doc.re.assign(doc.dim, std::vector<double>(doc.dim));
  doc.im.assign(doc.dim, std::vector<double>(doc.dim));
  for (std::size_t i = 0; i < doc.dim; ++i)
    for (std::size_t j = 0; j < doc.dim; ++j) {
      // + 0.0 turns negative zeros from conjugation into plain zeros.
      doc.re[i][j] = m(i, j).real() + 0.0;
      doc.im[i][j] = m(i, j).imag() + 0.0;
    }
  return doc;
}

StateFileDocument parse_state_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorKind::ParseError, "invalid JSON");
  if (!j.is_object())
    throw Error(ErrorKind::ParseError, "document must be a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw Error(ErrorKind::ParseError, "missing integer field 'dim'");
  const long long dim = j.at("dim").get<long long>();
  if (dim < 1)
    throw Error(ErrorKind::ParseError, "'dim' must be >= 1");

  StateFileDocument doc;
  doc.dim = static_cast<std::size_t>(dim);
  doc.re = parse_grid(j, "re", doc.dim);
  doc.im = parse_grid(j, "im", doc.dim);
  if (j.contains("label")) {
    if (!j.at("label").is_string())
      throw Error(ErrorKind::ParseError, "'label' must be a string");
    doc.label = j.at("label").get<std::string>();
  }
  return doc;
}

StateFileDocument load_state_document(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_document(buf.str());
}

nlohmann::ordered_json state_document_to_json(const StateFileDocument& doc) {
  nlohmann::ordered_json j;
  j["dim"] = doc.dim;
  j["re"] = doc.re;
  j["im"] = doc.im;
  if (!doc.label.empty()) j["label"] = doc.label;
  return j;
}

void save_state_document(const StateFileDocument& doc,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << state_document_to_json(doc).dump(2) << "\n";
}

}  // namespace qentro
