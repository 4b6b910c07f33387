#include <gkzhodge/linalg.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gkz {

using nlohmann::json;

namespace {

Int json_to_int(const json& v) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_string()) return Int(v.get<std::string>());
  throw std::invalid_argument("matrix entry is not an integer");
}

}  // namespace

IntMatrix parse_matrix_json(const std::string& text) {
  json j = json::parse(text);
  const auto& entries = j.at("entries");
  std::size_t rows = j.contains("rows") ? j.at("rows").get<std::size_t>() : entries.size();
  std::size_t cols = j.contains("cols") ? j.at("cols").get<std::size_t>()
                                        : (entries.empty() ? 0 : entries.at(0).size());
  if (entries.size() != rows) throw std::invalid_argument("entries do not match declared rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw std::invalid_argument("entries do not match declared cols");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = json_to_int(entries[i][k]);
  }
  return m;
}

IntMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<IntVec> rows;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    IntVec row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return IntMatrix();
  std::size_t cols = rows.front().size();
  return IntMatrix::from_rows(rows, cols);
}

IntMatrix parse_matrix(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_matrix_json(text);
  return parse_matrix_text(text);
}

std::string matrix_to_json(const IntMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Int& v = m(i, k);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j.dump();
}

std::string matrix_to_text(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (k) out += ' ';
      out += m(i, k).get_str();
    }
    out += '\n';
  }
  return out;
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

}  // namespace gkz
