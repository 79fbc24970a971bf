#include "douady/triple_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "douady/error.hpp"

namespace douady {

MatrixTriple parse_triple(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  if (tokens.empty()) throw Error(ErrorCode::ParseError, "empty triple");

  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long long parsed = std::stoll(tokens[0], &used);
    if (used != tokens[0].size() || parsed < 1) throw std::invalid_argument("n");
    n = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "first token must be the size n >= 1, got '" + tokens[0] + "'");
  }
  const std::size_t expected = 1 + 2 * n * n + n;
  if (tokens.size() != expected) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(expected) + " tokens for n = " +
                                           std::to_string(n) + ", got " + std::to_string(tokens.size()));
  }
  std::size_t at = 1;
  auto read_matrix = [&] {
    GaussianMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = GaussianRational::parse(tokens[at++]);
    }
    return m;
  };
  MatrixTriple tr;
  tr.a = read_matrix();
  tr.b = read_matrix();
  for (std::size_t k = 0; k < n; ++k) tr.v.push_back(GaussianRational::parse(tokens[at++]));
  return tr;
}

MatrixTriple read_triple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open triple file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triple(buf.str());
}

std::string format_triple(const MatrixTriple& tr) {
  tr.validate();
  std::ostringstream os;
  const std::size_t n = tr.size();
  os << n << '\n';
  for (const GaussianMatrix* m : {&tr.a, &tr.b}) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) os << (c ? " " : "") << (*m)(r, c);
      os << '\n';
    }
  }
  for (std::size_t k = 0; k < n; ++k) os << (k ? " " : "") << tr.v[k];
  os << '\n';
  return os.str();
}

}  // namespace douady
