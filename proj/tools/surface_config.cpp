#include "surface_config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "douady/error.hpp"

namespace douady::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "field '" + key + "': '" + item + "' is not an integer");
    }
  }
  return out;
}

BettiVector to_betti(const std::string& key, const std::vector<int>& values) {
  if (values.size() != 5) {
    throw Error(ErrorCode::ParseError, "field '" + key + "' needs 5 integers, got " + std::to_string(values.size()));
  }
  BettiVector b{};
  for (std::size_t d = 0; d < 5; ++d) {
    if (values[d] < 0) throw Error(ErrorCode::InvalidSurface, "field '" + key + "' has a negative entry");
    b[d] = values[d];
  }
  return b;
}

}  // namespace

SurfaceConfig parse_surface_config(std::string_view text) {
  SurfaceConfig cfg;
  bool saw_betti = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "name") {
      cfg.name = value;
    } else if (key == "betti") {
      cfg.betti = to_betti(key, parse_int_list(key, value));
      saw_betti = true;
    } else if (key == "betti_c") {
      cfg.betti_c = to_betti(key, parse_int_list(key, value));
    } else if (key == "euler") {
      const auto v = parse_int_list(key, value);
      if (v.size() != 1) throw Error(ErrorCode::ParseError, "field 'euler' needs one integer");
      cfg.euler = v[0];
    } else if (key == "hodge") {
      const auto v = parse_int_list(key, value);
      if (v.size() % 3 != 0) {
        throw Error(ErrorCode::ParseError, "field 'hodge' needs (p,q,h) triples");
      }
      std::vector<std::array<int, 3>> entries;
      for (std::size_t k = 0; k < v.size(); k += 3) entries.push_back({v[k], v[k + 1], v[k + 2]});
      cfg.hodge = std::move(entries);
    } else {
      throw Error(ErrorCode::ParseError, "unknown field '" + key + "'");
    }
  }
  if (!saw_betti) throw Error(ErrorCode::ParseError, "missing field 'betti'");
  return cfg;
}

SurfaceModel to_model(const SurfaceConfig& config) {
  const BettiVector& b = config.betti;
  const int alternating = b[0] - b[1] + b[2] - b[3] + b[4];
  if (config.euler && *config.euler != alternating) {
    throw Error(ErrorCode::InvalidSurface, "field 'euler' = " + std::to_string(*config.euler) +
                                               " but the Betti numbers give " + std::to_string(alternating));
  }
  std::optional<HodgeNumbers> hodge;
  if (config.hodge) {
    HodgeNumbers h;
    for (const auto& [p, q, value] : *config.hodge) {
      if (!h.emplace(HodgeType{p, q}, value).second) {
        throw Error(ErrorCode::InvalidSurface, "field 'hodge' repeats (" + std::to_string(p) + "," +
                                                   std::to_string(q) + ")");
      }
    }
    hodge = std::move(h);
  }
  return SurfaceModel::with_identity_pairing(config.name, b, config.betti_c.value_or(b), std::move(hodge));
}

SurfaceModel resolve_surface(const std::string& spec) {
  if (auto preset = presets::by_name(spec)) return *preset;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(spec, ec)) {
    throw Error(ErrorCode::InvalidSurface, "'" + spec + "' is neither a preset nor a readable file");
  }
  std::ifstream in(spec);
  std::ostringstream buf;
  buf << in.rdbuf();
  return to_model(parse_surface_config(buf.str()));
}

}  // namespace douady::cli
