#include "epsnet/io.hpp"

#include <fstream>
#include <sstream>

namespace epsnet {

json to_json(const RangeSpace& space) {
  json doc;
  doc["name"] = space.name();
  doc["n"] = space.size();
  doc["weights"] = space.weights();
  json ranges = json::array();
  for (const auto& r : space.ranges()) ranges.push_back(r.indices());
  doc["ranges"] = std::move(ranges);
  return doc;
}

RangeSpace range_space_from_json(const json& doc) {
  if (!doc.is_object()) throw RangeSpaceError("instance must be a JSON object");
  const auto n = doc.at("n").get<std::size_t>();
  std::vector<std::int64_t> weights;
  if (doc.contains("weights")) {
    weights = doc.at("weights").get<std::vector<std::int64_t>>();
  } else {
    weights = uniform_weights(n);
  }
  std::vector<std::vector<std::size_t>> raw;
  for (const auto& r : doc.at("ranges")) {
    std::vector<std::int64_t> signed_members = r.get<std::vector<std::int64_t>>();
    std::vector<std::size_t> members;
    members.reserve(signed_members.size());
    for (auto v : signed_members) {
      if (v < 0) throw RangeSpaceError("negative point index in range");
      members.push_back(static_cast<std::size_t>(v));
    }
    raw.push_back(std::move(members));
  }
  return RangeSpace::build(n, std::move(weights), raw, doc.value("name", std::string{}));
}

RangeSpace load_instance(const std::filesystem::path& path) {
  return range_space_from_json(json::parse(read_text_file(path)));
}

void save_instance(const RangeSpace& space, const std::filesystem::path& path) {
  write_text_file(path, to_json(space).dump() + "\n");
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw std::invalid_argument("rational must be a string \"a/b\" or an integer");
}

json indices_json(const PointSet& s) { return s.indices(); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace epsnet
