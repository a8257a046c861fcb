#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "epsnet/range_space.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

using json = nlohmann::ordered_json;

// Instance file:
//   {"name": str, "n": int, "weights": [int, ...], "ranges": [[int, ...], ...]}
// Inner lists are written strictly increasing; the reader accepts any order
// and canonicalizes. Rationals are strings "a/b".

json to_json(const RangeSpace& space);
RangeSpace range_space_from_json(const json& doc);

RangeSpace load_instance(const std::filesystem::path& path);
void save_instance(const RangeSpace& space, const std::filesystem::path& path);

json to_json(const Rational& r);
Rational rational_from_json(const json& value);

json indices_json(const PointSet& s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace epsnet
