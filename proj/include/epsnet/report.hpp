#pragma once

#include <optional>

#include "epsnet/complexity.hpp"
#include "epsnet/io.hpp"
#include "epsnet/nets.hpp"
#include "epsnet/packing.hpp"

namespace epsnet {

// JSON documents emitted by the command-line tool. Rationals are "a/b"
// strings, point and range sets ascending index lists.

json to_json(const VcDimension& d);
json to_json(const CountResult& c);
json to_json(const CapacityVector& v);
json to_json(const DoublingResult& d);
json to_json(const StarNumber& s);
json to_json(const ComplexityProfile& p);

json to_json(const Packing& p, const PackingCheck& check, const std::optional<HausslerReport>& haussler);

json to_json(const NetReport& r);

}  // namespace epsnet
