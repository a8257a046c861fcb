#include "epsnet/report.hpp"

namespace epsnet {

json to_json(const VcDimension& d) {
  return json{{"d", d.d}, {"exact", d.exact}, {"witness", d.witness}};
}

json to_json(const CountResult& c) { return json{{"value", c.value}, {"exact", c.exact}}; }

json to_json(const CapacityVector& v) {
  json tau = json::array();
  for (const auto& t : v.tau) tau.push_back(to_json(t));
  return json{{"z", v.z}, {"tau", std::move(tau)}};
}

json to_json(const DoublingResult& d) {
  json doc{{"mode", d.exact ? "exact" : "bracket"}, {"lower", d.lower}};
  if (d.exact)
    doc["upper"] = d.lower;
  else
    doc["upper"] = static_cast<double>(d.upper);
  doc["argmax_eps0"] = to_json(d.argmax_eps0);
  doc["witness"] = d.witness;
  return doc;
}

json to_json(const StarNumber& s) {
  return json{{"lower", s.lower}, {"upper", s.upper}, {"exact", s.exact}, {"points", s.points}, {"ranges", s.ranges}};
}

json to_json(const ComplexityProfile& p) {
  json doc;
  doc["eps"] = to_json(p.eps);
  doc["vc"] = to_json(p.d);
  json pi = json::array();
  for (const auto& [y, v] : p.pi) pi.push_back(json{{"y", y}, {"value", v.value}, {"exact", v.exact}});
  doc["pi"] = std::move(pi);
  doc["tau"] = to_json(p.tau);
  doc["tau_vector"] = to_json(p.tau_vec);
  doc["doubling"] = to_json(p.doubling);
  json phi = json::array();
  for (const auto& e : p.phi_hat)
    phi.push_back(json{{"y", e.y}, {"l", e.l}, {"value", e.value.value}, {"exact", e.value.exact}});
  doc["shallow_cell"] = std::move(phi);
  doc["star"] = to_json(p.star);
  return doc;
}

json to_json(const Packing& p, const PackingCheck& check, const std::optional<HausslerReport>& haussler) {
  json doc;
  doc["instance"] = p.space_name;
  doc["level"] = to_json(p.level);
  doc["ceiling"] = p.ceiling ? to_json(*p.ceiling) : json(nullptr);
  doc["certificate"] = to_string(p.certificate);
  doc["size"] = p.size();
  doc["members"] = p.members;
  doc["check"] = json{{"separated", check.separated}, {"within_ceiling", check.within_ceiling},
                      {"maximal", check.maximal}};
  if (haussler)
    doc["haussler"] = json{{"d", haussler->d},
                           {"bound", static_cast<double>(haussler->bound)},
                           {"margin", static_cast<double>(haussler->margin)}};
  return doc;
}

json to_json(const NetReport& r) {
  json doc;
  doc["method"] = to_string(r.method);
  doc["eps"] = to_json(r.eps);
  doc["size"] = r.size();
  doc["is_net"] = r.is_net;
  doc["candidate"] = r.candidate.indices();
  doc["violations"] = r.violations;
  json stats;
  stats["seed"] = r.stats.seed;
  stats["draws"] = r.stats.draws;
  if (r.method == NetMethod::cal) {
    stats["queries"] = r.stats.queries;
    stats["surviving"] = r.stats.surviving;
    stats["family_exhausted"] = r.stats.family_exhausted;
  }
  if (r.stats.d) {
    stats["d"] = *r.stats.d;
    stats["d_exact"] = r.stats.d_exact;
  }
  if (r.stats.doubling) stats["doubling"] = static_cast<double>(*r.stats.doubling);
  if (r.method == NetMethod::doubling_small) stats["fallback"] = r.stats.fallback;
  stats["retries"] = r.stats.retries;
  stats["repairs"] = r.stats.repairs;
  json levels = json::array();
  for (const auto& l : r.stats.levels)
    levels.push_back(json{{"level", l.level},
                          {"ranges", l.ranges},
                          {"packing", l.packing},
                          {"sample", l.sample},
                          {"retries", l.retries},
                          {"repaired", l.repaired},
                          {"points", l.points}});
  stats["levels"] = std::move(levels);
  doc["stats"] = std::move(stats);
  return doc;
}

}  // namespace epsnet
