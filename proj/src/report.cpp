#include "qg/report.hpp"

#include <algorithm>
#include <sstream>

namespace qg {

Json to_json(const Report &r, bool with_timing) {
  Json j;
  j["command"] = r.command;
  j["algebra"] = r.algebra.empty() ? Json(nullptr) : Json(r.algebra);
  if (r.convention) {
    j["convention"] = {{"relation_source", to_string(r.convention->relation_source)},
                       {"antipode_exponent_sign", r.convention->antipode_exponent_sign}};
  } else {
    j["convention"] = nullptr;
  }
  j["inputs"] = r.inputs;
  Json results = Json::array();
  for (const auto &c : r.results) {
    Json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["witness"] = c.witness.empty() ? Json(nullptr) : Json(c.witness);
    e["value"] = c.value.empty() ? Json(nullptr) : Json(c.value);
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  if (!r.data.empty())
    j["data"] = r.data;
  j["timing_ms"] = with_timing ? r.timing_ms : 0;
  j["seed"] = r.seed;
  return j;
}

std::string render_json(const Report &r, bool with_timing) {
  return to_json(r, with_timing).dump(2) + "\n";
}

std::string render_text(const Report &r) {
  std::ostringstream os;
  os << r.command;
  if (!r.algebra.empty())
    os << "  [" << r.algebra << "]";
  if (r.convention)
    os << "  convention " << to_string(r.convention->relation_source) << ", s = "
       << r.convention->antipode_exponent_sign;
  os << "\n";
  std::size_t width = 0;
  for (const auto &c : r.results)
    width = std::max(width, c.name.size());
  for (const auto &c : r.results) {
    os << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
       << to_string(c.status);
    if (!c.value.empty())
      os << "  " << c.value;
    os << "\n";
    if (!c.witness.empty())
      os << "    witness: " << c.witness << "\n";
  }
  if (!r.data.empty())
    for (const auto &[k, v] : r.data.items())
      os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
         << "\n";
  os << "  seed " << r.seed << ", " << r.timing_ms << " ms\n";
  return os.str();
}

} // namespace qg
