#include "qcrys/rep_export.hpp"

#include <sstream>

namespace qcrys {

Json radical_to_json(const Radical& r) {
  Json j = Json::object();
  for (const auto& [m, c] : r.terms()) j[m.get_str()] = to_string(c);
  return j;
}

Json entries_to_json(const LinOp& op) {
  Json out = Json::array();
  for (const auto& [from, to, c] : op.entries()) out.push_back(Json{{"from", from}, {"to", to}, {"coeff", radical_to_json(c)}});
  return out;
}

std::string entries_to_csv(const LinOp& op, const std::string& label_column) {
  std::ostringstream os;
  for (const auto& [from, to, c] : op.entries()) {
    if (!label_column.empty()) os << label_column << ",";
    os << from << "," << to << ",\"" << c.to_string() << "\"\n";
  }
  return os.str();
}

}  // namespace qcrys
