#include "sieveforge/report.hpp"

#include <sstream>

namespace sieveforge {

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j;
  j["axiom"] = w.axiom;
  if (!w.objects.empty()) j["objects"] = w.objects;
  if (!w.sieves.empty()) j["sieves"] = w.sieves;
  if (!w.morphisms.empty()) j["morphisms"] = w.morphisms;
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["pass"] = v.pass;
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

bool Report::all_pass() const {
  for (auto& [name, v] : verdicts)
    if (!v.pass) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["pass"] = all_pass();
  j["verdicts"] = nlohmann::json::array();
  for (auto& [name, v] : verdicts) {
    nlohmann::json entry = verdict_to_json(v);
    entry["name"] = name;
    j["verdicts"].push_back(entry);
  }
  if (!notes.empty()) j["notes"] = notes;
  if (!replay.empty() && !all_pass()) j["replay"] = replay;
  if (timing_ms >= 0) j["timing_ms"] = timing_ms;
  if (!extra.is_null()) j["report"] = extra;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  for (auto& [name, v] : verdicts) {
    out << name << ": " << (v.pass ? "pass" : "fail") << "\n";
    if (!v.pass && v.witness) {
      out << "  axiom: " << v.witness->axiom << "\n";
      if (!v.witness->detail.empty()) out << "  detail: " << v.witness->detail << "\n";
    }
  }
  for (auto& n : notes) out << "note: " << n << "\n";
  if (!replay.empty() && !all_pass()) out << "replay: " << replay << "\n";
  if (!extra.is_null()) out << extra.dump(2) << "\n";
  if (timing_ms >= 0) out << "elapsed_ms: " << timing_ms << "\n";
  return out.str();
}

}  // namespace sieveforge
