#include "wsys/report.hpp"

#include <iomanip>
#include <ostream>

#include "json.hpp"

namespace wsys {

Record& Record::detail(std::string key, std::string value) {
  details.emplace_back(std::move(key), std::move(value));
  return *this;
}

Record& Record::detail(std::string key, long long value) { return detail(std::move(key), std::to_string(value)); }

std::string_view witness_kind(const Witness& w) {
  static constexpr std::string_view names[] = {"cycle", "simplex", "triple",     "quadruple", "wheel",
                                               "sphere", "pair",   "index-pair", "vertex"};
  return names[w.index()];
}

void Report::write_text(std::ostream& out, bool timing) const {
  for (const auto& r : records) {
    out << "[" << r.check << "] " << r.input;
    if (!r.mode.empty()) out << " mode=" << r.mode;
    out << (r.window ? " window" : " finite") << " trusted=" << r.trusted_vertices << "/" << r.vertices << "\n";
    out << "  verdict: " << to_string(r.verdict.answer) << "\n";
    if (r.verdict.witness) out << "  witness: " << describe(*r.verdict.witness) << "\n";
    if (!r.verdict.note.empty()) out << "  note: " << r.verdict.note << "\n";
    for (const auto& [k, v] : r.details) out << "  " << k << ": " << v << "\n";
    if (timing) out << "  time: " << std::fixed << std::setprecision(2) << r.wall_ms << " ms\n";
  }
}

void Report::write_structured(std::ostream& out, bool timing) const {
  nlohmann::ordered_json doc;
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["input"] = r.input;
    j["mode"] = r.mode;
    j["window"] = r.window;
    j["vertices"] = r.vertices;
    j["trusted_vertices"] = r.trusted_vertices;
    j["verdict"] = std::string(to_string(r.verdict.answer));
    if (r.verdict.witness) {
      j["witness"] = {{"kind", std::string(witness_kind(*r.verdict.witness))},
                      {"text", describe(*r.verdict.witness)}};
    } else {
      j["witness"] = nullptr;
    }
    j["note"] = r.verdict.note;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    j["details"] = std::move(details);
    if (timing) j["wall_ms"] = r.wall_ms;
    doc["records"].push_back(std::move(j));
  }
  out << doc.dump(2) << "\n";
}

}  // namespace wsys
