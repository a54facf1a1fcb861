#include "mga/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "json.hpp"

namespace mga {

namespace {

std::string isoTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string toJson(const Report& r, const ReportOptions& opt) {
  nlohmann::ordered_json j;
  if (opt.includeMeta) {
    j["meta"] = {{"tool", opt.tool}, {"version", opt.version}, {"generatedAt", isoTimestamp()}};
  }
  j["verdict"] = r.verdict;
  j["items"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    const auto& it = r.items[i];
    nlohmann::ordered_json o;
    o["id"] = it.id;
    o["claim"] = it.claim;
    o["verdict"] = it.pass ? "PASS" : "FAIL";
    o["witnesses"] = it.witness.empty() ? nlohmann::ordered_json::array()
                                        : nlohmann::ordered_json::array({it.witness});
    if (opt.includeTimings && i < r.timingsMs.size()) o["timingMs"] = r.timingsMs[i];
    j["items"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::string toCsv(const Report& r) {
  std::ostringstream os;
  os << "id,verdict,claim\n";
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  for (const auto& it : r.items) os << it.id << "," << (it.pass ? "PASS" : "FAIL") << "," << quote(it.claim) << "\n";
  os << "overall," << r.verdict << ",\n";
  return os.str();
}

}  // namespace mga
