#include "ballot/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace ballot::report {

const char* to_string(Status s) {
  switch (s) {
    case Status::confirmed: return "confirmed";
    case Status::mismatch: return "mismatch";
    case Status::out_of_domain: return "out-of-domain";
  }
  return "?";
}

bool VerificationReport::all_confirmed() const {
  for (const Finding& f : findings)
    if (f.status == Status::mismatch) return false;
  return true;
}

int VerificationReport::count(Status s) const {
  int total = 0;
  for (const Finding& f : findings)
    if (f.status == s) ++total;
  return total;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "scope: " << report.scope << "\n";
  for (const Finding& f : report.findings) {
    out << "  " << to_string(f.status) << "  " << f.claim;
    if (f.status == Status::mismatch) {
      out << "  lhs=" << f.lhs;
      if (!f.lhs_source.empty()) out << " (" << f.lhs_source << ")";
      out << " rhs=" << f.rhs;
      if (!f.rhs_source.empty()) out << " (" << f.rhs_source << ")";
    }
    if (!f.note.empty()) out << "  [" << f.note << "]";
    out << "\n";
  }
  out << "summary: " << report.count(Status::confirmed) << " confirmed, "
      << report.count(Status::mismatch) << " mismatch, " << report.count(Status::out_of_domain)
      << " out-of-domain";
  out << " (" << report.elapsed_seconds << "s, version " << report.tool_version << ")\n";
  return out.str();
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["scope"] = report.scope;
  doc["tool_version"] = report.tool_version;
  doc["elapsed_seconds"] = report.elapsed_seconds;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Finding& f : report.findings) {
    nlohmann::ordered_json row;
    row["claim"] = f.claim;
    row["status"] = to_string(f.status);
    row["lhs"] = f.lhs;
    row["rhs"] = f.rhs;
    row["lhs_source"] = f.lhs_source;
    row["rhs_source"] = f.rhs_source;
    if (!f.note.empty()) row["note"] = f.note;
    rows.push_back(std::move(row));
  }
  doc["findings"] = std::move(rows);
  return doc.dump(2);
}

} // namespace ballot::report
