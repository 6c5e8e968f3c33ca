#pragma once

#include <string>
#include <vector>

namespace ballot::report {

enum class Status { confirmed, mismatch, out_of_domain };

const char* to_string(Status s);

/// One cross-check outcome. Mismatches always carry both exact values and
/// the source that produced each side.
struct Finding {
  std::string claim;
  Status status = Status::confirmed;
  std::string lhs;
  std::string rhs;
  std::string lhs_source;
  std::string rhs_source;
  std::string note;
};

struct VerificationReport {
  std::string scope;
  std::vector<Finding> findings;
  double elapsed_seconds = 0.0;
  std::string tool_version;

  bool all_confirmed() const;
  int count(Status s) const;
};

std::string to_text(const VerificationReport& report);
std::string to_json(const VerificationReport& report);

} // namespace ballot::report
