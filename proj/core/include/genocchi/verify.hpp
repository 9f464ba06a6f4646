#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genocchi/families.hpp"

namespace genocchi::verify {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

/// Knobs shared by every check; -1 keeps the per-check default.
struct CheckParams {
  int max_n = -1;
  int order = -1;
  std::uint64_t budget = kDefaultBudget;
};

/// One check outcome. A fail always carries a concrete witness; a pass
/// carries the matched values. Serialization is deterministic.
struct VerificationReport {
  std::string check;
  std::string theorem;
  int max_n = 0;
  int order = 0;
  Status status = Status::Pass;
  std::string witness;
  double wall_ms = 0.0;
};

/// The closed CheckId enumeration, in canonical order.
const std::vector<std::string>& all_check_ids();
bool is_check_id(const std::string& id);

VerificationReport run_check(const std::string& id, const CheckParams& p);

/// Runs every check; with `parallel` they execute concurrently but reports
/// are returned in CheckId order regardless of completion order.
std::vector<VerificationReport> run_all(const CheckParams& p,
                                        bool parallel = false);

std::string to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const std::string& text);

std::string render_line(const VerificationReport& r);

}  // namespace genocchi::verify
