#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "almg/algebra.hpp"

namespace almg {

/// A falsifying instance: the law it breaks and the quantified variables.
struct Witness {
  std::string law;
  std::vector<Elem> tuple;

  bool operator==(const Witness&) const = default;
  auto operator<=>(const Witness& o) const {
    if (auto c = tuple <=> o.tuple; c != 0) return c;
    return law <=> o.law;
  }
};

struct CheckOptions {
  /// Witnesses kept per report; the failure count stays exact.
  std::size_t witness_cap = 16;
  /// Also require + to distribute over join and meet (check_monoid).
  bool distributivity = false;
};

inline constexpr std::size_t kUnlimitedWitnesses =
    std::numeric_limits<std::size_t>::max();

/// Outcome of one quantified check.
///
/// passed is true exactly when failures == 0; witnesses holds the
/// lexicographically smallest `witness_cap` failures.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> failures_by_law;
  std::vector<Witness> witnesses;
  std::map<std::string, std::string> details;

  bool truncated() const { return failures > witnesses.size(); }
  bool operator==(const CheckReport&) const = default;
};

/// Accumulates instances of one check. Not thread-safe; parallel loops use
/// one per chunk and merge().
class ReportBuilder {
 public:
  ReportBuilder(std::string name, std::size_t cap);

  void record(std::string_view law, Truth t, std::initializer_list<Elem> tuple);
  void record(std::string_view law, Truth t, std::vector<Elem> tuple);
  void fail(std::string_view law, std::vector<Elem> tuple);
  void pass() { ++checked_; }
  void skip() { ++skipped_; }
  void tally(std::uint64_t checked, std::uint64_t skipped) {
    checked_ += checked;
    skipped_ += skipped;
  }

  void merge(ReportBuilder&& other);
  CheckReport finish() &&;

 private:
  void trim();

  std::string name_;
  std::size_t cap_;
  std::uint64_t checked_ = 0;
  std::uint64_t skipped_ = 0;
  std::uint64_t failures_ = 0;
  std::map<std::string, std::uint64_t> by_law_;
  std::vector<Witness> witnesses_;
};

/// Conjunction of reports into one named summary report.
CheckReport combine_reports(std::string name,
                            const std::vector<CheckReport>& parts,
                            std::size_t cap);

}  // namespace almg
