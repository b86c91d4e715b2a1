#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qalg/text_format.hpp"

namespace qalg {

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

/// Ordered key = value report.  Checks carry an expected value and a status;
/// plain values are informational.
class Report {
 public:
  void value(std::string key, std::string value);
  CheckStatus check(std::string key, std::string expected, std::string actual,
                    CheckStatus status);
  /// Pass iff actual == expected.
  CheckStatus check(std::string key, const std::string& expected, const std::string& actual);

  /// Fail if any check failed, else Inconclusive if any was, else Pass.
  [[nodiscard]] CheckStatus overall() const;
  /// "key: expected E, got A" for the first failed (or else inconclusive) check.
  [[nodiscard]] std::string first_divergence() const;
  /// 0 pass, 1 fail, 2 inconclusive
  [[nodiscard]] int exit_code() const;

  /// One `key = value` line per entry, then `check.<key> = <status>` lines
  /// and `result = <status>`.
  [[nodiscard]] std::string structured() const;
  [[nodiscard]] std::string human() const;

 private:
  struct Entry {
    std::string key;
    std::string value;
    std::optional<std::string> expected;
    CheckStatus status = CheckStatus::Pass;
  };
  std::vector<Entry> entries_;
};

struct PipelineOptions {
  std::uint64_t seed = 0;
  /// Bound for global and dominant dimensions.
  std::size_t bound = 6;
  std::size_t max_length = 20;
  /// Replaces the built-in local algebra (quiver and relations).
  std::optional<AlgebraText> algebra;
};

/// The full run for the built-in local algebra A of dimension 6: A and its
/// tau_2-orbit M = DA + tau_2 DA + ... + tau_2^4 DA, End(M) by quiver and
/// relations, its homological dimensions and Cartan determinant, relation
/// minimization, the stored eleven-relation presentation, the Ext checks and
/// the 2-cluster tilting verdict.  Stops at the first failed check, since
/// later ones build on earlier ones.  Deterministic for a fixed seed.
Report verify_local_example(const PipelineOptions& options = {});

/// The tau_2-orbit module of the built-in local algebra.
Representation local_example_module(const AlgebraPtr& a);

}  // namespace qalg
