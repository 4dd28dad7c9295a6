#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zkit/dsl.hpp"
#include "zkit/ring.hpp"

namespace zkit::dsl {

struct RunOptions {
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_pairs;
  std::optional<unsigned> max_exponent;
  std::optional<long> timeout_ms;
  bool fail_fast = false;
  /// Directory used to resolve relative paths in `verify`.
  std::string base_dir;
};

struct ResultEntry {
  std::string cmd;
  std::string status;  // "ok", "refuted" or "error"
  nlohmann::json result;
  nlohmann::json certificate;  // array of claims or null
  double ms = 0;
};

struct Report {
  std::vector<ResultEntry> results;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  /// 0 when everything is ok, 1 on any refutation, 2 on any error.
  int exit_code() const;
  /// Human-readable table.
  std::string render() const;
};

Report run(const Script& script, const RunOptions& options);
/// Parse errors are reported as a single error entry.
Report run_source(const std::string& source, const RunOptions& options);

/// Structural check of a report document.
bool validate_report(const nlohmann::json& report, std::string* why = nullptr);

/// Re-checks one certificate claim from scratch.
bool verify_claim(const nlohmann::json& claim, std::string* why = nullptr);

/// Ring and element construction from parsed text.
Ring build_ring(const RingExpr& r);
Ring ring_from_text(const std::string& text);
Element element_from_text(const Ring& ring, const std::string& text);

}  // namespace zkit::dsl
