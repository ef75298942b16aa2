#pragma once

/**
 * @file report.hpp
 * @brief Derivative tables, classification reports and the field atlas.
 *
 * JSON documents are versioned with "schema": 1. Exponent lists render the
 * zero element's exponent as the string "-inf".
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gfderiv/deformation.hpp"
#include "gfderiv/field.hpp"

namespace gfderiv {

inline constexpr int kSchemaVersion = 1;

struct DerivTableRow {
  DiscreteLog n = DiscreteLog::neg_infinity();
  std::string element;
  /// (column label, rendered derivative), in the order the deformations were given.
  std::vector<std::pair<std::string, std::string>> derivs;

  friend bool operator==(const DerivTableRow&, const DerivTableRow&) = default;
};

/// One row per element, ascending by element value (0000, 0001, 0010, ...).
std::vector<DerivTableRow> derivative_table(const FieldCtx& ctx, const std::vector<Deformation>& deformations);

/// Columns "n | theta^n | <labels...>", padded to align.
std::string render_table(const std::vector<DerivTableRow>& rows);

struct TrigPeriod {
  std::uint32_t exponent;
  std::uint32_t period;

  friend bool operator==(const TrigPeriod&, const TrigPeriod&) = default;
};

/// Classification summary for one Frobenius deformation of one field.
struct AtlasEntry {
  std::string field;
  std::string deformation;
  std::vector<DiscreteLog> constants;
  std::vector<std::uint32_t> exp_solutions;
  std::vector<TrigPeriod> trig_periods;
  std::vector<std::uint32_t> nilpotent_basis;
  std::uint32_t kernel_dim = 0;
  /// Number of elements that have an antiderivative.
  std::uint64_t image_size = 0;
  std::uint32_t generalized_kernel_dim = 0;

  friend bool operator==(const AtlasEntry&, const AtlasEntry&) = default;
};

AtlasEntry classify(const Deformation& d);

std::string render_report(const AtlasEntry& entry);

nlohmann::ordered_json to_json(const DerivTableRow& row);
nlohmann::ordered_json to_json(const std::vector<DerivTableRow>& rows);
nlohmann::ordered_json to_json(const AtlasEntry& entry);
AtlasEntry atlas_entry_from_json(const nlohmann::ordered_json& j);

/// Every GF(p^k) with k >= 2 and p^k <= max_order, each with all Frobenius
/// deformations j = 1..k-1, ordered by (p, k, j).
std::vector<AtlasEntry> build_atlas(std::uint64_t max_order);

/// Builds the atlas and writes it as newline-delimited JSON. A partially
/// written file is removed on failure.
std::vector<AtlasEntry> write_atlas(std::uint64_t max_order, const std::filesystem::path& out);

/// Rows (n, D(n)) for a <= n <= b.
std::string render_intderiv_table(std::uint64_t a, std::uint64_t b);

}  // namespace gfderiv
