#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tensorcoh/checks.hpp"

namespace tensorcoh::cli {

struct ExploreRow {
  int instance = 0;
  std::string description;
  Count lhs;
  Count rhs;
};

struct ExploreResult {
  std::string id;
  std::vector<ExploreRow> rows;

  /// instance_id,description,lhs,rhs,ratio
  std::string csv() const;
  double max_ratio() const;
};

/// Bound ids the explorer can sample for.
const std::vector<std::string>& explorable();

/// Random instances satisfying the hypotheses of a proven bound; a violated bound throws
/// InternalConsistency. Same seed, same rows.
ExploreResult explore(const std::string& id, int trials, std::uint32_t seed,
                      std::uint32_t field_char = PrimeField::kDefaultCharacteristic);

std::string format_ratio(const Count& lhs, const Count& rhs);

}  // namespace tensorcoh::cli
