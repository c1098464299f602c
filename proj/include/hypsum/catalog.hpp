#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypsum/forge.hpp"
#include "hypsum/termspec.hpp"

namespace hypsum {

/// A stored identity: the base series it came from and, for forged entries,
/// the full forged record with its certificate and verification results.
struct CatalogEntry {
  enum class Kind { Base, Forged };

  std::string id;
  Kind kind = Kind::Base;
  TermSpec base_spec;
  ConstantExpr base_sum;
  std::optional<ForgedIdentity> forged;
  std::string latex;

  struct Verification {
    bool telescoping = false;
    bool numeric_pass = false;
    double numeric_error = 0.0;
    long numeric_N = 0;
    int numeric_digits = 0;
    std::vector<std::string> congruences;
  } verification;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

/// Versioned JSON serialization with exact rationals as "num/den" strings.
/// Loading re-checks each forged certificate and flags (never drops) entries
/// that fail; a malformed record raises with the entry id.
Catalog catalog_load(const std::string& path);
void catalog_save(const Catalog& catalog, const std::string& path);

}  // namespace hypsum
