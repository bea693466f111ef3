#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsrg/families.hpp"
#include "dsrg/verify.hpp"

namespace dsrg {

enum class RowStatus { Reproduced, SearchRequired, OutOfScope };

std::string to_string(RowStatus s);

struct CatalogRow {
    int index = 0;                     // 1-based position in the published table
    ParameterSet target;
    std::string basic_label;           // parameter set of the basic graph as printed
    std::optional<FamilySpec> basic;   // generator when the basic graph is constructible
    std::int64_t a = 0, b = 0, j = 0;
    std::string note;                  // out-of-scope reason / route substitution
};

struct RowResult {
    CatalogRow row;
    RowStatus status = RowStatus::OutOfScope;
    std::optional<ParameterSet> classified;
    std::optional<Partition> partition;
    std::string detail;
    double seconds = 0.0;
};

struct CatalogOptions {
    bool constructible_only = true;
    int jobs = 1;
    double timeout_s = 60.0;        // per-row cap for the search fallback
    std::size_t search_limit = 1;   // partitions requested from the fallback search
    bool timing = false;            // add '#' timing comments (non-deterministic)
    std::uint64_t equivalence_budget = 2'000'000;
};

struct CatalogReport {
    std::vector<RowResult> rows;
    int reproduced = 0;
    std::string text;
};

// The published table of new parameter sets with order at most 110.
const std::vector<CatalogRow>& catalog_rows();

// Rebuilds every constructible row: basic graph, documented partition (search
// fallback), pi-join, classify, exact comparison against the target tuple.
CatalogReport run_catalog(const CatalogOptions& opts = {});

}  // namespace dsrg
