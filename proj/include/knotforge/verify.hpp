#pragma once

#include "knotforge/construct.hpp"
#include "knotforge/laurent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotforge {

/// One row of the verification sweep: every checkable claim about L_n.
struct VerifyRow {
    int n = 0;
    int crossings = 0;
    bool knot = false;
    bool alternating = false;
    bool special = false;
    bool reduced = false;
    bool prime = false;
    int chi = 0;
    int genus_value = -1;
    int graph_components = 0;
    bool graph_shape_ok = false;
    std::uint64_t census_count = 0;
    bool census_ok = false;
    int alexander_span = -1;
    bool alexander_unit = false;       // Delta(1) = +-1
    bool alexander_palindromic = false;
    std::string determinant_str;
    bool determinant_odd = false;
    bool det_routes_match = false;     // Goeritz vs |Delta(-1)| (guaranteed when computed)
    std::optional<bool> oracle_agree;  // only for small n
    bool pass = false;
    std::string failure;               // first failed assertion, empty when pass
};

struct VerifyOptions {
    int n_max = 8;
    int oracle_n_max = 2;
    int jobs = 1;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass = false;
    std::string first_failure;  // "n=3: prime" style
};

VerifyReport run_verify(const VerifyOptions& opt, const TileCatalog& cat);

/// Deterministic JSON rendering of the report (schema_version 1).
std::string verify_report_json(const VerifyReport& rep, const VerifyOptions& opt);

} // namespace knotforge
