#pragma once

#include "singan/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace singan {

/// Published (or pinned derived) values for a catalog graph; only the fields
/// the source actually states are filled.
struct ExpectedValues {
    std::optional<std::vector<Rational>> Z;
    std::optional<std::vector<Rational>> Delta;
    std::optional<Rational> delta_y;
    std::optional<long> pa_Z;
    std::optional<Integer> Z2;
    std::optional<Rational> Delta2;
    std::optional<bool> is_log_terminal;
    std::optional<bool> is_log_canonical;
    std::optional<bool> is_rational;
    std::optional<bool> is_rdp;
    std::optional<bool> is_elliptic_gorenstein;
    std::optional<Integer> multiplicity;
};

struct CatalogEntry {
    std::string name;
    DualGraph graph;
    ExpectedValues expected;
    std::string provenance;
    bool derived = false;  // expected values pinned from the oracles, not published
};

/// Fixture registry. Parametrized names: cone_g<g>_w<w> (g in 0..5, w in 1..6,
/// cone_g0_w1 = smooth point) and type1_cycle_<n> (n >= 3). Throws on unknown names.
CatalogEntry builtin(const std::string& name);

/// All non-parametrized names plus representative parametrized instances.
std::vector<std::string> catalog_names();

}  // namespace singan
