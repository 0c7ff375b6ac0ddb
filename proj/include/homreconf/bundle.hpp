#pragma once

#include "homreconf/csp.hpp"
#include "homreconf/io.hpp"
#include "homreconf/reduction.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homreconf {

// A bundle is a sectioned text file holding a reduction's input, its constructed instance and
// optionally a path (or solution) with its translation. The [bundle] section names the kind
// ("clique", "composed", "wheel" or "csp") and k where it applies.

/// kind "composed" when wheel is given. source_path, when given, must run inside the source.
Sections clique_bundle(const CliqueReduction & red, const WheelReduction * wheel,
                       const std::optional<ReconfigPath> & source_path);

Sections wheel_bundle(const WheelReduction & red, const std::optional<ReconfigPath> & ec_path);

Sections csp_bundle(const FrozenReduction & red, const std::optional<Hom> & solution);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string kind;
    std::vector<CheckOutcome> checks;

    bool ok() const;
};

/// Rebuilds the reduction from the stored input and replays every invariant against the
/// stored output. Structural problems in the bundle raise ParseError.
VerifyReport verify_bundle(const Sections & bundle);

/// Graph with the given labels and no edges; used to print maps over plain label sets.
Graph label_graph(const std::vector<std::string> & labels);

} // namespace homreconf
