#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "truemper/graph.hpp"

namespace truemper {

enum class ConfigKind {
    Hole,
    LongHole,
    Theta,
    Pyramid,
    Prism,
    UniversalWheel,
    TwinWheel,
    ProperWheel,
    Cap,
    K23,
    C6bar,
    W54,
    SevenAntihole,
};

std::string to_string(ConfigKind kind);
std::optional<ConfigKind> config_kind_from_string(const std::string& name);

/// A configuration found in a graph.
///
/// Holes list the rim in cyclic order. Wheels and caps add a center; a cap
/// lists its hole starting with the two rim vertices seen by the center.
/// 3PCs carry three paths (theta: a..b; pyramid: x_i..y; prism: x_i..y_i)
/// and list all their vertices in increasing order. Small patterns list the
/// vertices in pattern order (see find_small_obstruction).
struct Certificate {
    ConfigKind kind;
    std::vector<int> vertices;
    std::optional<int> center;
    std::optional<std::array<std::vector<int>, 3>> paths;

    bool operator==(const Certificate&) const = default;
};

bool check_certificate(const Graph& g, const Certificate& c);

std::optional<Certificate> find_long_hole(const Graph& g);
std::optional<Certificate> find_cap(const Graph& g);

/// Patterns in vertex order:
///   K23            a1 a2 b1 b2 b3
///   C6bar          v0..v5, v_i and v_{i+1} nonadjacent
///   W54            rim r0..r4, center adjacent to r1..r4
///   SevenAntihole  v0..v6, v_i and v_{i+1} nonadjacent
std::optional<Certificate> find_small_obstruction(const Graph& g, ConfigKind kind);

struct HoleExpansion {
    std::vector<int> hole;
    std::vector<VertexSet> twin_sets;
    VertexSet universal;

    /// Union of the twin sets.
    VertexSet star() const;
};

HoleExpansion hole_expansion(const Graph& g, std::span<const int> hole);
HoleExpansion hole_expansion(const Graph& g, const Certificate& hole);

/// The listed vertices form an induced cycle of length at least 4, in order.
bool is_hole_order(const Graph& g, std::span<const int> cycle);
/// Rotate and reflect so the least vertex comes first, followed by its smaller rim neighbour.
std::vector<int> canonical_cycle(std::vector<int> cycle);

}  // namespace truemper
