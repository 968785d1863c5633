// Emits a dot-language drawing of a rank landscape: nodes labeled with their
// bitstring and rank letter, rank shading in blues (darker = better), role
// colors for global optima (yellow), strict suboptima (pink), and weak
// suboptima (orange); improving edges directed worse -> better, neutral edges
// undirected, light, and dashed.
#pragma once

#include <string>

#include "rankatlas/rankspace.hpp"

namespace rankatlas {

struct RenderStyle {
    std::string global_color = "gold";
    std::string strict_suboptimum_color = "lightpink";
    std::string weak_suboptimum_color = "orange";
    std::string neutral_edge_color = "gray70";
    // rank shading endpoints, interpolated per rank (best = darkest)
    unsigned dark_rgb = 0x2a5294;
    unsigned light_rgb = 0xdeebfa;
};

std::string render_dot(const RankVector& rv, const std::string& graph_name = "landscape",
                       const RenderStyle& style = {});

// Minimal structural check of the emitted dot text: one digraph block,
// balanced brackets, quoted node ids, statements terminated with ';', and
// edge endpoints that were declared as nodes.
bool validate_dot(const std::string& text, std::string* reason = nullptr);

}  // namespace rankatlas
