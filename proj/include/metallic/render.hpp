/**
 * @file render.hpp
 * @brief DOT and SVG pictures of the spanning trees.
 *
 * Nodes are laid out by level; colour encodes the classification:
 * black-status nodes red, generic white nodes blue, w0/w1 nodes green,
 * and preferred sons (codes ending in 0 whose father is in the tree) are
 * outlined in red on green fill.
 */
#pragma once

#include <ostream>

#include "metallic/grade.hpp"
#include "metallic/trees.hpp"

namespace metallic {

/// Emit a DOT digraph of the tree down to max_level.
void render_dot(const Grade& g, TreeKind kind, int max_level,
                std::ostream& out);

/// Emit a standalone SVG of the tree down to max_level.
void render_svg(const Grade& g, TreeKind kind, int max_level,
                std::ostream& out);

}  // namespace metallic
