#pragma once

#include <set>
#include <string>
#include <vector>

#include "wallcheck/embedding.hpp"
#include "wallcheck/generators.hpp"

namespace wallcheck {

/// A placed template: a verified embedding of one of the brick-wall patterns
/// into a condensed-wall host, plus the wall vertices where the exterior part
/// attaches (empty when the template is self-contained).
struct PlacedTemplate {
  Embedding embedding;
  std::string pattern_name;
  std::vector<VertexId> attachments;
  std::set<Edge> edges_used;  // every host edge the unit occupies
};

/// B3 inside layer `layer`; the center sits on the layer's upper bottleneck.
/// Needs wall width >= 12.
PlacedTemplate place_b3_in_layer(const CondensedWall& w, int layer);

/// B6 across layers layer..layer+2 using a and b. Needs width >= 12.
PlacedTemplate place_b6_in_layers(const CondensedWall& w, int layer);

/// B7 across layers of chunk `chunk` (1-based, five layers per chunk) of a
/// cd-path host; the missing brick edge is routed through in-wall connectors
/// to c and d and the chunk's own exterior c-d path. Needs width >= 10.
PlacedTemplate place_b7_chunk(const CdPathHost& host, int chunk, int chunks_total);

/// B8 across the three layers of chunk `chunk` plus the exterior brick
/// (copy = chunk-1 of the fold bundles).
PlacedTemplate place_b8_chunk(const ExteriorBrickHost& host, int chunk,
                              int chunks_total);

/// B9 across the three layers of chunk `chunk` plus the exterior two-brick
/// attachment (copy = chunk-1).
PlacedTemplate place_b9_chunk(const ExteriorB2Host& host, int chunk,
                              int chunks_total);

}  // namespace wallcheck
