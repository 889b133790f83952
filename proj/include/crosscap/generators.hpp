#ifndef CROSSCAP_GENERATORS_HPP
#define CROSSCAP_GENERATORS_HPP

#include "crosscap/diagram.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crosscap {

// Planar graph as a rotation system: rotation[v] lists edge ids around v in
// counterclockwise order.  Each edge id appears exactly twice overall.
struct RibbonGraph {
    std::vector<std::vector<int>> rotation;
    std::vector<std::string> edge_names;  // index = edge id

    int vertex_count() const noexcept { return static_cast<int>(rotation.size()); }
    int edge_count() const noexcept { return static_cast<int>(edge_names.size()); }
};

// One line per vertex, "name: e1 e2 e3", edge names counterclockwise.
// Blank lines and '#' comments are skipped.  Throws MalformedCode.
RibbonGraph parse_ribbon_graph(std::string_view text);

RibbonGraph theta_graph(int edges = 3);
RibbonGraph k4_graph();

// Boundary of a band surface on the graph with |twists[e]| half twists in
// band e.  All crossings share one type, so the result is alternating;
// negative twists give the mirror image.  Throws NotPlanar, MixedSigns,
// InvalidArgument.
Diagram ribbon_link(const RibbonGraph& g, const std::vector<int>& twists);

// ribbon_link restricted to trivalent graphs.  Throws NotTrivalent.
Diagram trivalent_graph_link(const RibbonGraph& g, const std::vector<int>& twists);

// Standard alternating pretzel diagram.  Throws MixedSigns, InvalidArgument.
Diagram pretzel(const std::vector<int>& p);

// Replace one crossing by a twist of 1 + extra crossings, lengthening the
// twist region it already belongs to.  Throws InvalidArgument.
Diagram inflate_twist(const Diagram& d, int crossing, int extra);

// Inflate every twist region by `extra` crossings.
Diagram inflate_all_regions(const Diagram& d, int extra);

}  // namespace crosscap

#endif  // CROSSCAP_GENERATORS_HPP
