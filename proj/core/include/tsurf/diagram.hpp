#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tsurf {

// Combinatorial cylinder diagram. Boundary sequences list saddle ids left to right;
// each id occurs once on some top and once on some bottom.
struct CylinderDiagram {
  std::vector<std::vector<int>> bottom, top;

  int cylinders() const { return static_cast<int>(bottom.size()); }
  int saddles() const;
  bool operator==(const CylinderDiagram &) const = default;
  auto operator<=>(const CylinderDiagram &) const = default;
};

void validate_diagram(const CylinderDiagram &d);

struct SaddleSite {
  int cylinder = -1;
  int index = -1; // position in the boundary sequence
};
struct SaddleLocation {
  SaddleSite on_top, on_bottom;
};
std::vector<SaddleLocation> locate_saddles(const CylinderDiagram &d);

// Cone points of a diagram: left/right endpoint vertex per saddle and cone excess per vertex.
struct DiagramVertices {
  std::vector<int> left, right;
  std::vector<int> order;
};
DiagramVertices diagram_vertices(const CylinderDiagram &d);
// Positive zero orders, descending, and the genus.
std::vector<int> diagram_kappa(const CylinderDiagram &d);
int diagram_genus(const CylinderDiagram &d);

// Canonical representative under cylinder reordering, boundary rotation and saddle relabeling.
CylinderDiagram canonical_diagram(const CylinderDiagram &d);
bool diagrams_isomorphic(const CylinderDiagram &a, const CylinderDiagram &b);
std::string to_string(const CylinderDiagram &d);

struct DualVertex {
  int genus = 0;
};
struct DualEdge {
  int a = 0, b = 0; // a: component below the cylinder, b: component above
  int cylinder = -1;
};
struct DualGraph {
  std::vector<DualVertex> vertices;
  std::vector<DualEdge> edges;
  int total_genus() const; // b1 + sum of labels
  int geometric_genus() const;
};

// Components of the surface cut along all core curves.
struct Pinch {
  DualGraph graph;
  std::vector<int> bottom_half_component; // per cylinder
  std::vector<int> top_half_component;
  std::vector<int> saddle_component;
};
Pinch pinch(const CylinderDiagram &d);
DualGraph dual_graph(const CylinderDiagram &d);

enum class CaseLabel { Case1, Case2, Case3, Case4, Case5, Case6, None };
std::string to_string(CaseLabel c);
DualGraph reference_graph(CaseLabel c);
CaseLabel classify_case(const DualGraph &g);
bool graphs_isomorphic(const DualGraph &a, const DualGraph &b);
std::string to_string(const DualGraph &g);

CylinderDiagram diagram_4a();
CylinderDiagram diagram_4b();
CylinderDiagram diagram_case6();

} // namespace tsurf
