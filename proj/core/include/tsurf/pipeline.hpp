#pragma once

#include "tsurf/cylinders.hpp"
#include "tsurf/diagram.hpp"
#include "tsurf/monodromy.hpp"
#include "tsurf/net.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/transverse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tsurf {

enum class VerdictStatus { TrivialForni, WollmilchsauEquivalent, Undetermined };
std::string to_string(VerdictStatus s);

struct AnalysisBounds {
  long direction_bound = 8;
  long case5_scan_bound = 8; // directions searched for a simple cylinder
  bool parallel = true;
};

struct DirectionRecord {
  Direction direction;
  CaseLabel label = CaseLabel::None;
  bool resolved = false;   // this direction alone excludes a nontrivial Forni subspace
  std::string mechanism;
  std::string witness;
  std::vector<long> moduli;
  FlatSurfaceNet net;
  DualGraph graph;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Undetermined;
  Origami origami;
  Stratum stratum;
  long direction_bound = 0;
  std::vector<DirectionRecord> evidence;
  std::optional<WindowConstraint> window;
  std::optional<WindowFeasibility> window_result;
  std::string summary;
};

// Genus 3 only.
Verdict classify_surface(const Origami &o, const AnalysisBounds &bounds = {});
DirectionRecord analyze_direction(const Origami &o, Direction dir, const AnalysisBounds &bounds = {});

enum class DiagramShape { OneCylinder, Case6 };
std::string to_string(DiagramShape s);
DiagramShape parse_shape(const std::string &text);

struct DiagramCatalog {
  Stratum stratum;
  DiagramShape shape = DiagramShape::OneCylinder;
  std::vector<CylinderDiagram> diagrams; // canonical, sorted
};

DiagramCatalog enumerate_diagrams(const Stratum &stratum, DiagramShape shape);

struct EquivalenceReport {
  bool equivalent = false;
  std::string reason;
  std::optional<WindowFeasibility> window;
};
// Needs a horizontal Case-6 decomposition.
EquivalenceReport wollmilchsau_check(const Origami &o);
bool wollmilchsau_equivalent(const Origami &o);
// The same chain on a Case-6 net.
EquivalenceReport wollmilchsau_check(const FlatSurfaceNet &net);

enum class ReportFormat { Text, Svg };

struct Document {
  std::string text;
  std::vector<std::pair<std::string, std::string>> svgs; // file name, contents
};

Document render_report(const Verdict &v, ReportFormat format);
Document render_report(const DiagramCatalog &c, ReportFormat format);
Document render_report(const MonodromyReport &m, const Origami &o);

std::string svg_decomposition(const FlatSurfaceNet &net, const std::string &title);
std::string svg_dual_graph(const DualGraph &g, const std::string &title);
std::string svg_diagram(const CylinderDiagram &d, const std::string &title);

} // namespace tsurf
