#include "tsurf/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace tsurf {

namespace {

std::string fmt(double x)
{
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << x;
  return os.str();
}

std::string svg_open(double w, double h)
{
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
         "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
}

std::string text_at(double x, double y, const std::string &s, const std::string &anchor = "middle")
{
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" text-anchor=\"" + anchor + "\">" + s + "</text>\n";
}

std::string file_tag(Direction d)
{
  return d.q == 0 ? "vertical" : std::to_string(d.p) + "_" + std::to_string(d.q);
}

constexpr double kWidth = 420, kMargin = 30;

// rectangles stacked bottom to top, saddle ticks on both boundaries; body placed at (ox, oy)
std::string decomposition_body(const FlatSurfaceNet &net, double ox, double oy, double &height)
{
  Rational maxw = 0;
  for (const auto &c : net.cylinders)
    maxw = std::max<Rational>(maxw, c.w);
  double scale = kWidth / maxw.get_d();
  std::vector<double> h;
  double total = 0;
  for (const auto &c : net.cylinders) {
    h.push_back(std::clamp(c.ht.get_d() * scale, 28.0, 120.0));
    total += h.back() + 22;
  }
  height = total;
  std::ostringstream os;
  double y = oy + total;
  for (int ci = 0; ci < net.diagram.cylinders(); ++ci) {
    const auto &c = net.cylinders[ci];
    double w = c.w.get_d() * scale;
    double top = y - h[ci];
    os << "<rect x=\"" << fmt(ox) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(w) << "\" height=\""
       << fmt(h[ci]) << "\" fill=\"#eef3fb\" stroke=\"#335\"/>\n";
    os << text_at(ox + w / 2, top + h[ci] / 2 + 4, "C" + std::to_string(ci + 1) + "  w=" + to_string(c.w) +
                                                        " h=" + to_string(c.ht) + " t=" + to_string(c.tw));
    for (std::size_t k = 0; k < net.diagram.bottom[ci].size(); ++k) {
      int s = net.diagram.bottom[ci][k];
      double x0 = ox + net.bottom_start(ci, static_cast<int>(k)).get_d() * scale;
      double len = net.saddle_lengths[s].get_d() * scale;
      os << "<circle cx=\"" << fmt(x0) << "\" cy=\"" << fmt(y) << "\" r=\"2.5\" fill=\"#c22\"/>\n";
      os << text_at(x0 + len / 2, y - 3, "s" + std::to_string(s));
    }
    for (std::size_t k = 0; k < net.diagram.top[ci].size(); ++k) {
      int s = net.diagram.top[ci][k];
      // top coordinate x sits above bottom coordinate x - tw
      Rational start = mod(net.top_start(ci, static_cast<int>(k)) - c.tw, c.w);
      double x0 = ox + start.get_d() * scale;
      double mid = ox + mod(start + net.saddle_lengths[s] / 2, c.w).get_d() * scale;
      os << "<circle cx=\"" << fmt(x0) << "\" cy=\"" << fmt(top) << "\" r=\"2.5\" fill=\"#c22\"/>\n";
      os << text_at(mid, top + 12, "s" + std::to_string(s));
    }
    y = top - 22;
  }
  return os.str();
}

std::string dual_graph_body(const DualGraph &g, double cx, double cy, double radius)
{
  std::ostringstream os;
  std::size_t n = g.vertices.size();
  std::vector<std::pair<double, double>> at;
  for (std::size_t i = 0; i < n; ++i) {
    double a = n == 1 ? 0 : 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    double r = n == 1 ? 0 : radius;
    at.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
  }
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto &e : g.edges) {
    auto key = std::minmax(e.a, e.b);
    int k = multiplicity[key]++;
    auto [x1, y1] = at[e.a];
    auto [x2, y2] = at[e.b];
    std::string label = "C" + std::to_string(e.cylinder + 1);
    if (e.a == e.b) {
      double r = 16 + 10 * k;
      os << "<circle cx=\"" << fmt(x1) << "\" cy=\"" << fmt(y1 - r) << "\" r=\"" << fmt(r)
         << "\" fill=\"none\" stroke=\"#555\"/>\n";
      os << text_at(x1, y1 - 2 * r - 3, label);
      continue;
    }
    double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    double dx = x2 - x1, dy = y2 - y1, len = std::hypot(dx, dy);
    double bend = (k % 2 ? -1.0 : 1.0) * 22.0 * ((k + 1) / 2);
    double qx = mx - dy / len * bend, qy = my + dx / len * bend;
    os << "<path d=\"M " << fmt(x1) << " " << fmt(y1) << " Q " << fmt(qx) << " " << fmt(qy) << " " << fmt(x2)
       << " " << fmt(y2) << "\" fill=\"none\" stroke=\"#555\"/>\n";
    os << text_at(mx - dy / len * bend * 0.55, my + dx / len * bend * 0.55 + 4, label);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, y] = at[i];
    os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"13\" fill=\"#fff\" stroke=\"#224\"/>\n";
    os << text_at(x, y + 4, std::to_string(g.vertices[i].genus));
  }
  return os.str();
}

std::string diagram_body(const CylinderDiagram &d, double ox, double oy, double &height)
{
  std::ostringstream os;
  double h = 40, gap = 24;
  double y = oy;
  for (int c = d.cylinders() - 1; c >= 0; --c) {
    os << "<rect x=\"" << fmt(ox) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(h)
       << "\" fill=\"#eef3fb\" stroke=\"#335\"/>\n";
    os << text_at(ox + kWidth / 2, y + h / 2 + 4, "C" + std::to_string(c + 1));
    auto row = [&](const std::vector<int> &seq, double yy) {
      double step = kWidth / static_cast<double>(seq.size());
      for (std::size_t k = 0; k < seq.size(); ++k) {
        os << "<circle cx=\"" << fmt(ox + step * static_cast<double>(k)) << "\" cy=\"" << fmt(yy)
           << "\" r=\"2.5\" fill=\"#c22\"/>\n";
        os << text_at(ox + step * (static_cast<double>(k) + 0.5), yy + (yy == y ? 12 : -3),
                      "s" + std::to_string(seq[k]));
      }
    };
    row(d.top[c], y);
    row(d.bottom[c], y + h);
    y += h + gap;
  }
  height = y - oy;
  return os.str();
}

} // namespace

std::string svg_decomposition(const FlatSurfaceNet &net, const std::string &title)
{
  double h = 0;
  std::string body = decomposition_body(net, kMargin, 2 * kMargin, h);
  return svg_open(kWidth + 2 * kMargin, h + 3 * kMargin) + text_at(kMargin, 20, title, "start") + body + "</svg>\n";
}

std::string svg_dual_graph(const DualGraph &g, const std::string &title)
{
  return svg_open(260, 240) + text_at(10, 20, title, "start") + dual_graph_body(g, 130, 140, 60) + "</svg>\n";
}

std::string svg_diagram(const CylinderDiagram &d, const std::string &title)
{
  double h = 0;
  std::string body = diagram_body(d, kMargin, 2 * kMargin, h);
  return svg_open(kWidth + 2 * kMargin, h + 3 * kMargin) + text_at(kMargin, 20, title, "start") + body + "</svg>\n";
}

Document render_report(const Verdict &v, ReportFormat format)
{
  Document doc;
  std::ostringstream os;
  os << "surface: " << to_line(v.origami) << "\n";
  os << "squares: " << v.origami.n << "\n";
  os << "stratum: " << to_string(v.stratum) << "\n";
  os << "verdict: " << to_string(v.status) << "\n";
  os << "summary: " << v.summary << "\n";
  if (v.window) {
    os << "window: t0 " << v.window->t0 << ", s0 " << v.window->s0 << ", t_start " << v.window->t_start
       << ", min saddle " << v.window->min_saddle;
    if (v.window_result)
      os << ", slack " << v.window_result->slack << (v.window_result->boundary ? " (equality)" : "");
    os << "\n";
  }
  os << "directions (bound " << v.direction_bound << "):\n";
  for (const auto &r : v.evidence) {
    os << "  " << std::left << std::setw(9) << to_string(r.direction) << std::setw(8) << to_string(r.label)
       << (r.resolved ? "excluded  " : "open      ") << r.mechanism << "\n";
    os << "           cylinders " << r.net.cylinders.size() << ", moduli exponents";
    for (long m : r.moduli)
      os << " " << m;
    os << ", dual graph " << to_string(r.graph) << "\n";
    if (!r.witness.empty())
      os << "           witness: " << r.witness << "\n";
  }
  doc.text = os.str();
  if (format == ReportFormat::Svg)
    for (const auto &r : v.evidence) {
      double h = 0;
      std::string body = decomposition_body(r.net, kMargin, 2 * kMargin, h);
      double width = kWidth + 2 * kMargin + 260;
      std::string svg = svg_open(width, std::max(h, 200.0) + 3 * kMargin) +
                        text_at(kMargin, 20, "direction " + to_string(r.direction) + ", " + to_string(r.label), "start") +
                        body + dual_graph_body(r.graph, kWidth + 2 * kMargin + 130, 2 * kMargin + 100, 60) +
                        "</svg>\n";
      doc.svgs.push_back({"direction_" + file_tag(r.direction) + ".svg", svg});
    }
  return doc;
}

Document render_report(const DiagramCatalog &c, ReportFormat format)
{
  Document doc;
  std::ostringstream os;
  os << "stratum: " << to_string(c.stratum) << "\n";
  os << "shape: " << to_string(c.shape) << "\n";
  os << "diagrams: " << c.diagrams.size() << "\n";
  for (std::size_t i = 0; i < c.diagrams.size(); ++i)
    os << "  " << i + 1 << ". " << to_string(c.diagrams[i]) << "  dual graph " << to_string(dual_graph(c.diagrams[i]))
       << "\n";
  doc.text = os.str();
  if (format == ReportFormat::Svg)
    for (std::size_t i = 0; i < c.diagrams.size(); ++i)
      doc.svgs.push_back({"diagram_" + std::to_string(i + 1) + ".svg",
                          svg_diagram(c.diagrams[i], to_string(c.stratum) + " " + to_string(c.shape) + " #" +
                                                         std::to_string(i + 1))});
  return doc;
}

Document render_report(const MonodromyReport &m, const Origami &o)
{
  Document doc;
  std::ostringstream os;
  os << "surface: " << to_line(o) << "\n";
  os << "stabilizer generators: " << m.generators.size() << "\n";
  for (std::size_t i = 0; i < m.generators.size(); ++i) {
    os << "  g" << i << " = " << to_string(m.generators[i].word) << ", relabeling "
       << format_cycles(m.generators[i].relabeling) << "\n";
    const IntMat &a = m.actions[i];
    for (std::size_t r = 0; r < a.rows(); ++r) {
      os << "    [";
      for (std::size_t c = 0; c < a.cols(); ++c)
        os << (c ? " " : "") << std::setw(3) << a(r, c);
      os << " ]\n";
    }
  }
  os << "symplectic: " << (m.symplectic ? "yes" : "no") << "\n";
  os << "zero-holonomy block preserved: " << (m.preserves_zero_holonomy ? "yes" : "no") << "\n";
  os << "closure: " << to_string(m.closure) << "\n";
  os << "status: " << m.label << "\n";
  doc.text = os.str();
  return doc;
}

} // namespace tsurf
