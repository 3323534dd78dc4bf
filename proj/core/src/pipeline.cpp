#include "tsurf/pipeline.hpp"

#include "tsurf/errors.hpp"
#include "tsurf/jump.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

namespace tsurf {

std::string to_string(VerdictStatus s)
{
  switch (s) {
  case VerdictStatus::TrivialForni:
    return "TrivialForni";
  case VerdictStatus::WollmilchsauEquivalent:
    return "WollmilchsauEquivalent";
  case VerdictStatus::Undetermined:
    return "Undetermined";
  }
  return "?";
}

std::string to_string(DiagramShape s)
{
  return s == DiagramShape::OneCylinder ? "one_cylinder" : "case6";
}

DiagramShape parse_shape(const std::string &text)
{
  if (text == "one_cylinder")
    return DiagramShape::OneCylinder;
  if (text == "case6")
    return DiagramShape::Case6;
  throw ValidationError("unknown diagram shape '" + text + "' (expected one_cylinder or case6)");
}

namespace {

std::string format_class(const HomologyClass &c)
{
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i)
    os << (i ? " " : "") << c[i];
  os << ")";
  return os.str();
}

void resolve_transverse(const CylinderDecomposition &d, TransverseCase tc, DirectionRecord &rec)
{
  auto w = find_crossing_cylinder(d.net, tc);
  if (!w) {
    rec.mechanism = "no transverse cylinder found (" + to_string(tc) + ")";
    return;
  }
  rec.witness = to_string(*w);
  try {
    HomologyClass beta = witness_class(d, *w);
    auto v = new_forni_criterion(d, beta, *w);
    rec.resolved = true;
    rec.mechanism = to_string(tc) + " transverse cylinder, " + v.verdict;
    rec.witness += " beta " + format_class(beta) + " direction " + to_string(v.witness_direction);
  } catch (const HypothesisFailed &e) {
    rec.mechanism = std::string("criterion not applicable: ") + e.what();
  }
}

void resolve_case3(DirectionRecord &rec)
{
  std::vector<long> n;
  for (const auto &e : rec.graph.edges)
    if (e.a != e.b)
      n.push_back(rec.moduli[e.cylinder]);
  Case3Input in;
  in.n1 = n.at(0);
  in.n2 = n.at(1);
  auto v = case3_verdict(rec.graph, in);
  std::ostringstream os;
  os << "branch (" << v.branch << "), coefficient " << v.coefficient << " at order " << v.order;
  rec.witness = os.str();
  rec.mechanism = "Case 3 period expansion: " + v.verdict;
  rec.resolved = v.verdict == "Forni impossible";
}

void resolve_case6(const CylinderDecomposition &d, DirectionRecord &rec)
{
  Case6Input in;
  in.r1 = rec.moduli.at(0);
  in.r2 = rec.moduli.at(1);
  auto f = case6_moduli_forcing(rec.graph, in);
  if (f.forced) {
    std::ostringstream os;
    os << "det(dPi/ds) leading coefficient " << f.coefficient << " at order " << f.order;
    rec.witness = os.str();
    rec.mechanism = "Case 6 unequal moduli: " + f.verdict;
    rec.resolved = true;
    return;
  }
  try {
    auto wc = measure_window(d.net);
    auto wf = window_feasible(wc);
    std::ostringstream os;
    os << "t0 " << wc.t0 << " s0 " << wc.s0 << " t_start " << wc.t_start << " slack " << wf.slack;
    rec.witness = os.str();
    if (!wf.feasible) {
      std::string why;
      for (const auto &s : wf.violated)
        why += (why.empty() ? "" : "; ") + s;
      rec.mechanism = "Case 6 window violated: " + why;
      rec.resolved = true;
    } else {
      rec.mechanism = wf.boundary ? "Case 6 survives at the window boundary" : "Case 6 window feasible";
    }
  } catch (const ValidationError &e) {
    rec.mechanism = std::string("Case 6 window not measurable: ") + e.what();
  }
}

} // namespace

DirectionRecord analyze_direction(const Origami &o, Direction dir, const AnalysisBounds &bounds)
{
  auto d = periodic_decomposition(o, dir);
  DirectionRecord rec;
  rec.direction = dir;
  rec.label = case_label(d);
  rec.net = d.net;
  rec.graph = dual_graph(d.diagram);
  rec.moduli = moduli_exponents(d);
  switch (rec.label) {
  case CaseLabel::Case1:
    resolve_transverse(d, TransverseCase::Case1, rec);
    break;
  case CaseLabel::Case2:
    resolve_transverse(d, TransverseCase::Case2, rec);
    break;
  case CaseLabel::Case4:
    if (diagrams_isomorphic(d.diagram, diagram_4a()))
      resolve_transverse(d, TransverseCase::Case4A, rec);
    else if (diagrams_isomorphic(d.diagram, diagram_4b()))
      resolve_transverse(d, TransverseCase::Case4B, rec);
    else
      rec.mechanism = "Case 4 diagram outside the two admissible shapes";
    break;
  case CaseLabel::Case3:
    resolve_case3(rec);
    break;
  case CaseLabel::Case5: {
    rec.mechanism = "Case 5: no simple-cylinder direction within the scan bound";
    if (bounds.case5_scan_bound <= 0)
      break;
    AnalysisBounds inner = bounds;
    inner.case5_scan_bound = 0;
    for (const auto &other : enumerate_directions(bounds.case5_scan_bound)) {
      if (other == dir)
        continue;
      auto od = periodic_decomposition(o, other);
      if (!has_simple_cylinder(od))
        continue;
      auto sub = analyze_direction(o, other, inner);
      if (!sub.resolved)
        continue;
      rec.resolved = true;
      rec.mechanism = "Case 5, simple cylinder in direction " + to_string(other) + " (" + to_string(sub.label) +
                      "): " + sub.mechanism;
      rec.witness = sub.witness;
      break;
    }
    break;
  }
  case CaseLabel::Case6:
    resolve_case6(d, rec);
    break;
  case CaseLabel::None:
    // the six-case table is the complete list of admissible pinch graphs only in H(1,1,1,1)
    if (singularity_data(o).kappa == std::vector<int>{1, 1, 1, 1}) {
      rec.resolved = true;
      rec.mechanism = "pinch graph " + to_string(rec.graph) + " outside the admissible table";
    } else {
      rec.mechanism = "pinch graph matches none of the six cases";
    }
    break;
  }
  return rec;
}

Verdict classify_surface(const Origami &o, const AnalysisBounds &bounds)
{
  Verdict v;
  v.origami = o;
  v.stratum = singularity_data(o);
  v.direction_bound = bounds.direction_bound;
  if (v.stratum.genus != 3)
    throw GenusMismatch("classification needs genus 3, got genus " + std::to_string(v.stratum.genus));

  auto dirs = enumerate_directions(bounds.direction_bound);
  if (bounds.parallel) {
    std::vector<std::future<DirectionRecord>> jobs;
    for (const auto &dir : dirs)
      jobs.push_back(std::async(std::launch::async, [&o, dir, &bounds] { return analyze_direction(o, dir, bounds); }));
    for (auto &j : jobs)
      v.evidence.push_back(j.get());
  } else {
    for (const auto &dir : dirs)
      v.evidence.push_back(analyze_direction(o, dir, bounds));
  }

  const auto &horizontal = v.evidence.front();
  if (horizontal.label == CaseLabel::Case6) {
    try {
      v.window = measure_window(horizontal.net);
      v.window_result = window_feasible(*v.window);
    } catch (const ValidationError &) {
    }
  }

  for (const auto &r : v.evidence)
    if (r.resolved) {
      v.status = VerdictStatus::TrivialForni;
      v.summary = "direction " + to_string(r.direction) + ": " + r.mechanism;
      return v;
    }

  bool all_case6 = std::all_of(v.evidence.begin(), v.evidence.end(),
                               [](const DirectionRecord &r) { return r.label == CaseLabel::Case6; });
  if (all_case6) {
    auto eq = wollmilchsau_check(o);
    if (eq.equivalent) {
      v.status = VerdictStatus::WollmilchsauEquivalent;
      v.summary = "every direction is Case 6; " + eq.reason;
    } else {
      v.summary = "every direction is Case 6 but " + eq.reason;
    }
    return v;
  }
  std::string tried;
  for (const auto &r : v.evidence)
    if (!r.resolved)
      tried += (tried.empty() ? "" : ", ") + to_string(r.direction) + " " + to_string(r.label);
  v.summary = "no direction resolved within bound " + std::to_string(bounds.direction_bound) + " (tried " + tried + ")";
  return v;
}

DiagramCatalog enumerate_diagrams(const Stratum &stratum, DiagramShape shape)
{
  if (stratum.genus > 3)
    throw ValidationError("diagram enumeration is limited to genus at most 3");
  DiagramCatalog cat;
  cat.stratum = stratum;
  cat.shape = shape;
  int s = 0;
  for (int k : stratum.kappa)
    s += k + 1;
  int c = shape == DiagramShape::OneCylinder ? 1 : 2;
  if (s < c)
    return cat;

  // sizes of the boundary sequences, one composition of s into c positive parts each
  std::vector<std::vector<int>> compositions;
  if (c == 1)
    compositions.push_back({s});
  else
    for (int k = 1; k < s; ++k)
      compositions.push_back({k, s - k});

  std::set<CylinderDiagram> found;
  std::vector<int> perm(s);
  for (const auto &bsizes : compositions) {
    CylinderDiagram base;
    int next = 0;
    for (int k : bsizes) {
      std::vector<int> b(k);
      std::iota(b.begin(), b.end(), next);
      next += k;
      base.bottom.push_back(b);
    }
    for (const auto &tsizes : compositions) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CylinderDiagram d = base;
        bool rotation_canonical = true;
        for (int i = 0, at = 0; i < c && rotation_canonical; at += tsizes[i], ++i) {
          std::vector<int> t(perm.begin() + at, perm.begin() + at + tsizes[i]);
          rotation_canonical = std::min_element(t.begin(), t.end()) == t.begin();
          d.top.push_back(std::move(t));
        }
        if (!rotation_canonical)
          continue;
        if (c == 2) {
          std::set<int> b0(d.bottom[0].begin(), d.bottom[0].end()), t0(d.top[0].begin(), d.top[0].end());
          bool b_extra = std::any_of(b0.begin(), b0.end(), [&](int x) { return !t0.count(x); });
          bool t_extra = std::any_of(t0.begin(), t0.end(), [&](int x) { return !b0.count(x); });
          // connected, with positive lengths balancing both circumferences
          if (!b_extra || !t_extra)
            continue;
        }
        if (diagram_kappa(d) != stratum.kappa || diagram_genus(d) != stratum.genus)
          continue;
        if (shape == DiagramShape::Case6 && classify_case(dual_graph(d)) != CaseLabel::Case6)
          continue;
        found.insert(canonical_diagram(d));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  cat.diagrams.assign(found.begin(), found.end());
  return cat;
}

EquivalenceReport wollmilchsau_check(const FlatSurfaceNet &net)
{
  EquivalenceReport rep;
  if (net.diagram.cylinders() != 2 || classify_case(dual_graph(net.diagram)) != CaseLabel::Case6)
    throw CaseMismatch("Wollmilchsau identification needs a Case-6 decomposition, got " + to_string(net.diagram));
  if (diagram_kappa(net.diagram) != std::vector<int>{1, 1, 1, 1}) {
    rep.reason = "the stratum is not H(1,1,1,1)";
    return rep;
  }
  const auto &c1 = net.cylinders[0];
  const auto &c2 = net.cylinders[1];
  if (c1.ht / c1.w != c2.ht / c2.w) {
    rep.reason = "the moduli differ, which the period determinant excludes";
    return rep;
  }
  auto wc = measure_window(net);
  rep.window = window_feasible(wc);
  if (!rep.window->feasible) {
    rep.reason = "window constraint violated:";
    for (const auto &s : rep.window->violated)
      rep.reason += " " + s;
    rep.reason += " (slack " + to_string(rep.window->slack) + ")";
    return rep;
  }
  if (!rep.window->boundary) {
    rep.reason = "window constraints hold without equality";
    return rep;
  }
  if (!diagrams_isomorphic(net.diagram, diagram_case6())) {
    rep.reason = "the cylinder diagram differs from the reference Case-6 diagram";
    return rep;
  }
  // affine normalization: circumference 4, unit heights, first twist sheared away
  FlatSurfaceNet n = rescale(net, Rational(4) / c1.w, Rational(1) / c1.ht);
  std::vector<CylinderMetric> metrics = n.cylinders;
  Rational shear = metrics[0].tw / metrics[0].ht;
  for (auto &m : metrics)
    m.tw = mod(m.tw - shear * m.ht, m.w);
  for (const auto &m : metrics)
    if (m.tw.get_den() != 1) {
      rep.reason = "the normalized twists are not integral";
      return rep;
    }
  for (const auto &l : n.saddle_lengths)
    if (l.get_den() != 1) {
      rep.reason = "the normalized saddle lengths are not integral";
      return rep;
    }
  Origami sq = net_to_origami(build_net(metrics, n.diagram, n.saddle_lengths), 1);
  if (!isomorphism(sq, wollmilchsau())) {
    rep.reason = "the normalized origami " + to_line(sq) + " is not the reference surface";
    return rep;
  }
  rep.equivalent = true;
  rep.reason = "moduli equal, window at (1/4, 1/4, 0), normalized origami matches the reference";
  return rep;
}

EquivalenceReport wollmilchsau_check(const Origami &o)
{
  auto d = horizontal_decomposition(o);
  if (case_label(d) != CaseLabel::Case6)
    throw CaseMismatch("Wollmilchsau identification needs a horizontal Case-6 decomposition, got " +
                       to_string(case_label(d)));
  return wollmilchsau_check(d.net);
}

bool wollmilchsau_equivalent(const Origami &o)
{
  return wollmilchsau_check(o).equivalent;
}

} // namespace tsurf
