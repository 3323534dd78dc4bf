#include "tsurf/monodromy.hpp"

#include "tsurf/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace tsurf {

namespace {

std::vector<Word> words_up_to(int bound)
{
  std::vector<Word> out, layer{{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<Word> next;
    for (const auto &w : layer)
      for (Gen g : {Gen::T, Gen::Tinv, Gen::S}) {
        Word x = w;
        x.push_back(g);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string word_in_generators(const std::vector<int> &letters)
{
  if (letters.empty())
    return "id";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i])
      ++j;
    int l = letters[i];
    long run = static_cast<long>(j - i) * (l >= 0 ? 1 : -1);
    os << (i ? " " : "") << "g" << (l >= 0 ? l : -l - 1);
    if (run != 1)
      os << "^" << run;
    i = j;
  }
  return os.str();
}

} // namespace

std::vector<StabilizerGenerator> stabilizer_generators(const Origami &o, int word_bound)
{
  if (word_bound < 1)
    throw ValidationError("word bound must be at least 1");
  std::vector<StabilizerGenerator> out;
  for (const auto &w : words_up_to(word_bound)) {
    Origami image = act_sl2z(o, w);
    if (auto sigma = isomorphism(image, o))
      out.push_back({w, *sigma});
  }
  return out;
}

IntMat homology_action(const HomologyBasis &b, const StabilizerGenerator &g)
{
  const Origami &o = b.origami;
  Origami image = act_sl2z(o, g.word);
  if (static_cast<int>(g.relabeling.size()) != o.n || relabel(image, g.relabeling).h != o.h ||
      relabel(image, g.relabeling).v != o.v)
    throw NotAStabilizer("word " + to_string(g.word) + " with the given relabeling does not fix the origami");
  std::vector<IntVec> cols;
  for (const auto &c : b.cycles)
    cols.push_back(coordinates(b, relabel_chain(g.relabeling, chain_map(o, g.word, c))));
  return IntMat::from_columns(cols, 2 * b.genus);
}

IntMat homology_action(const Origami &o, const StabilizerGenerator &g)
{
  return homology_action(homology_basis(o), g);
}

bool is_symplectic(const IntMat &m, const IntMat &omega)
{
  return m.transpose() * omega * m == omega;
}

IntMat zero_holonomy_basis(const HomologyBasis &b)
{
  auto hol = holonomy(b);
  IntMat h = IntMat::from_rows({hol.x, hol.y}, 2 * b.genus);
  auto ker = integer_kernel(h);
  return IntMat::from_columns(ker, 2 * b.genus);
}

IntMat restrict_to(const IntMat &m, const IntMat &basis)
{
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    auto x = solve_integer(basis, m * basis.column(j));
    if (!x)
      throw std::logic_error("action does not preserve the sublattice");
    cols.push_back(*x);
  }
  return IntMat::from_columns(cols, basis.cols());
}

std::string to_string(const ClosureResult &r)
{
  std::ostringstream os;
  if (r.status == ClosureResult::Status::Finite)
    os << "Finite(order " << r.order << ")";
  else
    os << "Unbounded(witness " << r.witness << ", norm " << r.norm << ")";
  return os.str();
}

ClosureResult closure_classify(const std::vector<IntMat> &generators, std::int64_t norm_bound,
                               std::size_t element_cap)
{
  ClosureResult r;
  if (generators.empty()) {
    r.order = 1;
    return r;
  }
  std::size_t n = generators.front().rows();
  std::vector<std::pair<IntMat, int>> steps; // (matrix, letter)
  for (std::size_t i = 0; i < generators.size(); ++i) {
    steps.push_back({generators[i], static_cast<int>(i)});
    auto inv = inverse_unimodular(generators[i]);
    if (!inv)
      throw ValidationError("closure generators must be invertible over Z");
    steps.push_back({*inv, -static_cast<int>(i) - 1});
  }

  // breadth-first search keeping only parent links; words are rebuilt for the witness
  struct Node {
    const IntMat *parent = nullptr;
    int letter = 0;
  };
  std::map<IntMat, Node> seen;
  std::deque<const IntMat *> queue;
  queue.push_back(&seen.emplace(IntMat::identity(n), Node{}).first->first);
  auto word_to = [&](const IntMat *g) {
    std::vector<int> w;
    for (; g; g = seen.at(*g).parent)
      if (seen.at(*g).parent)
        w.push_back(seen.at(*g).letter);
    std::reverse(w.begin(), w.end());
    return w;
  };
  while (!queue.empty()) {
    const IntMat *g = queue.front();
    queue.pop_front();
    for (const auto &[s, letter] : steps) {
      IntMat x = *g * s;
      if (seen.count(x))
        continue;
      if (x.max_abs() > norm_bound || seen.size() >= element_cap) {
        auto w = word_to(g);
        w.push_back(letter);
        r.status = ClosureResult::Status::Unbounded;
        r.order = seen.size();
        r.witness = word_in_generators(w);
        r.norm = x.max_abs();
        return r;
      }
      queue.push_back(&seen.emplace(std::move(x), Node{g, letter}).first->first);
    }
  }
  r.order = seen.size();
  return r;
}

MonodromyReport monodromy_report(const Origami &o, int word_bound, std::int64_t norm_bound)
{
  MonodromyReport rep;
  HomologyBasis b = homology_basis(o);
  rep.generators = stabilizer_generators(o, word_bound);
  IntMat K = b.genus > 1 ? zero_holonomy_basis(b) : IntMat();
  auto hol = holonomy(b);
  for (const auto &g : rep.generators) {
    IntMat m = homology_action(b, g);
    rep.symplectic = rep.symplectic && is_symplectic(m, b.omega);
    rep.actions.push_back(m);
    if (b.genus > 1) {
      for (std::size_t j = 0; j < K.cols(); ++j) {
        IntVec img = m * K.column(j);
        rep.preserves_zero_holonomy =
            rep.preserves_zero_holonomy && dot(hol.x, img) == 0 && dot(hol.y, img) == 0;
      }
      rep.restricted.push_back(restrict_to(m, K));
    }
  }
  std::vector<IntMat> unique;
  for (const auto &m : b.genus > 1 ? rep.restricted : rep.actions)
    if (std::find(unique.begin(), unique.end(), m) == unique.end())
      unique.push_back(m);
  rep.closure = closure_classify(unique, norm_bound);
  return rep;
}

ForniReport forni_upper_bound(const Origami &o, long direction_bound)
{
  ForniReport rep;
  rep.genus = singularity_data(o).genus;
  if (rep.genus < 2)
    throw ValidationError("Forni bounds need genus at least 2");
  rep.upper_bound = 2 * rep.genus - 2;
  for (const auto &dir : enumerate_directions(direction_bound)) {
    auto d = periodic_decomposition(o, dir);
    DirectionBound db;
    db.direction = dir;
    db.label = case_label(d);
    db.core_span_rank = core_span_rank(d);
    db.bound = 2 * (rep.genus - db.core_span_rank);
    rep.upper_bound = std::min(rep.upper_bound, db.bound);
    rep.witnesses.push_back(db);
  }
  return rep;
}

bool zero_eval_check(const std::vector<Rational> &covector, const std::vector<HomologyClass> &classes)
{
  for (const auto &c : classes) {
    if (c.size() != covector.size())
      throw ShapeMismatch("covector and class lengths differ");
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      s += covector[i] * Rational(static_cast<long>(c[i]));
    if (s != 0)
      return false;
  }
  return true;
}

HomologyClass trajectory_class(const CylinderDecomposition &d, const Trace &t)
{
  if (!t.closed)
    throw ValidationError("trajectory is not closed");
  const Origami &o = d.frame;
  int n = o.n;
  IntVec dual(2 * n, 0);
  for (const auto &step : t.steps) {
    const auto &cyl = d.cylinders[step.cylinder];
    long w = to_int64(cyl.w);
    auto column = [&](const Rational &pos) {
      long k = floor_of(pos).get_si() % w;
      return k < 0 ? k + w : k;
    };
    Rational pos = step.entry;
    for (std::size_t r = 0; r < cyl.rows.size(); ++r) {
      Rational next = pos + t.lambda;
      const auto &row = cyl.rows[r];
      if (t.lambda > 0) {
        for (mpz_class m = floor_of(pos) + 1; m <= next; ++m)
          dual[row[column(Rational(m) - 1)]] += 1;
      } else if (t.lambda < 0) {
        for (mpz_class m = floor_of(pos); m > next; --m)
          if (Rational(m) <= pos)
            dual[row[column(Rational(m) - 1)]] -= 1;
      }
      pos = next;
      dual[n + row[column(pos)]] += 1;
    }
  }
  HomologyBasis b = homology_basis(o);
  IntVec w;
  for (const auto &c : b.cycles)
    w.push_back(primal_dual_intersection(o, c, dual));
  return b.omega_inv * w;
}

HomologyClass witness_class(const CylinderDecomposition &d, const TransverseWitness &w)
{
  Rational mid = (w.band.lo + w.band.hi) / 2;
  Trace t = trace_trajectory(d.net, w.route.front(), mid, w.lambda, static_cast<int>(w.route.size()) + 1);
  HomologyClass frame_class = trajectory_class(d, t);
  DecompositionHomology dh = decomposition_homology(d);
  return dh.from_frame * frame_class;
}

Direction witness_direction(const CylinderDecomposition &d, const TransverseWitness &w)
{
  Mat2 m = word_matrix(d.word);
  // inverse of a determinant-one matrix
  Rational x = Rational(m[1][1]) * w.dx - Rational(m[0][1]) * w.dy;
  Rational y = -Rational(m[1][0]) * w.dx + Rational(m[0][0]) * w.dy;
  mpz_class den = lcm(x.get_den(), y.get_den());
  mpz_class X = Rational(x * den).get_num(), Y = Rational(y * den).get_num();
  mpz_class g = gcd(X, Y);
  X /= g;
  Y /= g;
  if (X < 0 || (X == 0 && Y < 0)) {
    X = -X;
    Y = -Y;
  }
  return {Y.get_si(), X.get_si()};
}

ForniCriterionVerdict new_forni_criterion(const CylinderDecomposition &d, const HomologyClass &beta,
                                          const TransverseWitness &witness)
{
  ForniCriterionVerdict v;
  Pinch p = pinch(d.diagram);
  int elliptic = -1;
  for (std::size_t i = 0; i < p.graph.vertices.size(); ++i)
    if (p.graph.vertices[i].genus > 0) {
      if (elliptic >= 0 || p.graph.vertices[i].genus != 1)
        elliptic = -2;
      else if (elliptic == -1)
        elliptic = static_cast<int>(i);
    }
  if (p.graph.geometric_genus() != 1 || elliptic < 0)
    throw HypothesisFailed("the cylinder pinch does not have exactly one elliptic component");
  v.elliptic_component = elliptic;

  if (!verify_witness(d.net, witness))
    throw HypothesisFailed("the witness trajectory does not close as a transverse cylinder");
  int arcs_on_elliptic = 0;
  for (int s : witness.saddles) {
    v.arc_components.push_back(p.saddle_component[s]);
    if (p.saddle_component[s] == elliptic)
      ++arcs_on_elliptic;
  }
  if (arcs_on_elliptic == 0)
    throw HypothesisFailed("beta is supported off the elliptic component");
  if (arcs_on_elliptic > 1)
    throw HypothesisFailed("beta meets the elliptic component in more than one arc");

  HomologyClass cls = witness_class(d, witness);
  if (cls != beta)
    throw HypothesisFailed("beta is not the class of the witness core curve");
  v.witness_direction = witness_direction(d, witness);
  auto wd = periodic_decomposition(d.source, v.witness_direction);
  auto cores = core_classes(wd, decomposition_homology(wd));
  HomologyClass neg = beta;
  for (auto &x : neg)
    x = -x;
  if (std::find(cores.begin(), cores.end(), beta) == cores.end() &&
      std::find(cores.begin(), cores.end(), neg) == cores.end())
    throw HypothesisFailed("beta is not a core curve class in the witness direction");
  v.verdict = "trivial Forni subspace";
  return v;
}

} // namespace tsurf
