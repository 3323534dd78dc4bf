#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tsurf {

using Perm = std::vector<int>;

Perm perm_inverse(const Perm &p);
// (a * b)(i) = a(b(i))
Perm perm_compose(const Perm &a, const Perm &b);
std::vector<std::vector<int>> perm_cycles(const Perm &p);
// Cycle notation with fixed points omitted, "()" for the identity.
std::string format_cycles(const Perm &p);
// Parses "(0 1 2)(3 4)"; n is the size of the underlying set.
Perm parse_cycles(const std::string &text, int n);

// Square-tiled surface: h(i) is the square to the right of i, v(i) the square above.
struct Origami {
  int n = 0;
  Perm h, v;

  Perm h_inv() const { return perm_inverse(h); }
  Perm v_inv() const { return perm_inverse(v); }
  // h v h^-1 v^-1; its cycles are the vertices (bottom-left corners of squares).
  Perm commutator() const;
  bool operator==(const Origami &) const = default;
};

Origami build_origami(const Perm &h, const Perm &v);
// Parses `origami h="(..)" v="(..)"`; the square count is one more than the largest label.
Origami parse_origami_line(const std::string &line);
std::vector<Origami> parse_origami_file(const std::string &text);
std::string to_line(const Origami &o);

struct Stratum {
  std::vector<int> kappa; // descending
  int genus = 1;
  bool operator==(const Stratum &) const = default;
};

// Validates sum(kappa) = 2g - 2.
Stratum make_stratum(std::vector<int> kappa);
Stratum singularity_data(const Origami &o);
std::string to_string(const Stratum &s);

// Vertex data of the square tiling: vertex_of[i] is the vertex at the bottom-left corner of square i.
struct VertexData {
  std::vector<int> vertex_of;
  std::vector<std::vector<int>> cycles; // commutator cycles
  std::vector<int> order;               // cone excess: cycle length - 1
};
VertexData vertex_data(const Origami &o);

enum class Gen { T, Tinv, S };
using Word = std::vector<Gen>;
using Mat2 = std::array<std::array<long, 2>, 2>;

Word parse_word(const std::string &text); // e.g. "T,S,Ti"
std::string to_string(const Word &w);
Mat2 gen_matrix(Gen g);
// Product of the letter matrices, left to right.
Mat2 word_matrix(const Word &w);
Mat2 mat_mul(const Mat2 &a, const Mat2 &b);

Origami act_generator(const Origami &o, Gen g);
// The rightmost letter acts first, so act(o, w1 w2) = act(act(o, w2), w1).
Origami act_sl2z(const Origami &o, const Word &w);

// Simultaneous relabeling: sigma sends square i to sigma(i).
Origami relabel(const Origami &o, const Perm &sigma);

struct CanonicalForm {
  Origami form;
  Perm relabeling; // form = relabel(o, relabeling)
};
CanonicalForm canonical_form(const Origami &o);
// A permutation sigma with relabel(a, sigma) == b.
std::optional<Perm> isomorphism(const Origami &a, const Origami &b);

Origami torus();
Origami wollmilchsau();
Origami l_origami();

} // namespace tsurf
