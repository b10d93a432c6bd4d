#pragma once

// Conformal-block combinatorics: admissible colorings of trivalent graphs,
// dimensions N(g,p) with Zagier / recurrence cross-checks, exact signs of
// the Hermitian norms H(X,X) at roots of unity, signatures, and the
// central-element obstruction.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pseudou/cyclo.hpp"

namespace pseudou::blocks {

using cyclo::BigInt;
using cyclo::RootOfUnity;

struct degenerate_form_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Connected graph, every vertex of degree 3; loops and multi-edges
// allowed.  Genus = first Betti number E - V + 1.
struct TrivalentGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  // genus one has no trivalent graph without leaves; the convention is a
  // single vertex with one loop, handled specially by the enumerators
  bool genus_one_convention = false;

  int genus() const {
    return static_cast<int>(edges.size()) - num_vertices + 1;
  }
  void validate() const;  // throws std::invalid_argument
};

enum class GraphVariant { Default, Dumbbell, K4 };

// g = 2: theta (default) or dumbbell; g = 3: three loops on a tripod
// (default) or K4; g >= 4: chain of loops along a spine.
TrivalentGraph standard_genus_graph(int g,
                                    GraphVariant variant = GraphVariant::Default);

// Odd p: colors {0, 2, ..., p-3}, triangle inequality at each vertex,
// vertex sum <= 2(p-2).  Even p (even_rule): colors {0, 1, ..., p/2-2},
// even vertex sums, triangle inequality, vertex sum <= p-4.
BigInt count_admissible(const TrivalentGraph& graph, int p,
                        bool even_rule = false);

// N(g,p) through count_admissible, hard-failing on any applicable
// cross-check (Zagier closed forms for even p, g in {2,3,4}; the level-5
// recurrence; the 2^g relation between levels p and 2p for small cases).
BigInt dim_blocks(int g, int p);

struct CongruenceReport {
  BigInt N;
  int theta = 0;     // theta(p)
  BigInt residue;    // N mod theta (g >= 3) or 10 N mod theta (g = 2)
  bool pass = false;
};

// g >= 3: theta(p) | N(g,p); g = 2: theta(p) | 10 N(2,p).
CongruenceReport congruence_check(int g, int p);

struct ParityReport {
  BigInt N;
  bool odd = false;
  bool predicted_odd = false;
  bool pass = false;
};

// p = 5: N(g,5) odd iff g != 1 mod 3.  p = 4n+2 (even rule) or p = 8n+-3:
// N(3,p) odd.
ParityReport parity_checks(int g, int p);

// Per-coloring sign data at a primitive 2p-th root zeta:
// sign H(X,X) = prod_v sign<a,b,c> * prod_e sign<c_e>, with
// <a> = (-1)^a [a+1] and the standard quantum 6j-style vertex symbol.
class SignTable {
 public:
  SignTable(int p, const RootOfUnity& zeta);
  int edge_sign(int color) const;
  int vertex_sign(int a, int b, int c) const;
  int p() const { return p_; }

 private:
  int p_;
  std::vector<int> s1_;  // s1_[m] = sign [m] at zeta, m = 1..p-1
  std::vector<int> sf_;  // prefix products: sign [m]!
};

struct SignatureRecord {
  int g = 0;
  int p = 0;
  RootOfUnity zeta{1, 0};
  BigInt N;
  BigInt sigma;
  BigInt h_plus;
};

// Exact sign of H(X,X) for a single coloring (colors indexed like
// graph.edges).
int norm_sign(const TrivalentGraph& graph, const std::vector<int>& colors,
              const RootOfUnity& zeta);

// Signature of the Hermitian form on the genus-g block space at a
// primitive 2p-th root of unity, odd p.
SignatureRecord signature(int g, int p, const RootOfUnity& zeta);

struct CentralObstruction {
  double phase = 0.0;        // (-6 h+ arg zeta) mod 2pi
  long phase_numerator = 0;  // phase = phase_numerator * pi / p, exact
  bool nonvanishing = false; // h+ not divisible by p
};

CentralObstruction central_obstruction(int g, int p, const RootOfUnity& zeta);

// Enumeration backbone shared by counting and signature: calls visit once
// per admissible coloring.  Exposed for tests.
void enumerate_admissible(const TrivalentGraph& graph, int p, bool even_rule,
                          const std::function<void(const std::vector<int>&)>& visit);

}  // namespace pseudou::blocks
