#pragma once

#include "arcmod/matrix.hpp"
#include "arcmod/quiver.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace arcmod {

// Color of a stable tube: the distinguished -inf color, or a point of the
// projective line stored as a normalized ratio [a : b].
struct TubeColor {
  bool neg_inf = true;
  BigInt a = 0, b = 0;  // normalized: gcd 1, b >= 0, a > 0 when b == 0

  static TubeColor minus_infinity() { return TubeColor{}; }
  static TubeColor point(const BigInt& a, const BigInt& b);
  static TubeColor infinity_point() { return point(1, 0); }
  static TubeColor from_rational(const Rat& r) { return point(numerator(r), denominator(r)); }

  bool is_point() const { return !neg_inf; }
  bool operator==(const TubeColor& o) const { return neg_inf == o.neg_inf && a == o.a && b == o.b; }
  bool operator<(const TubeColor& o) const;
  std::string to_string() const;  // "-inf" or "[a:b]"
  static TubeColor parse(const std::string& s);
};

enum class ComponentKind { Preprojective, Preinjective, Regular };

// Symbolic position of an indecomposable inside the AR quiver.
struct ModuleCoordinate {
  ComponentKind component = ComponentKind::Regular;
  // Preprojective (j,k): tau^{-k} P(j). Preinjective (j,k): tau^{k} I(j).
  int vertex = 0;
  int power = 0;
  // Regular: tube data.
  TubeColor color;
  int socle = 0;         // residue modulo tube rank
  int quasi_length = 0;  // >= 1

  bool operator==(const ModuleCoordinate& o) const;
  std::string to_string() const;
};

enum class StandardKind { Projective, Injective };
enum class ReflectAt { Sink, Source };
enum class Direction { Forward, Inverse };

// Quiver representation over exact rationals: one matrix per arrow of shape
// dims[target] x dims[source].
struct Representation {
  Quiver quiver;
  std::vector<BigInt> dims;  // index v-1 for vertex v
  std::vector<QMat> maps;    // parallel to quiver.arrows

  bool is_zero() const;
  BigInt total_dim() const;
  void check_shapes() const;  // throws on malformed data
};

Representation zero_rep(const Quiver& q);
Representation standard_rep(const Quiver& q, StandardKind kind, int vertex);

// The one-parameter family of Example-style regular representations at the
// mouth-level data: dims = delta, fixed inclusion/projection maps, the [1 λ]
// slot at the lower-right arrow ([0 1] for λ = infinity).
Representation mouth_family_rep(int n, const TubeColor& lambda);

// Jordan-block thickening of the family: quasi-length grows with the block
// size (used to reach arbitrary quasi-lengths by peeling).
Representation regular_block_rep(int n, const TubeColor& lambda, int block);

long hom_dim(const Representation& m, const Representation& n);
long ext1_dim(const Representation& m, const Representation& n);

Representation reflect(const Representation& m, int vertex, ReflectAt at);
Representation tau(const Representation& m, Direction dir = Direction::Forward);
Representation transport_rep(const Representation& m, const Quiver& target);
Representation dual_rep(const Representation& m);

bool is_projective_rep(const Representation& m);
bool is_injective_rep(const Representation& m);

// Isomorphism test for indecomposables per the artifact convention:
// equal dimension vectors plus hom_dim = 1 in both directions.
bool iso_indec(const Representation& a, const Representation& b);

// Nonzero homomorphisms M -> N as matrix tuples; basis of the solution space.
std::vector<std::vector<QMat>> hom_basis(const Representation& m, const Representation& n);
Representation image_rep(const Representation& m, const Representation& n,
                         const std::vector<QMat>& f);

// Tube bookkeeping over the canonical orientation: mouth modules of the tube
// of the given color, indexed so that mouth(s+1) = tau(mouth(s)).
std::vector<Representation> tube_mouths(int n, const TubeColor& color);
// Regular indecomposable with the given tube color, quasi-socle index and
// quasi-length, over the canonical orientation.
Representation regular_rep(int n, const TubeColor& color, int socle, int quasi_length);
int tube_rank(int n, const TubeColor& color);
// Expected dimension vector of regular_rep, from the mouth dims.
std::vector<BigInt> tube_dims(int n, const TubeColor& color, int socle, int quasi_length);

// Component classification. candidate_colors lists the Point colors probed
// for rank-1 tubes (the exceptional colors 0, 1, inf are always probed).
ModuleCoordinate classify_component(const Representation& m,
                                    const std::vector<TubeColor>& candidate_colors = {});

// Rebuilds the module named by a coordinate over the given acyclic quiver
// (canonical construction + transport).
Representation coordinate_rep(const ModuleCoordinate& c, const Quiver& q);

}  // namespace arcmod
