#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qplink {

/// A finite tree with integer vertex weights and a planar embedding
/// recorded as a cyclic order of neighbors at each vertex.
struct WeightedPlanarTree {
  std::vector<int> weights;
  std::vector<std::vector<int>> neighbors;  // cyclic order at each vertex

  /// Parses the s-expression form "(w child...)", e.g. "(-2 (-2) (-2 (-2)))".
  /// The first vertex of the expression becomes vertex 0.
  static WeightedPlanarTree parse(const std::string& expr);
  std::string to_expr(int root = 0) const;

  void validate() const;  // symmetric adjacency, connected, acyclic
  int valence(int v) const { return static_cast<int>(neighbors[v].size()); }
  bool is_node(int v) const { return valence(v) >= 3; }  // valence >= 3
};

/// A star: central weight c and the weights of its p >= 3 twigs in
/// cyclic order.
struct StarSpec {
  int c = 0;
  std::vector<int> twigs;
};

enum class StarClass { Positive, VeryStronglyQP, StronglyQP, Unknown };

/// Certificate cases, checked in this order:
///   VeryStronglyQP: c and all t_i even and strictly negative.
///   Positive: c = 0, no odd t_i negative, evenly many t_i > 0;
///          or c > 0, all t_i odd and negative, c + p even;
///          or c = 0, all t_i of one parity, pairwise sums < 0, all t_i < 0.
///   StronglyQP: c = 0, all t_i of one parity, pairwise sums < 0.
StarClass star_classify(const StarSpec& s);

/// One stick piece of a decomposition: a path of vertices all at
/// distance >= 2 from every node, with its weight tuple.
struct StickPiece {
  std::vector<int> vertices;  // path order
  std::vector<int> tuple;     // weights along the path
};

/// One star piece: a node together with all of its neighbors.
struct StarPiece {
  int center = 0;
  std::vector<int> twig_vertices;  // cyclic order
  StarSpec spec;
};

/// A side of a junction: which piece, and where on it (twig index for a
/// star, 0 = first / 1 = last end for a stick).
struct PieceRef {
  bool star = false;
  int index = 0;
  int position = 0;
};

struct Junction {
  PieceRef a, b;
};

struct TreeDecomposition {
  std::vector<StickPiece> sticks;
  std::vector<StarPiece> stars;
  std::vector<Junction> junctions;
};

/// Splits the tree into sticks and stars.  Stars are the nodes with
/// their neighbors; sticks are the path components of vertices not in
/// any star.  A tree without nodes is a single stick.  Junctions record
/// every place two pieces meet (a shared vertex or a connecting edge).
TreeDecomposition decompose(const WeightedPlanarTree& t);

enum class StickEnd { first, last };

/// Whether a plumbing patch at the given end of a certified stick can
/// be moved onto the quasipositive Seifert surface of its boundary:
/// true iff the end weight is < 0.  Throws "no qp certificate" unless
/// the stick classifies as Positive or VeryStronglyQP.
bool transplant_ok_stick(const std::vector<int>& r, StickEnd end);

/// The star analogue at twig i (0-based).  A star with c = 0, twigs of
/// one parity, and pairwise twig sums < 0 always accepts; otherwise a
/// Positive or VeryStronglyQP star accepts iff t_i < 0.  Throws
/// "no qp certificate" when no case applies.
bool transplant_ok_star(const StarSpec& s, int i);

struct TransplantCertificate {
  std::vector<std::string> steps;  // assembly order with the case used per piece
};

/// Tries to assemble the tree's surface piece by piece (breadth-first
/// over pieces from a maximal-valence node, ties broken by vertex
/// label, so every prefix is a subtree), succeeding iff every piece is
/// certified and every junction accepts on the already-placed side.
std::optional<TransplantCertificate> sqp_by_transplant(const WeightedPlanarTree& t);

struct TreeClassification {
  bool very_strongly_qp = false;
  bool positive = false;
  bool strongly_qp_certified = false;
  bool unknown = false;
  std::vector<std::string> certificate;
};

/// very_strongly_qp iff every weight is even and strictly negative.
/// positive is decided by the stick/star criteria only when every
/// non-node weight is nonzero and no two adjacent nodes both have
/// weight zero; otherwise that route reports unknown.
/// strongly_qp_certified is additionally set when transplantation
/// succeeds.
TreeClassification classify(const WeightedPlanarTree& t);

}  // namespace qplink
