#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qplink {

/// Planar link diagram as a PD code: one 4-tuple of edge labels per
/// crossing, listed counterclockwise starting on the under-strand (slots
/// 0 and 2 carry the under-strand, 1 and 3 the over-strand; strand
/// directions are inferred, so codes with slot 0 incoming are accepted
/// unchanged).  Every edge label occurs exactly twice.  An empty crossing
/// list encodes the round unknot.
///
/// Crossing signs use the right-handed convention: a crossing is positive
/// when the over-strand points 90 degrees clockwise from the under-strand,
///
///         over
///       ^
///        \ .
///   ------\------>  under      (positive)
///          \ .
struct PDDiagram {
  std::vector<std::array<int, 4>> crossings;
};

/// Direction choice per link component (component order: ascending least
/// edge label).  flip[0] is fixed to 0; a class and its global reversal
/// are identified.
struct OrientationAssignment {
  std::vector<int> flip;
};

struct SeifertData2D {
  int seifert_circles = 0;
  int crossings = 0;
  int euler = 0;
  bool positive = false;
};

/// Number of link components (cycles of edges under strand continuation).
int diagram_components(const PDDiagram& d);

/// Seifert's algorithm for the given orientation class: circle count s,
/// chi = s - c, and whether every crossing is positive.
SeifertData2D seifert_algorithm(const PDDiagram& d, const OrientationAssignment& o);

/// Search the 2^(components-1) orientation classes for one making every
/// crossing positive; returns the lexicographically least success.
/// Errors out beyond 20 components.
std::optional<OrientationAssignment> find_positive_orientation(const PDDiagram& d);

/// |H_1| of the double branched cover via the Goeritz matrix of a
/// checkerboard coloring; 0 encodes an infinite group.  Requires a
/// connected diagram.
long long link_determinant(const PDDiagram& d);

/// Standard pretzel diagram with p >= 3 twist bands; band i carries |t_i|
/// crossings whose chirality follows the sign of t_i.  Entries must be
/// nonzero.
PDDiagram pretzel_diagram(const std::vector<int>& t);

/// 4-plat closure of sigma_2^{r_1} sigma_3^{r_2} sigma_2^{r_3} ...; all
/// r_i nonzero.
PDDiagram four_plat_diagram(const std::vector<int>& r);

}  // namespace qplink
