#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qplink {

/// One letter of a braid word: generator index i (1 <= i <= strands-1)
/// with sign +1 or -1.
struct BraidLetter {
  int index = 1;
  int sign = +1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidPermutation;

/// A word in the braid group B_n.  The empty word is the identity.
/// Words are stored as written; use freely_reduced() or compose() to
/// cancel adjacent inverse pairs.
class BraidWord {
 public:
  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("braid: strands must be >= 1");
  }
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  void push(int index, int sign);
  void append(const BraidWord& other);

  BraidWord inverse() const;
  BraidWord freely_reduced() const;

  /// Image in the symmetric group (letter signs ignored).
  BraidPermutation permutation() const;

  /// Sum of letter signs.
  long long exponent_sum() const;

  /// Text form "s1 s2^-1 ...".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// A bijection of {1..n}.  map(i) is the position where the strand
/// starting at position i ends.
class BraidPermutation {
 public:
  explicit BraidPermutation(int n);  // identity
  explicit BraidPermutation(std::vector<int> images);  // 1-based images

  int size() const { return static_cast<int>(images_.size()); }
  int map(int i) const { return images_[i - 1]; }

  bool is_identity() const;
  BraidPermutation inverse() const;

  /// this-then-other (apply *this first).
  BraidPermutation then(const BraidPermutation& other) const;

  void swap_images(int i, int j);  // compose on the left with (i j)

  /// Cycles as sorted lists of elements; cycles ordered by least element.
  std::vector<std::vector<int>> cycles() const;

  std::vector<int> one_line() const { return images_; }

  friend bool operator==(const BraidPermutation&, const BraidPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// A positive band ^g(s_i) = g s_i g^-1: a conjugate of a standard
/// generator.  Its expansion always has exponent sum +1.
struct PositiveBand {
  BraidWord conjugator;
  int index = 1;

  PositiveBand(BraidWord g, int i);

  int strands() const { return conjugator.strands(); }
  BraidWord expand() const;

  friend bool operator==(const PositiveBand&, const PositiveBand&) = default;
};

/// A tuple of positive bands in B_n; encodes a braided Seifert surface
/// with n disks and one band per entry.
struct BandRepresentation {
  int strands = 1;
  std::vector<PositiveBand> bands;

  explicit BandRepresentation(int n) : strands(n) {
    if (n < 1) throw std::invalid_argument("band representation: strands must be >= 1");
  }
  BandRepresentation(int n, std::vector<PositiveBand> bs);

  std::size_t band_count() const { return bands.size(); }
};

/// Surface bookkeeping for the braided surface of a band representation.
struct SurfaceComponent {
  std::vector<int> strings;  // sorted
  int band_count = 0;
  int euler = 0;
  int boundary_count = 0;
  int genus = 0;
};

struct BraidedSurfaceData {
  std::vector<SurfaceComponent> components;
  int total_euler = 0;

  bool connected() const { return components.size() == 1; }
};

// --- word-level operations -------------------------------------------------

/// Concatenate two words on the same strand count and freely reduce.
BraidWord compose(const BraidWord& a, const BraidWord& b);

/// Embedded band s_{i,j} = ^(s_i...s_{j-2})(s_{j-1}) joining strings i < j.
PositiveBand embedded_band(int i, int j, int n);

/// Product b(1)...b(k) of all band expansions, freely reduced.
BraidWord brep_product(const BandRepresentation& b);

/// Full twist on n strands, ((s_1...s_{n-1})(s_1...s_{n-2})...s_1)^2.
BraidWord nabla(int n);

/// Full twist on strands i..j inside B_n; identity when i == j.
BraidWord nabla_block(int i, int j, int n);

enum class HopfVariant { first, second };

/// One of the two displayed factorizations of the full twist on p+q strands
/// into block twists times block-linking words.  Requires p >= q >= 0, p >= 1.
BraidWord hopf_factorization(int p, int q, HopfVariant variant);

/// Number of components of the closure (cycles of the permutation).
int closure_components(const BraidWord& w);

/// Pairwise linking numbers of the closure components.  Component order
/// follows the least string in each permutation cycle; lk(a,b) is half the
/// signed count of crossings between the two components.
struct ClosureLinking {
  std::vector<std::vector<int>> component_strings;
  std::vector<std::vector<long long>> matrix;  // symmetric, zero diagonal
};
ClosureLinking closure_linking_matrix(const BraidWord& w);

/// Component partition, Euler characteristics, boundary counts and genera
/// of the braided surface S(b).
BraidedSurfaceData braided_surface(const BandRepresentation& b);

/// n parallel copies of the braided surface, one band representation in
/// B_{n * strands}.  Copy c of string j lives on strand n*(j-1)+c.
BandRepresentation cable_band_rep(const BandRepresentation& b, int n);

/// Append one more band (k grows by one, chi drops by one).
BandRepresentation append_band(const BandRepresentation& b, const PositiveBand& band);

/// The two six-band representations in B_4 with equal product braids but
/// distinct C-spans, and the extra band that closes them into knots.
BandRepresentation rho0();
BandRepresentation rho1();
PositiveBand geng_band();

// --- text format -----------------------------------------------------------

/// Parse "s1 s2^-1" or "1 -2" style words.  If strands == 0 the strand
/// count is inferred as (max index + 1).
BraidWord parse_braid_word(const std::string& text, int strands = 0);

}  // namespace qplink
