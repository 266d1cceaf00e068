#include "qplink/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qplink {

namespace {

void check_index(int index, int strands) {
  if (index < 1 || index > strands - 1)
    throw std::invalid_argument("braid: generator index " + std::to_string(index) +
                                " out of range for " + std::to_string(strands) + " strands");
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid: strands must be >= 1");
  for (const auto& l : letters_) {
    check_index(l.index, strands_);
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("braid: letter sign must be +1 or -1");
  }
}

void BraidWord::push(int index, int sign) {
  check_index(index, strands_);
  if (sign != 1 && sign != -1) throw std::invalid_argument("braid: letter sign must be +1 or -1");
  letters_.push_back({index, sign});
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ != strands_) throw std::invalid_argument("braid: strand mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->index, -it->sign});
  return out;
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord out(strands_);
  for (const auto& l : letters_) {
    if (!out.letters_.empty() && out.letters_.back().index == l.index &&
        out.letters_.back().sign == -l.sign) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

BraidPermutation BraidWord::permutation() const {
  BraidPermutation p(strands_);
  // track positions: walk the word, swapping adjacent positions.
  std::vector<int> pos_to_string(strands_);
  std::iota(pos_to_string.begin(), pos_to_string.end(), 1);
  for (const auto& l : letters_) std::swap(pos_to_string[l.index - 1], pos_to_string[l.index]);
  std::vector<int> images(strands_);
  for (int pos = 1; pos <= strands_; ++pos) images[pos_to_string[pos - 1] - 1] = pos;
  return BraidPermutation(std::move(images));
}

long long BraidWord::exponent_sum() const {
  long long s = 0;
  for (const auto& l : letters_) s += l.sign;
  return s;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << 's' << l.index;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

BraidPermutation::BraidPermutation(int n) : images_(n) {
  if (n < 1) throw std::invalid_argument("permutation: size must be >= 1");
  std::iota(images_.begin(), images_.end(), 1);
}

BraidPermutation::BraidPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("permutation: not a bijection");
    seen[v - 1] = true;
  }
}

bool BraidPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (map(i) != i) return false;
  return true;
}

BraidPermutation BraidPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[map(i) - 1] = i;
  return BraidPermutation(std::move(inv));
}

BraidPermutation BraidPermutation::then(const BraidPermutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation: size mismatch");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[i - 1] = other.map(map(i));
  return BraidPermutation(std::move(out));
}

void BraidPermutation::swap_images(int i, int j) { std::swap(images_[i - 1], images_[j - 1]); }

std::vector<std::vector<int>> BraidPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> cycle;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      cycle.push_back(j);
      j = map(j);
    }
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

PositiveBand::PositiveBand(BraidWord g, int i) : conjugator(std::move(g)), index(i) {
  check_index(index, conjugator.strands());
}

BraidWord PositiveBand::expand() const {
  BraidWord out = conjugator;
  out.push(index, +1);
  out.append(conjugator.inverse());
  return out.freely_reduced();
}

BandRepresentation::BandRepresentation(int n, std::vector<PositiveBand> bs)
    : strands(n), bands(std::move(bs)) {
  if (n < 1) throw std::invalid_argument("band representation: strands must be >= 1");
  for (const auto& b : bands)
    if (b.strands() != n) throw std::invalid_argument("band representation: band strand mismatch");
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("compose: strand mismatch");
  BraidWord out = a;
  out.append(b);
  return out.freely_reduced();
}

PositiveBand embedded_band(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("embedded band: need 1 <= i < j <= n");
  BraidWord g(n);
  for (int k = i; k <= j - 2; ++k) g.push(k, +1);
  return PositiveBand(std::move(g), j - 1);
}

BraidWord brep_product(const BandRepresentation& b) {
  BraidWord out(b.strands);
  for (const auto& band : b.bands) out.append(band.expand());
  return out.freely_reduced();
}

BraidWord nabla(int n) {
  if (n < 1) throw std::invalid_argument("nabla: n must be >= 1");
  BraidWord out(n);
  for (int rep = 0; rep < 2; ++rep)
    for (int t = n - 1; t >= 1; --t)
      for (int i = 1; i <= t; ++i) out.push(i, +1);
  return out;
}

BraidWord nabla_block(int i, int j, int n) {
  if (!(1 <= i && i <= j && j <= n))
    throw std::invalid_argument("nabla block: need 1 <= i <= j <= n");
  BraidWord out(n);
  const int m = j - i + 1;
  for (int rep = 0; rep < 2; ++rep)
    for (int t = m - 1; t >= 1; --t)
      for (int k = 1; k <= t; ++k) out.push(k + i - 1, +1);
  return out;
}

namespace {

// Block-linking word for two adjacent blocks of sizes b1, b2 in B_{b1+b2}:
// (s_{b1}...s_{b1+b2-1})(s_{b1-1}...s_{b1+b2-2})...(s_1...s_{b2}) followed by
// (s_{b2}...s_{b2+b1-1})...(s_1...s_{b1}).
void push_block_linking(BraidWord& w, int b1, int b2) {
  for (int s = b1; s >= 1; --s)
    for (int k = s; k <= s + b2 - 1; ++k) w.push(k, +1);
  for (int s = b2; s >= 1; --s)
    for (int k = s; k <= s + b1 - 1; ++k) w.push(k, +1);
}

}  // namespace

BraidWord hopf_factorization(int p, int q, HopfVariant variant) {
  if (!(p >= q && q >= 0 && p >= 1))
    throw std::invalid_argument("hopf factorization: need p >= q >= 0, p >= 1");
  const int n = p + q;
  BraidWord out(n == 1 ? 1 : n);
  const int b1 = variant == HopfVariant::first ? p : p - q;
  const int b2 = variant == HopfVariant::first ? q : 2 * q;
  if (b1 >= 1) out.append(nabla_block(1, b1, out.strands()));
  if (b2 >= 1) out.append(nabla_block(b1 + 1, b1 + b2, out.strands()));
  push_block_linking(out, b1, b2);
  return out;
}

int closure_components(const BraidWord& w) {
  return static_cast<int>(w.permutation().cycles().size());
}

ClosureLinking closure_linking_matrix(const BraidWord& w) {
  ClosureLinking out;
  out.component_strings = w.permutation().cycles();
  const int n = w.strands();
  std::vector<int> component_of(n + 1, 0);
  for (std::size_t c = 0; c < out.component_strings.size(); ++c)
    for (int s : out.component_strings[c]) component_of[s] = static_cast<int>(c);
  const auto k = out.component_strings.size();
  std::vector<std::vector<long long>> twice(k, std::vector<long long>(k, 0));
  std::vector<int> pos_to_string(n);
  std::iota(pos_to_string.begin(), pos_to_string.end(), 1);
  for (const auto& l : w.letters()) {
    const int a = pos_to_string[l.index - 1];
    const int b = pos_to_string[l.index];
    const int ca = component_of[a], cb = component_of[b];
    if (ca != cb) {
      twice[ca][cb] += l.sign;
      twice[cb][ca] += l.sign;
    }
    std::swap(pos_to_string[l.index - 1], pos_to_string[l.index]);
  }
  out.matrix.assign(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.matrix[i][j] = twice[i][j] / 2;
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Feet of a band ^g(s_i): the strings sitting at positions i and i+1
// after the conjugator.
std::pair<int, int> band_feet(const PositiveBand& band) {
  const auto pi = band.conjugator.permutation().inverse();
  return {pi.map(band.index), pi.map(band.index + 1)};
}

}  // namespace

BraidedSurfaceData braided_surface(const BandRepresentation& b) {
  const int n = b.strands;
  UnionFind uf(n);
  std::vector<std::pair<int, int>> feet;
  feet.reserve(b.bands.size());
  for (const auto& band : b.bands) {
    feet.push_back(band_feet(band));
    uf.unite(feet.back().first - 1, feet.back().second - 1);
  }

  std::vector<int> roots;
  std::vector<int> comp_of_string(n + 1, -1);
  for (int s = 1; s <= n; ++s) {
    const int r = uf.find(s - 1);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      it = std::prev(roots.end());
    }
    comp_of_string[s] = static_cast<int>(it - roots.begin());
  }

  BraidedSurfaceData out;
  out.components.resize(roots.size());
  for (int s = 1; s <= n; ++s) out.components[comp_of_string[s]].strings.push_back(s);
  for (const auto& f : feet) out.components[comp_of_string[f.first]].band_count++;

  const auto boundary_cycles = brep_product(b).permutation().cycles();
  for (const auto& cycle : boundary_cycles)
    out.components[comp_of_string[cycle.front()]].boundary_count++;

  out.total_euler = 0;
  for (auto& comp : out.components) {
    comp.euler = static_cast<int>(comp.strings.size()) - comp.band_count;
    comp.genus = (2 - comp.euler - comp.boundary_count) / 2;
    out.total_euler += comp.euler;
  }
  return out;
}

namespace {

// Substitute each letter s_j of w by the full positive crossing of the
// j-th and (j+1)-th blocks of n strands (n^2 crossings), matching signs.
// Copies keep their order inside each block.
BraidWord cable_substitute(const BraidWord& w, int n) {
  BraidWord out(w.strands() * n);
  for (const auto& l : w.letters()) {
    const int base = (l.index - 1) * n;  // blocks occupy base+1 .. base+2n
    if (l.sign > 0) {
      for (int c = n; c >= 1; --c)
        for (int k = base + c; k <= base + c + n - 1; ++k) out.push(k, +1);
    } else {
      for (int c = 1; c <= n; ++c)
        for (int k = base + c + n - 1; k >= base + c; --k) out.push(k, -1);
    }
  }
  return out;
}

}  // namespace

BandRepresentation cable_band_rep(const BandRepresentation& b, int n) {
  if (n < 1) throw std::invalid_argument("cable: n must be >= 1");
  if (n == 1) return b;
  BandRepresentation out(b.strands * n);
  for (const auto& band : b.bands) {
    const BraidWord cabled_conjugator = cable_substitute(band.conjugator, n);
    const int base = (band.index - 1) * n;
    for (int c = 1; c <= n; ++c) {
      // join copy c of the two foot strings: positions base+c and base+n+c
      // after the cabled conjugator.
      BraidWord g = cabled_conjugator;
      for (int k = base + c; k <= base + n + c - 2; ++k) g.push(k, +1);
      out.bands.emplace_back(g.freely_reduced(), base + n + c - 1);
    }
  }
  return out;
}

BandRepresentation append_band(const BandRepresentation& b, const PositiveBand& band) {
  if (band.strands() != b.strands)
    throw std::invalid_argument("append band: strand mismatch");
  BandRepresentation out = b;
  out.bands.push_back(band);
  return out;
}

namespace {

BraidWord word4(std::initializer_list<int> signed_indices) {
  BraidWord w(4);
  for (int v : signed_indices) w.push(v > 0 ? v : -v, v > 0 ? +1 : -1);
  return w;
}

}  // namespace

BandRepresentation rho0() {
  BandRepresentation b(4);
  b.bands.emplace_back(word4({-3, -3, 2}), 1);
  b.bands.emplace_back(word4({}), 2);
  b.bands.emplace_back(word4({1, 3, 3, 3}), 2);
  b.bands.emplace_back(word4({1, 3, 3, 3, 3, 3, -2}), 1);
  b.bands.emplace_back(word4({}), 3);
  b.bands.emplace_back(word4({}), 3);
  return b;
}

BandRepresentation rho1() {
  BandRepresentation b(4);
  b.bands.emplace_back(word4({}), 2);
  b.bands.emplace_back(word4({1, 3}), 2);
  b.bands.emplace_back(word4({1, 3}), 2);
  b.bands.emplace_back(word4({1, 3, 1, 3}), 2);
  b.bands.emplace_back(word4({1, 3, 1, 3}), 2);
  b.bands.emplace_back(word4({1, 3, 1, 3, 1, 3}), 2);
  return b;
}

PositiveBand geng_band() { return PositiveBand(word4({1, 1, 1}), 2); }

BraidWord parse_braid_word(const std::string& text, int strands) {
  std::vector<BraidLetter> letters;
  int max_index = 0;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int index = 0, sign = +1;
    if (tok[0] == 's' || tok[0] == 'S') {
      std::string body = tok.substr(1);
      const auto caret = body.find('^');
      std::string exp;
      if (caret != std::string::npos) {
        exp = body.substr(caret + 1);
        body = body.substr(0, caret);
      }
      std::size_t used = 0;
      index = std::stoi(body, &used);
      if (used != body.size()) throw std::invalid_argument("braid parse: bad token '" + tok + "'");
      if (!exp.empty()) {
        if (exp == "-1")
          sign = -1;
        else if (exp != "1")
          throw std::invalid_argument("braid parse: only exponents 1 and -1 allowed");
      }
    } else {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("braid parse: bad token '" + tok + "'");
      if (v == 0) throw std::invalid_argument("braid parse: index 0 is not a generator");
      index = v > 0 ? v : -v;
      sign = v > 0 ? +1 : -1;
    }
    if (index < 1) throw std::invalid_argument("braid parse: index 0 is not a generator");
    max_index = std::max(max_index, index);
    letters.push_back({index, sign});
  }
  const int n = strands > 0 ? strands : max_index + 1;
  return BraidWord(n, std::move(letters));
}

}  // namespace qplink
