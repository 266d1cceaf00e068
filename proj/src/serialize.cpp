#include "qplink/serialize.hpp"

#include <stdexcept>

namespace qplink {

using nlohmann::json;

json word_to_json(const BraidWord& w) {
  json out = json::array();
  for (const auto& l : w.letters()) out.push_back(l.sign * l.index);
  return out;
}

BraidWord word_from_json(const json& j, int strands) {
  if (!j.is_array()) throw std::invalid_argument("word: expected an array of integers");
  BraidWord w(strands);
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("word: expected an integer letter");
    const int v = e.get<int>();
    if (v == 0) throw std::invalid_argument("word: letter 0 is not a generator");
    w.push(std::abs(v), v > 0 ? +1 : -1);
  }
  return w;
}

json band_to_json(const PositiveBand& b) {
  return json{{"conjugator", word_to_json(b.conjugator)}, {"index", b.index}};
}

PositiveBand band_from_json(const json& j, int strands) {
  if (!j.is_object() || !j.contains("conjugator") || !j.contains("index"))
    throw std::invalid_argument("band: expected {conjugator, index}");
  return PositiveBand(word_from_json(j.at("conjugator"), strands), j.at("index").get<int>());
}

json brep_to_json(const BandRepresentation& b) {
  json bands = json::array();
  for (const auto& band : b.bands) bands.push_back(band_to_json(band));
  return json{{"strands", b.strands}, {"bands", bands}};
}

BandRepresentation brep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("strands") || !j.contains("bands"))
    throw std::invalid_argument("band representation: expected {strands, bands}");
  BandRepresentation out(j.at("strands").get<int>());
  for (const auto& e : j.at("bands")) out.bands.push_back(band_from_json(e, out.strands));
  return out;
}

json normal_form_to_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& f : nf.factors) factors.push_back(f.one_line());
  return json{{"inf", nf.infimum}, {"factors", factors}};
}

}  // namespace qplink
