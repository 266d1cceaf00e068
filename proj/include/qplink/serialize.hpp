#pragma once

#include <json.hpp>

#include "qplink/braid.hpp"
#include "qplink/normal_form.hpp"

namespace qplink {

/// Words as arrays of signed generator indices (+i for s_i, -i for its
/// inverse); bands as {"conjugator": [...], "index": i}.

nlohmann::json word_to_json(const BraidWord& w);
BraidWord word_from_json(const nlohmann::json& j, int strands);

nlohmann::json band_to_json(const PositiveBand& b);
PositiveBand band_from_json(const nlohmann::json& j, int strands);

nlohmann::json brep_to_json(const BandRepresentation& b);
BandRepresentation brep_from_json(const nlohmann::json& j);

/// {"inf": k, "factors": [[one-line permutation], ...]}
nlohmann::json normal_form_to_json(const NormalForm& nf);

}  // namespace qplink
