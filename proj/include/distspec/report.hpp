#pragma once

#include <json.hpp>

#include "distspec/spectra.hpp"

namespace distspec {

using Json = nlohmann::ordered_json;

/// [{"value":..,"multiplicity":..,"exact":..}, ...] in descending order.
Json spectrum_json(const Spectrum& s);
/// Fixed-precision rendering used by the text reports: "15^1 0^4 -3^5".
std::string spectrum_text(const Spectrum& s, int precision = 6);

}  // namespace distspec
