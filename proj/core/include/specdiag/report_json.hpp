#pragma once

#include <string>

#include "specdiag/spectral.hpp"

namespace specdiag {

// %.17g, with non-finite values mapped to JSON null. Field order in the
// serializers below is fixed so identical inputs give byte-identical output.
std::string json_number(double v);

std::string to_json(const SpectralReport& r);
std::string to_json(const DecayReport& d);

}  // namespace specdiag
