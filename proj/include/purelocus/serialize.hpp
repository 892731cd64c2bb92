#pragma once

#include "purelocus/boundary.hpp"
#include "purelocus/dmtable.hpp"
#include "purelocus/spectra.hpp"

#include "json.hpp"

namespace purelocus {

/* Machine output uses insertion-ordered JSON with rationals rendered as
 * strings, so emitted documents re-parse and re-render byte-identically. */
using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const Eigenspectra& spectra);
OrderedJson to_json(const PureLocusReport& report);
OrderedJson to_json(const McMullenCase& row);

}  // namespace purelocus
