#pragma once

#include <json.hpp>

#include "qknot/affine.hpp"
#include "qknot/classify.hpp"
#include "qknot/sampling.hpp"
#include "qknot/variety.hpp"

namespace qknot {

using json = nlohmann::json;

// Poly as [{"e":[ex,ey,es],"c":"decimal-string"}, ...], terms in descending
// print order.
json poly_to_json(const Poly& p);

// {"relator": "..."} or {"lhs": "...", "rhs": "..."}
json presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const json& j);

json cideal_to_json(const CIdeal& ci, bool with_trace_coords);
json classified_to_json(const ClassifiedPoint& cp);
json affine_to_json(const AffineIdeal& ai);
json samples_to_json(const std::vector<CurveSample>& samples);

std::string format_double(double v); // 12 significant digits
json complex_to_json(const cplx& z); // number when real, {"re":..,"im":..} otherwise

} // namespace qknot
