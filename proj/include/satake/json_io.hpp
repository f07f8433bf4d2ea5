#pragma once

// JSON forms of scalars, weights, matrices, group-algebra elements and
// endoscopic data. Rationals are strings "p/q"; rational vectors are
// {"num": [...], "den": [...]}.

#include <string>

#include "json.hpp"
#include "satake/endoscopy.hpp"
#include "satake/group_algebra.hpp"
#include "satake/spherical.hpp"

namespace satake::json_io {

using json = nlohmann::ordered_json;

json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const json& j);

/// {"text": ..., "terms": [{"q2": e, "coeff": cyclo}]}, q2 the doubled exponent.
json to_json(const Laurent& l);
Laurent laurent_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

json to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const json& j, std::size_t cols);

/// {"rows": [...], "cols": [...], "entries": [{"row": i, "col": j, "value": laurent}]}
json to_json(const CoeffMatrix& m);
CoeffMatrix coeffmatrix_from_json(const json& j);

/// [{"weight": [...], "coeff": laurent}], plus "truncation" when not exact.
json to_json(const GAElement& f);
GAElement gaelement_from_json(const json& j);

/// {"preset": name}, or {"name", "rank", "roots", "coroots", "positive", "theta"}
/// with theta optional (identity).
RootDatumTheta root_datum_from_json(const json& j);

json to_json(const NormalizerElement& n);
NormalizerElement normalizer_from_json(const json& j);

/// {"preset", "label", "s", "w_dot"}
json to_json(const EndoscopicDatum& e);
EndoscopicDatum endoscopic_datum_from_json(const json& j);

json to_json(const TransferData& d);
TransferData transfer_data_from_json(const json& j, std::size_t rank);

/// CSV with header row,col,value; the value is the textual scalar form.
std::string to_csv(const CoeffMatrix& m);

}  // namespace satake::json_io
