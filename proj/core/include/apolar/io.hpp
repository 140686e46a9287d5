#pragma once

#include <string>

#include <json.hpp>

#include "apolar/geometry.hpp"
#include "apolar/groebner.hpp"
#include "apolar/poly.hpp"
#include "apolar/waring.hpp"

namespace apolar::io {

using json = nlohmann::ordered_json;

json to_json(const VarAlphabet& a);
VarAlphabet alphabet_from_json(const json& j);

/// {"alphabet":{"m":1,"n":2},"terms":[{"exp":[2,2,0],"re":"1","im":"0"},...]}
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, Side side = Side::kForm);

/// {"order":"lex","vars":["X1","X2","Y1"]}
json to_json(const MonomialOrder& order, const VarAlphabet& a);

/// {"alphabet":...,"generators":["X1^3",...],"order":{...}}
json to_json(const Ideal& ideal, const MonomialOrder& order);
json to_json(const Ideal& ideal);
/// Accepts the object above or a bare list of generator strings (then the
/// alphabet must be given).
Ideal ideal_from_json(const json& j, const VarAlphabet* alphabet = nullptr);

/// {"values":[1,5,10,12],"stable":12,"from":3}
json to_json(const HilbertFunction& hf);

/// {"mode":"exact","points":[["0","1","0"],...]}; approx coordinates are
/// ["re","im"] decimal string pairs.
json to_json(const PointSet& points);
PointSet pointset_from_json(const json& j, const VarAlphabet& alphabet);
json to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j);

json to_json(const DistinctnessCertificate& c);
json to_json(const Extraction& e);
json to_json(const WaringDecomposition& d);
json to_json(const ResidualReport& r);
json to_json(const EcompTrace& t);
json to_json(const RankReport& r);
json to_json(const IncidenceReport& r);
json to_json(const Witness& w);
json to_json(const Census& c);
json to_json(const FamilySpec& s);

}  // namespace apolar::io
