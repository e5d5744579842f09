#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <utility>

#include "pedlab/intpoly.hpp"
#include "pedlab/poset.hpp"
#include "pedlab/rsk.hpp"
#include "pedlab/shapes.hpp"
#include "pedlab/specmat.hpp"
#include "pedlab/tableaux.hpp"

namespace pedlab {

using ordered_json = nlohmann::ordered_json;

/// {"coeffs":[...]} ascending; coefficients beyond the 64-bit range become
/// decimal strings.
ordered_json to_json(const IntPoly& p);
ordered_json to_json(const TruncatedSeries& s);

/// {"outer":[3,2],"inner":[1]}
ordered_json to_json(const SkewShape& s);

/// {"shape":...,"rows":[[1,2,3],[4,5]]}; skew rows are left-padded with null.
ordered_json to_json(const StandardTableau& t);
ordered_json to_json(const SemistandardTableau& t);

/// {"elements":[...],"covers":[[a,b],...]} with covers from the transitive
/// reduction; optional "filter":{label: floor}.
ordered_json to_json(const Poset& p);
ordered_json to_json(const Poset& p, const Filter& f);

/// {"values":{label: value}}
ordered_json to_json(const Poset& p, const XPartition& t);

ordered_json to_json(const LinearExtension& e);

/// {"dim":...,"entries":[[poly,...],...],"extensions":[...]}
ordered_json to_json(const PedestalMatrix& m);

ordered_json to_json(const Permutation& s);

/// Reads {"elements":[...],"covers":[...]} plus an optional "filter" object;
/// a missing filter means the trivial filter.
std::pair<Poset, Filter> poset_from_json(const ordered_json& j);

}  // namespace pedlab
