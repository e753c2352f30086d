#pragma once

// JSON forms of every instance kind. Parsers throw malformed-input on shape
// errors and the domain error of the constructed object otherwise.

#include <nlohmann/json.hpp>

#include "finloc/creature.hpp"
#include "finloc/derivation.hpp"
#include "finloc/finsets.hpp"
#include "finloc/pair_poset.hpp"
#include "finloc/randomname.hpp"
#include "finloc/relations.hpp"

namespace finloc {

using Json = nlohmann::json;

Json to_json(const WSet& x);
Json to_json(const BlockFamily& f);
Json to_json(const Creature& t);
Json to_json(const ConditionFragment& f);
Json to_json(const FiniteRelationInstance& r);
Json to_json(const Derivation& d);
Json to_json(const FragmentHints& h);
Json to_json(const PairCondition& p);
/// {"num":..,"den":..}; components that do not fit 64 bits become strings.
Json to_json(const Rational& q);

WSet wset_from_json(const Json& j);
BlockFamily blockfamily_from_json(const Json& j);
Creature creature_from_json(const Json& j);
ConditionFragment fragment_from_json(const Json& j);
FiniteRelationInstance relinstance_from_json(const Json& j);
Derivation derivation_from_json(const Json& j);
FragmentHints hints_from_json(const Json& j);
PairCondition pair_condition_from_json(const Json& j);

}  // namespace finloc
