#ifndef COHOMOLIB_JSON_IO_HPP
#define COHOMOLIB_JSON_IO_HPP

#include <functional>

#include <json.hpp>

#include "cohomolib/global.hpp"

namespace cohomolib {

using Json = nlohmann::json;
// Resolves a string reference (file path) to a parsed document; group fields
// accept either an inline object or such a reference.
using RefLoader = std::function<Json(const std::string&)>;

// {"name"?, "order", "table", "labels"?} or
// {"permutation_generators": [[cycles]], "degree": d, "name"?}.
GroupPtr group_from_json(const Json& j, const RefLoader& load = {}, int max_order = 128);
Json group_to_json(const FiniteGroup& g);

// {"gamma": group, "target": group, "automorphisms": per-γ permutations}
ActionPtr action_from_json(const Json& j, const RefLoader& load = {},
                           const Budget& budget = {});
Json action_to_json(const GammaAction& a);

// {"values": [...]}
Cocycle1 cocycle1_from_json(ActionPtr ctx, const Json& j);
Json cocycle1_to_json(const Cocycle1& c);
Cocycle2 cocycle2_from_json(ActionPtr ctx, const Json& j);
Json cocycle2_to_json(const Cocycle2& c);

// {"gamma": group, "g": group, "kappa": [...]}
LienPtr lien_from_json(const Json& j, const RefLoader& load = {},
                       const Budget& budget = {});
Json lien_to_json(const Lien& lien);

// {"phi": [...], "g": [|Γ|² values]}
ExtensionCocycle extension_from_json(LienPtr lien, const Json& j);
Json extension_to_json(const ExtensionCocycle& e);

// {"q": int, "group": group}
TameLocalDatum local_datum_from_json(const Json& j, const RefLoader& load = {},
                                     int max_order = 128);
// {"s": idx, "t": idx, "flags": {...}}
Json local_class_to_json(const LocalClass& c);

// {"gamma": group, "n": int, "chi": [...], "n_prime": [elements],
//  "n_l": [elements], "places": [{"name","kind","gamma_v","inertia",
//  "frobenius","tau","q_mod_n"}]}
GlobalDatum global_datum_from_json(const Json& j, const RefLoader& load = {},
                                   int max_order = 128);
Json global_datum_to_json(const GlobalDatum& d);

// {"places": [names], "classes": [{"values": [...]}]}; each values array is
// indexed by the elements of Γ_v in sorted parent order.
LocalTargets targets_from_json(const GlobalDatum& d, ActionPtr action, const Json& j);

// Canonical serialization: sorted keys, two-space indentation, trailing newline.
std::string canonical_dump(const Json& j);

} // namespace cohomolib

#endif
