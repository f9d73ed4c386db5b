#pragma once

#include <json.hpp>

#include "virateich/coframe.hpp"
#include "virateich/hill.hpp"
#include "virateich/teich.hpp"

namespace virateich::io {

using json = nlohmann::json;

// Encoders.
json encode(const PeriodicFn& f);           // {"n", "weight", "values"}
json encode(const DiffeoLift& F);           // {"phi", "winding"}
json encode(const BoundaryConnection& A);   // {"a", "s", "u"}
json encode(const GaugeMap& h);             // {"g11", "g12", "g21", "g22"}
json encode(const Monodromy& m);            // {"matrix", "trace", "det", "class"}
json encode(const TrumpetPoint& p);         // {"ell", "F"}
json encode(const FNPoint& p);              // {"g", "r", "interior", "boundary"}
json encode(const Grid2D& g);               // {"nx", "y", "data"}

// Decoders throw SchemaError with the dotted field path on malformed input;
// domain validation (PreconditionError) still applies on top.
PeriodicFn decode_periodic_fn(const json& j, const std::string& path);
DiffeoLift decode_diffeo(const json& j, const std::string& path);
BoundaryConnection decode_connection(const json& j, const std::string& path);
TrumpetPoint decode_trumpet_point(const json& j, const std::string& path);
FNPoint decode_fn_point(const json& j, const std::string& path);
Grid2D decode_grid(const json& j, const std::string& path);

json load_file(const std::string& file);
void save_file(const std::string& file, const json& j);

} // namespace virateich::io
