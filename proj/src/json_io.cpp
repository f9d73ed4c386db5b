#include "virateich/json_io.hpp"

#include <fstream>

namespace virateich::io {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
    return *it;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    return j.get<double>();
}

long integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<long>();
}

std::vector<double> number_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(j[i].get<double>());
    }
    return out;
}

template <class Fn>
auto rethrow_as_schema(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const PreconditionError& e) {
        throw SchemaError(path, e.what());
    }
}

} // namespace

json encode(const PeriodicFn& f) {
    return json{{"n", f.size()}, {"weight", f.weight()}, {"values", f.values()}};
}

json encode(const DiffeoLift& F) {
    return json{{"phi", encode(F.periodic_part())}, {"winding", F.winding()}};
}

json encode(const BoundaryConnection& A) {
    return json{{"a", encode(A.a)}, {"s", encode(A.s)}, {"u", encode(A.u)}};
}

json encode(const GaugeMap& h) {
    return json{{"g11", encode(h.g11)},
                {"g12", encode(h.g12)},
                {"g21", encode(h.g21)},
                {"g22", encode(h.g22)}};
}

json encode(const Monodromy& m) {
    const double det = m.matrix[0][0] * m.matrix[1][1] - m.matrix[0][1] * m.matrix[1][0];
    return json{{"matrix", {{m.matrix[0][0], m.matrix[0][1]}, {m.matrix[1][0], m.matrix[1][1]}}},
                {"trace", m.trace},
                {"det", det},
                {"class", to_string(m.orbit_class)}};
}

json encode(const TrumpetPoint& p) { return json{{"ell", p.ell}, {"F", encode(p.F)}}; }

json encode(const FNPoint& p) {
    json interior = json::array();
    for (const auto& lt : p.interior) interior.push_back({lt[0], lt[1]});
    json boundary = json::array();
    for (const auto& b : p.boundary) boundary.push_back(encode(b));
    return json{{"g", p.genus},
                {"r", p.boundary_count()},
                {"interior", interior},
                {"boundary", boundary}};
}

json encode(const Grid2D& g) {
    return json{{"nx", g.nx}, {"y", g.y}, {"data", g.data}};
}

PeriodicFn decode_periodic_fn(const json& j, const std::string& path) {
    const long n = integer(field(j, "n", path), path + ".n");
    const long w = integer(field(j, "weight", path), path + ".weight");
    std::vector<double> values = number_array(field(j, "values", path), path + ".values");
    if (static_cast<long>(values.size()) != n)
        throw SchemaError(path + ".values", "length " + std::to_string(values.size()) +
                                                " does not match n=" + std::to_string(n));
    return rethrow_as_schema(path, [&] {
        return PeriodicFn(std::move(values), static_cast<int>(w));
    });
}

DiffeoLift decode_diffeo(const json& j, const std::string& path) {
    PeriodicFn phi = decode_periodic_fn(field(j, "phi", path), path + ".phi");
    const long w = integer(field(j, "winding", path), path + ".winding");
    return rethrow_as_schema(path, [&] {
        return DiffeoLift::from_periodic_part(std::move(phi), w);
    });
}

BoundaryConnection decode_connection(const json& j, const std::string& path) {
    PeriodicFn a = decode_periodic_fn(field(j, "a", path), path + ".a");
    PeriodicFn s = decode_periodic_fn(field(j, "s", path), path + ".s");
    PeriodicFn u = decode_periodic_fn(field(j, "u", path), path + ".u");
    return rethrow_as_schema(path, [&] {
        return BoundaryConnection(std::move(a), std::move(s), std::move(u));
    });
}

TrumpetPoint decode_trumpet_point(const json& j, const std::string& path) {
    const double ell = number(field(j, "ell", path), path + ".ell");
    DiffeoLift F = decode_diffeo(field(j, "F", path), path + ".F");
    return rethrow_as_schema(path, [&] { return TrumpetPoint(ell, std::move(F)); });
}

FNPoint decode_fn_point(const json& j, const std::string& path) {
    const long g = integer(field(j, "g", path), path + ".g");
    const long r = integer(field(j, "r", path), path + ".r");
    const json& ji = field(j, "interior", path);
    if (!ji.is_array()) throw SchemaError(path + ".interior", "expected an array");
    std::vector<std::array<double, 2>> interior;
    for (std::size_t i = 0; i < ji.size(); ++i) {
        const std::string p = path + ".interior[" + std::to_string(i) + "]";
        if (!ji[i].is_array() || ji[i].size() != 2)
            throw SchemaError(p, "expected a [length, twist] pair");
        interior.push_back({number(ji[i][0], p + "[0]"), number(ji[i][1], p + "[1]")});
    }
    const json& jb = field(j, "boundary", path);
    if (!jb.is_array()) throw SchemaError(path + ".boundary", "expected an array");
    if (static_cast<long>(jb.size()) != r)
        throw SchemaError(path + ".boundary",
                          "length does not match r=" + std::to_string(r));
    std::vector<TrumpetPoint> boundary;
    for (std::size_t i = 0; i < jb.size(); ++i)
        boundary.push_back(
            decode_trumpet_point(jb[i], path + ".boundary[" + std::to_string(i) + "]"));
    return rethrow_as_schema(path, [&] {
        return FNPoint(static_cast<int>(g), std::move(interior), std::move(boundary));
    });
}

Grid2D decode_grid(const json& j, const std::string& path) {
    const long nx = integer(field(j, "nx", path), path + ".nx");
    std::vector<double> y = number_array(field(j, "y", path), path + ".y");
    std::vector<double> data = number_array(field(j, "data", path), path + ".data");
    return rethrow_as_schema(path, [&] {
        return Grid2D(static_cast<int>(nx), std::move(y), std::move(data));
    });
}

json load_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw SchemaError(file, "cannot open input file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(file, std::string("JSON parse error: ") + e.what());
    }
    return j;
}

void save_file(const std::string& file, const json& j) {
    std::ofstream out(file);
    if (!out) throw Error("cannot open output file: " + file);
    out << j.dump(2) << "\n";
}

} // namespace virateich::io
