#include "wirtinger/serialize.hpp"

#include <ostream>

#include "wirtinger/errors.hpp"

namespace wirtinger {

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError("expected a complex number as [re, im], got " + j.dump());
    }
    const Complex z{j[0].get<real>(), j[1].get<real>()};
    if (!is_finite(z)) {
        throw FormatError("complex number is not finite");
    }
    return z;
}

json hvec_to_json(const HVec& v) {
    json out = json::array();
    for (const Complex z : v.coords()) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

HVec hvec_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw FormatError("expected a non-empty array of [re, im] pairs");
    }
    std::vector<Complex> coords;
    coords.reserve(j.size());
    for (const json& entry : j) {
        coords.push_back(complex_from_json(entry));
    }
    return HVec(std::move(coords));
}

LeastSquaresData least_squares_from_json(const json& j) {
    if (!j.is_object() || !j.contains("X") || !j.contains("d")) {
        throw FormatError("least-squares data needs \"X\" and \"d\"");
    }
    const json& xs = j.at("X");
    const json& ds = j.at("d");
    if (!xs.is_array() || !ds.is_array()) {
        throw FormatError("\"X\" and \"d\" must be arrays");
    }
    LeastSquaresData data;
    for (const json& row : xs) {
        data.x.push_back(hvec_from_json(row));
    }
    for (const json& dk : ds) {
        data.d.push_back(complex_from_json(dk));
    }
    return data;
}

json least_squares_to_json(const LeastSquaresData& data) {
    json xs = json::array();
    for (const HVec& row : data.x) {
        xs.push_back(hvec_to_json(row));
    }
    json ds = json::array();
    for (const Complex dk : data.d) {
        ds.push_back(complex_to_json(dk));
    }
    return {{"X", xs}, {"d", ds}};
}

void write_trace_jsonl(std::ostream& out, const ScalarTrace& trace) {
    for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
        const json line = {{"iter", n},
                           {"z", complex_to_json(trace.iterates[n])},
                           {"cost", trace.costs[n]},
                           {"grad_norm", trace.grad_norms[n]}};
        out << line.dump() << '\n';
    }
}

void write_trace_jsonl(std::ostream& out, const HilbertTrace& trace) {
    for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
        const json line = {{"iter", n},
                           {"f", hvec_to_json(trace.iterates[n])},
                           {"cost", trace.costs[n]},
                           {"grad_norm", trace.grad_norms[n]}};
        out << line.dump() << '\n';
    }
}

} // namespace wirtinger
