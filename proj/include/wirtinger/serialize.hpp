#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "wirtinger/hilbert.hpp"
#include "wirtinger/jet.hpp"
#include "wirtinger/optimize.hpp"

namespace wirtinger {

using json = nlohmann::json;

// Complex numbers are [re, im] pairs; vectors are arrays of such pairs.

json complex_to_json(Complex z);
/// Throws FormatError unless `j` is a two-element numeric array.
Complex complex_from_json(const json& j);

json hvec_to_json(const HVec& v);
HVec hvec_from_json(const json& j);

/// Least-squares data file: {"X": [[[re,im],...],...], "d": [[re,im],...]}.
struct LeastSquaresData {
    std::vector<HVec> x;
    std::vector<Complex> d;
};

LeastSquaresData least_squares_from_json(const json& j);
json least_squares_to_json(const LeastSquaresData& data);

/// One JSON object per line: {"iter", "z", "cost", "grad_norm"}.
void write_trace_jsonl(std::ostream& out, const ScalarTrace& trace);
/// As above with "f" holding the iterate vector.
void write_trace_jsonl(std::ostream& out, const HilbertTrace& trace);

} // namespace wirtinger
