#ifndef SEMIQ_IO_HPP
#define SEMIQ_IO_HPP

#include <string>

#include <json.hpp>

#include "semiq/curve.hpp"
#include "semiq/frenet3.hpp"
#include "semiq/frenet4.hpp"
#include "semiq/rectifying.hpp"

namespace semiq {

using json = nlohmann::ordered_json;

// Curve file:
// {"space":"R13"|"R24","signature":{"eps":[..],"ambient":".."},
//  "param_kind":"raw"|"pseudo_arclength","samples":[{"u":f,"q":[f,f,f,f]},...]}
// R13 curves must carry q4 = 0 explicitly.
json curve_to_json(const CurveSamples& curve);
CurveSamples curve_from_json(const json& j);

json report3_to_json(const RectifyingReport3& rep);
json report4_to_json(const RectifyingReport4& rep);

// Plot CSVs (column sets fixed by the report formats).
std::string plot3_csv(const CurveSamples& curve, const Frenet3Data& frame);
std::string plot4_csv(const CurveSamples& curve, const Frenet4Data& frame, double c);

// Frame CSV exports.
std::string frenet3_csv(const Frenet3Data& frame);
std::string frenet4_csv(const Frenet4Data& frame);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// Shortest-round-trip decimal formatting (deterministic across runs).
std::string format_double(double v);

} // namespace semiq

#endif
