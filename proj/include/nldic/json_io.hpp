#ifndef NLDIC_JSON_IO_HPP
#define NLDIC_JSON_IO_HPP

#include <json.hpp>

#include <nldic/analysis.hpp>

namespace nldic {

using Json = nlohmann::ordered_json;

Json params_json(const Model1Params& p);
Json params_json(const Model2Params& p);
Json params_json(const Model3Params& p);

Json report_json(const VerificationReport& r);
Json bound_report_json(const BoundReport& r);

Json channel_json(const ChannelSpec& spec);
ChannelSpec channel_from_json(const nlohmann::json& j);

Json error_json(const Error& err);

} // namespace nldic

#endif // NLDIC_JSON_IO_HPP
