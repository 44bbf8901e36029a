#pragma once
// JSON renderings with a fixed key order. Values are numbers when integral,
// "a/b" strings when fractional and "inf" when infinite.

#include <json.hpp>
#include <vector>

#include "cvf/artin_schreier.hpp"
#include "cvf/pseudo_convergence.hpp"

namespace cvf::json {

using Json = nlohmann::ordered_json;

Json value(const Value& v);
Json series_value(const SeriesValuation& v);
Json values(const std::vector<Value>& vs);
Json certificate(const NonMembershipCertificate& c);
Json membership(const Membership& m);
Json report(const ExtensionReport& r);
Json stabilization(const StabilizationReport& s);
// Array of {index, element_literal, gamma, vP}.
Json prefix(const PCPrefix& p);
Json c_set(const CSetProbe& c);
Json check_report(const CheckReport& c);
Json table(const std::vector<TableRow>& rows);

}  // namespace cvf::json
