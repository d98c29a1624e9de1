#pragma once

#include <string>

#include "json.hpp"

#include "linespace/closure.hpp"
#include "linespace/hypergraph.hpp"
#include "linespace/metric.hpp"
#include "linespace/metrizability.hpp"
#include "linespace/search.hpp"

namespace linespace::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

// Readers raise Errc::BadInput naming the offending field.
MetricSpace metric_from_json(const Json& j);
Hypergraph hypergraph_from_json(const Json& j);

Json to_json(const MetricSpace& space);
Json to_json(const Hypergraph& h);
Json to_json(const Rational& r);
Json vertex_list(VertexSet s);
Json family_json(const LineFamily& family);

Json line_report_json(const LineReport& report, std::string_view kind);
Json debruijn_erdos_json(const DeBruijnErdosCheck& check);
Json sylvester_gallai_json(const SylvesterGallaiWitness& witness);
Json bound_checks_json(const std::vector<BoundCheck>& checks);
Json search_report_json(const SearchReport& report);
Json scan_report_json(const ScanReport& report);
Json metrizability_json(const MetrizabilityResult& result);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace linespace::io
