#pragma once

#include <string>

#include <json.hpp>

#include "branchloci/dataset.hpp"
#include "branchloci/disc.hpp"
#include "branchloci/fnpipe.hpp"
#include "branchloci/polygon.hpp"
#include "branchloci/sweep.hpp"

namespace branchloci {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);
// Fixed significant-digit rendering for human-facing output.
std::string format_significant(double v, int digits);

void to_json(nlohmann::json& j, const ConePair& p);
void from_json(const nlohmann::json& j, ConePair& p);
void to_json(nlohmann::json& j, const DataSet& d);
void from_json(const nlohmann::json& j, DataSet& d);
void to_json(nlohmann::json& j, const ValidationReport& r);
void to_json(nlohmann::json& j, const ActionClass& c);
void to_json(nlohmann::json& j, const DiscPoint& p);
void to_json(nlohmann::json& j, const Geodesic& g);
void to_json(nlohmann::json& j, const CanonicalPolygon& p);
void to_json(nlohmann::json& j, const EmbeddedPolygon& e);
void to_json(nlohmann::json& j, const FNCoordinates& c);
void to_json(nlohmann::json& j, const LocusPoint& p);

std::string locus_csv_header();
std::string locus_csv_row(const LocusRow& row);

}  // namespace branchloci
