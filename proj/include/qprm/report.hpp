#pragma once

// JSON, CSV and plain-text renderings of analysis results.

#include "qprm/census.hpp"
#include "qprm/prm.hpp"
#include "qprm/quadric.hpp"

#include <json.hpp>

#include <string>

namespace qprm {

using Json = nlohmann::ordered_json;

Json to_json(const Field& f, const ClassificationReport& r);
Json to_json(const MinimalityVerdict& v);
Json to_json(const MinimalCountTable& t);
Json to_json(const ContainmentViolation& v);
Json to_json(const ContainmentReport& r);
Json to_json(const FormSurvey& s);
Json to_json(const ConicSystem& s);

Json code_info(const PrmCode& code);
Json points_json(const QuadraticForm& F, const ProjectiveSpace& space);

std::string table_csv(const MinimalCountTable& t);
std::string table_text(const MinimalCountTable& t);

}  // namespace qprm
