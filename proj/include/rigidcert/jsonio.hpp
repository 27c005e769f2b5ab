#pragma once

#include <string>

#include <json.hpp>

#include "rigidcert/certify.hpp"
#include "rigidcert/construct.hpp"
#include "rigidcert/framework.hpp"
#include "rigidcert/psd.hpp"
#include "rigidcert/rigidity.hpp"
#include "rigidcert/veronese.hpp"

namespace rigidcert {

// Canonical JSON builders: fixed key order, rationals as lowest-term strings.
using OJson = nlohmann::ordered_json;

OJson json_of(const Rational& x);
OJson json_of(const VecQ& v);
OJson json_of(const RatMatrix& m); // array of row arrays
OJson json_of(const Framework& f);
OJson json_of(const PsdReport& r);
OJson json_of(const ConicReport& r);
OJson json_of(const HullIntersectionReport& r);
OJson json_of(const MaxwellAudit& a);
OJson json_of(const RankReport& r);
OJson json_of(const ConstructionAudit& a);
OJson json_of(const Construction& c);
OJson json_of(const SuperStabilityCertificate& c);
OJson json_of(const GgrReport& r);

// dump with 2-space indent and trailing newline; the byte-stable form used
// for files and stdout.
std::string dump_canonical(const OJson& j);

} // namespace rigidcert
