#pragma once

#include <json.hpp>

#include "nsg/apery.hpp"
#include "nsg/core.hpp"
#include "nsg/euclid3.hpp"
#include "nsg/grobner.hpp"
#include "nsg/oracle.hpp"

namespace nsg {

/// "x2^3*x4" style rendering of a non-parameter exponent vector; "1" when
/// all exponents vanish.
std::string monomial_string(std::span<const Int> k);

/// Rendering of x1^e * k.
std::string monomial_string(Int e, std::span<const Int> k);

std::string binomial_string(const Binomial& b);

nlohmann::json monomial_json(std::span<const Int> k);
nlohmann::json monomial_json(Int e, std::span<const Int> k);
nlohmann::json to_json(const ExponentVector& v);
nlohmann::json to_json(const GeneratorSet& g);
nlohmann::json to_json(const Binomial& b);
nlohmann::json to_json(const AperyTable& t);
nlohmann::json to_json(const HilbertSeries& h);
nlohmann::json to_json(const MembershipCertificate& c);
nlohmann::json to_json(const StaircaseReport& r);
nlohmann::json to_json(const Euclid3Table& t);
nlohmann::json to_json(const oracle::VerificationReport& r);

}  // namespace nsg
