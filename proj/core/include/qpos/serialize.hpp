#pragma once

#include <span>
#include <string>

#include "qpos/identities.hpp"
#include "qpos/merca.hpp"
#include "qpos/periodic.hpp"
#include "qpos/verifier.hpp"

namespace qpos {

// Every document is a JSON object carrying "kind" and "verdict" ("pass" or
// "fail"). Rationals are emitted as "p/q" strings and integers as JSON
// integers (or decimal strings if they exceed 64 bits); no floats appear.

std::string to_json(const PositivityCertificate& cert, int indent = 2);
std::string to_json(const IdentityReport& report, int indent = 2);
std::string to_json(std::span<const IdentityReport> reports, int indent = 2);
std::string to_json(const MercaCertificate& cert, int indent = 2);
std::string to_json(const PeriodicDecomposition& d, int indent = 2);
std::string to_json(const CoprimeTuple45& tuple, const RemainderCheck& check, int indent = 2);

} // namespace qpos
