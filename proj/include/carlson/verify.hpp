#pragma once

// Independent certificate checks. They re-evaluate each defining universal
// by direct enumeration over core and spans, and share no code with the
// searches that produce certificates.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "carlson/certificate.hpp"
#include "carlson/coloring.hpp"

namespace carlson {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> obligations;  // every checked statement, in order
  std::string failure;                   // first failing obligation
};

VerifyReport verify_hj(const Coloring& f, const HJWitness& w);
/// Throws HashMismatch if the certificate names another coloring.
VerifyReport verify_carlson(const Coloring& f, const CarlsonCertificate& c);
VerifyReport verify_match(const Coloring& f, const MatchStructure& m);
/// Recurrence schedules need only f. Strong-proximality schedules need the
/// partner g. Levels must run 0, 1, ..., L without gaps (MalformedCertificate).
VerifyReport verify_schedule(const Coloring& f, const Coloring* g, const WitnessSchedule& s);
/// gs[n] goes with offsets[n] and colors[n]; every set of Y must be a union
/// of blocks of x.
VerifyReport verify_fu(std::span<const SetColoring> gs, const FinSetSequence& x, const FuCertificate& c);

}  // namespace carlson
