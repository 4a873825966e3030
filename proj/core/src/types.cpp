#include "vsheet/types.hpp"

#include <sstream>

namespace vsheet {

std::string_view to_string(MachClass m) {
  switch (m) {
    case MachClass::subsonic:
      return "subsonic";
    case MachClass::sonic:
      return "sonic";
    case MachClass::supersonic:
      return "supersonic";
  }
  return "unknown";
}

std::string_view to_string(StabilityClass s) {
  switch (s) {
    case StabilityClass::elliptic_unstable:
      return "elliptic_unstable";
    case StabilityClass::transition:
      return "transition";
    case StabilityClass::weakly_stable:
      return "weakly_stable";
  }
  return "unknown";
}

void require_valid(const MediumParams& params) {
  if (!(params.c > 0.0) || !std::isfinite(params.c)) {
    throw DomainError("sound speed c must be positive and finite");
  }
  if (!std::isfinite(params.v1_plus) || !std::isfinite(params.v1_minus)) {
    throw DomainError("tangential velocities must be finite");
  }
}

void require_symmetric(const MediumParams& params) {
  require_valid(params);
  if (!(params.V1() > 0.0)) {
    throw DomainError("half velocity jump v must be positive");
  }
  if (!params.is_symmetric()) {
    std::ostringstream os;
    os << "operation requires v1+ = v, v1- = -v (w1 = 0); got w1 = "
       << params.w1();
    throw DomainError(os.str());
  }
}

void require_in_frequency_set(const Frequency& freq) {
  if (!std::isfinite(freq.gamma) || !std::isfinite(freq.delta) ||
      !std::isfinite(freq.eta)) {
    throw DomainError("frequency components must be finite");
  }
  if (freq.gamma < 0.0) {
    throw DomainError("frequency must have gamma >= 0");
  }
  if (freq.lambda_sq() == 0.0) {
    throw DomainError("(tau, eta) = (0, 0) is not in the frequency set");
  }
}

}  // namespace vsheet
