#pragma once

#include <stdexcept>
#include <string>

namespace segray {

// Base for all library errors. `name()` is the stable identifier that ends up
// in JSON summaries and exit-code mapping.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define SEGRAY_DEFINE_ERROR(E)                                   \
  class E : public Error {                                       \
  public:                                                        \
    explicit E(const std::string& what) : Error(#E, what) {}     \
  }

SEGRAY_DEFINE_ERROR(DegenerateSegment);
SEGRAY_DEFINE_ERROR(NotInside);
SEGRAY_DEFINE_ERROR(Unbounded);
SEGRAY_DEFINE_ERROR(UnknownKind);
SEGRAY_DEFINE_ERROR(OrderUnsupported);
SEGRAY_DEFINE_ERROR(QuadratureNotConverged);
SEGRAY_DEFINE_ERROR(GridTooCoarse);
SEGRAY_DEFINE_ERROR(SolverDiverged);
SEGRAY_DEFINE_ERROR(NonPositiveState);
SEGRAY_DEFINE_ERROR(NotConverged);
SEGRAY_DEFINE_ERROR(NotEven);
SEGRAY_DEFINE_ERROR(NonPositiveValue);
SEGRAY_DEFINE_ERROR(OutsideDomain);
SEGRAY_DEFINE_ERROR(ProfileInvalid);
SEGRAY_DEFINE_ERROR(LimitUndefined);
SEGRAY_DEFINE_ERROR(SamplerStarved);
SEGRAY_DEFINE_ERROR(HypothesisViolated);
SEGRAY_DEFINE_ERROR(TimeMismatch);
SEGRAY_DEFINE_ERROR(WidthTooSmall);
SEGRAY_DEFINE_ERROR(SequenceLeftDomain);
SEGRAY_DEFINE_ERROR(ConfigInvalid);

#undef SEGRAY_DEFINE_ERROR

} // namespace segray
