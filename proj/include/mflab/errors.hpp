#pragma once
#include <stdexcept>
#include <string>

namespace mflab {

// Base class for all numeric / domain failures raised by the library.
// The CLI maps ConfigError to exit code 2 and every other Error to 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MFLAB_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

MFLAB_DEFINE_ERROR(NonPositiveMetric);
MFLAB_DEFINE_ERROR(DegenerateTensor);
MFLAB_DEFINE_ERROR(ChartExit);
MFLAB_DEFINE_ERROR(StepFailure);
MFLAB_DEFINE_ERROR(NoConvergence);
MFLAB_DEFINE_ERROR(DegenerateSection);
MFLAB_DEFINE_ERROR(MissingPrimitive);
MFLAB_DEFINE_ERROR(FrameDegenerate);
MFLAB_DEFINE_ERROR(UnsupportedChart);
MFLAB_DEFINE_ERROR(NonConvexFiber);
MFLAB_DEFINE_ERROR(NonStarShaped);
MFLAB_DEFINE_ERROR(NotPeriodic);
MFLAB_DEFINE_ERROR(HypothesisUnverified);
MFLAB_DEFINE_ERROR(ConfigError);
MFLAB_DEFINE_ERROR(TaskError);

#undef MFLAB_DEFINE_ERROR

} // namespace mflab
