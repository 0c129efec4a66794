#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "emknot/knotfields.hpp"
#include "emknot/vec3.hpp"

namespace emknot {

/// Ordered polyline produced by field-line tracing (dimensionless coords).
struct Curve {
    std::vector<Vec3> points;
    bool closed = false;
    double arc_length = 0.0;
    std::string diagnostic;  // set when tracing stopped without closure
};

struct TraceConfig {
    double step = 0.01;             // arc-length integrator step
    int max_steps = 400000;
    double closure_tol = 1e-3;      // positional gap for closure detection
    bool refine = false;            // re-trace at half step, keep the finer curve
    double min_arc = 0.5;           // no closure test before this arc length
    double tangent_align_cos = 0.99;
    double stagnation_eps = 1e-8;   // |field| below this raises StagnationPoint

    void validate() const;
};

using FieldSampler = std::function<Vec3(const Vec3&)>;

/// Arc-length RK4 integration of the normalized field direction from seed.
/// Returns a closed curve when the line re-enters closure_tol of the seed
/// with aligned tangent; otherwise an open curve with a diagnostic.
Curve trace_line(const FieldSampler& field, const Vec3& seed, const TraceConfig& cfg = {});

struct LinkingConfig {
    int max_segments = 2000;       // resampling cap for the double sum
    double min_separation = 0.01;  // CurvesTooClose below this distance
};

struct LinkingEstimate {
    double raw = 0.0;
    int nearest = 0;
    bool conclusive = false;  // |raw - nearest| <= 0.1
};

/// Gauss double line integral over segment midpoints of the two (closed,
/// resampled) curves. Throws OpenCurve / CurvesTooClose.
LinkingEstimate gauss_linking(const Curve& c1, const Curve& c2,
                              const LinkingConfig& cfg = {});

/// Uniform index resampling down to at most max_segments segments.
Curve resample_curve(const Curve& c, int max_segments);

enum class FieldChoice { E, B };

/// Closed-form field sampler of the knot family at fixed dimensionless time.
FieldSampler knot_field_sampler(const KnotParams& p, FieldChoice which, double T,
                                const Units& u = {});

/// Default seed points: staggered radii on the z = 0 plane for B lines and
/// on the x = 0 plane for E lines, so seeds land on distinct flux surfaces.
std::vector<Vec3> default_seeds(FieldChoice which, int count);

struct PairLink {
    int i = 0, j = 0;
    std::optional<LinkingEstimate> link;
    std::string error;  // non-empty when this pair failed
};

struct LinkingMatrix {
    std::vector<Curve> curves;
    std::vector<PairLink> pairs;

    bool all_failed() const;
    /// nullopt when any pair failed or was inconclusive.
    std::optional<int> common_value() const;
};

/// Trace all seeds and link every pair; per-pair failures are recorded, not
/// thrown.
LinkingMatrix linking_matrix(const KnotParams& p, FieldChoice which, double T,
                             const std::vector<Vec3>& seeds, const TraceConfig& tcfg = {},
                             const LinkingConfig& lcfg = {});

}  // namespace emknot
