#include "herbidyn/coupled_system.hpp"

#include <cmath>
#include <sstream>

#include "herbidyn/errors.hpp"

namespace herbidyn {

const char* to_string(Variant v) {
    return v == Variant::ModelI ? "I" : "II";
}

Variant variant_from_string(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return Variant::ModelI;
    if (s == "II" || s == "ii" || s == "2") return Variant::ModelII;
    throw DomainError("unknown model variant: " + s);
}

SystemSpec::SystemSpec(Variant variant, GrowthModel model, double a)
    : variant_(variant), model_(std::move(model)), a_(a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("attack rate a must be positive and finite");
}

namespace {

void need_state(const State& s) {
    if (!(s.P >= 0.0) || !(s.H >= 0.0) || !std::isfinite(s.P) ||
        !std::isfinite(s.H))
        throw DomainError("state must lie in the closed positive quadrant");
}

}  // namespace

State step(const SystemSpec& spec, const State& s) {
    need_state(s);
    const double FP = spec.model().step(s.P);
    const double escape = std::exp(-spec.a() * s.H);
    // 1 - e^{-aH} via expm1 keeps precision when aH is tiny.
    const double eaten = -std::expm1(-spec.a() * s.H);
    const double base = spec.variant() == Variant::ModelI ? s.P : FP;
    return {FP * escape, base * eaten};
}

Mat2 jacobian(const SystemSpec& spec, const State& s) {
    need_state(s);
    const double a = spec.a();
    const double FP = spec.model().step(s.P);
    const double dFP = spec.model().deriv(s.P);
    const double escape = std::exp(-a * s.H);
    const double eaten = -std::expm1(-a * s.H);

    Mat2 J;
    J.m00 = dFP * escape;
    J.m01 = -a * FP * escape;
    if (spec.variant() == Variant::ModelI) {
        J.m10 = eaten;
        J.m11 = a * s.P * escape;
    } else {
        J.m10 = dFP * eaten;
        J.m11 = a * FP * escape;
    }
    return J;
}

EigenPair eigenvalues(const Mat2& M) {
    const double tr = M.trace();
    const double disc = tr * tr - 4.0 * M.det();
    std::complex<double> l1, l2;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        l1 = {0.5 * (tr + s), 0.0};
        l2 = {0.5 * (tr - s), 0.0};
    } else {
        const double s = std::sqrt(-disc);
        l1 = {0.5 * tr, 0.5 * s};
        l2 = {0.5 * tr, -0.5 * s};
    }
    const auto before = [](const std::complex<double>& x,
                           const std::complex<double>& y) {
        const double ax = std::abs(x), ay = std::abs(y);
        if (ax != ay) return ax > ay;
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    };
    if (before(l2, l1)) std::swap(l1, l2);
    return {l1, l2};
}

Trajectory simulate(const SystemSpec& spec, const State& s0, long T,
                    long stride) {
    if (T < 1) throw DomainError("simulate: T must be at least 1");
    if (stride < 1) throw DomainError("simulate: stride must be at least 1");
    need_state(s0);

    Trajectory traj;
    traj.stride = stride;
    traj.states.reserve(static_cast<std::size_t>(T / stride) + 1);
    traj.states.push_back(s0);

    State s = s0;
    for (long t = 1; t <= T; ++t) {
        s = step(spec, s);
        if (s.P > kOverflowGuard || s.H > kOverflowGuard) {
            std::ostringstream msg;
            msg << "state exceeded " << kOverflowGuard << " at step " << t
                << " (P=" << s.P << ", H=" << s.H << ")";
            throw SimulationOverflow(msg.str());
        }
        if (t % stride == 0) traj.states.push_back(s);
    }
    return traj;
}

}  // namespace herbidyn
