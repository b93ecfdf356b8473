#include "sharp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharp/errors.hpp"

namespace sharp::quad {

namespace {

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are
// shared with the 7-point Gauss rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool splittable;
};

struct LargerError {
    bool operator()(const Segment& lhs, const Segment& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;
    }
};

double checked(const Integrand& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v)) {
        throw NonFiniteError("integrand is not finite at x = " + std::to_string(x), x);
    }
    return v;
}

Segment gauss_kronrod_15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = checked(f, center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = checked(f, center - dx) + checked(f, center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;

    // Intervals narrower than a few hundred ulps of their location cannot be
    // bisected meaningfully.
    const double scale = std::max(std::abs(a), std::abs(b));
    const bool splittable = (b - a) > 256.0 * std::numeric_limits<double>::epsilon() * scale;
    return Segment{a, b, kronrod, std::abs(kronrod - gauss), splittable};
}

// Neumaier-compensated running sum.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double total() const { return sum + comp; }
};

}  // namespace

void QuadSpec::validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadSpec: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadSpec: rel_tol must be > 0");
    if (max_subdivisions < 1) throw std::invalid_argument("QuadSpec: max_subdivisions must be >= 1");
    if (!(tail_safety >= 1.0)) throw std::invalid_argument("QuadSpec: tail_safety must be >= 1");
}

QuadSpec QuadSpec::tightened(double factor) const {
    QuadSpec out = *this;
    out.abs_tol /= factor;
    out.rel_tol /= factor;
    return out;
}

double QuadSpec::target(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }

IntegralResult integrate_finite(const Integrand& f, double a, double b, const QuadSpec& spec) {
    spec.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");

    std::priority_queue<Segment, std::vector<Segment>, LargerError> active;
    std::vector<Segment> frozen;
    long evaluations = 0;

    active.push(gauss_kronrod_15(f, a, b));
    evaluations += 15;
    double total_value = active.top().value;
    double total_error = active.top().error;

    while (total_error > spec.target(total_value) &&
           static_cast<int>(active.size() + frozen.size()) < spec.max_subdivisions && !active.empty()) {
        Segment worst = active.top();
        active.pop();
        if (!worst.splittable) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod_15(f, worst.a, mid);
        const Segment right = gauss_kronrod_15(f, mid, worst.b);
        evaluations += 30;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }

    // Re-sum the final partition in left-to-right order so the reported value
    // does not depend on the drift of the running totals.
    std::vector<Segment> partition = std::move(frozen);
    while (!active.empty()) {
        partition.push_back(active.top());
        active.pop();
    }
    std::sort(partition.begin(), partition.end(),
              [](const Segment& l, const Segment& r) { return l.a < r.a; });
    Accumulator value;
    Accumulator error;
    for (const auto& s : partition) {
        value.add(s.value);
        error.add(s.error);
    }

    IntegralResult out;
    out.value = value.total();
    out.err_estimate = error.total();
    out.converged = out.err_estimate <= spec.target(out.value);
    out.evaluations = evaluations;
    return out;
}

double truncation_point(double a, const DecayEnvelope& envelope, const QuadSpec& spec) {
    if (!(envelope.rate > 0.0) || !std::isfinite(envelope.rate)) {
        throw InvalidEnvelope("decay envelope rate must be positive and finite");
    }
    if (!(envelope.amplitude >= 0.0) || !std::isfinite(envelope.amplitude)) {
        throw InvalidEnvelope("decay envelope amplitude must be non-negative and finite");
    }
    const double lambda = envelope.rate;
    const double log_ratio = std::log(std::max(1.0, envelope.amplitude / (lambda * spec.abs_tol)));
    double length = spec.tail_safety * log_ratio / lambda;
    length = std::max({length, envelope.onset, 1.0 / lambda});
    return a + length;
}

IntegralResult integrate_semi_infinite(const Integrand& f, double a, const DecayEnvelope& envelope,
                                       const QuadSpec& spec) {
    spec.validate();
    const double cut = truncation_point(a, envelope, spec);
    const double tail = envelope.amplitude * std::exp(-envelope.rate * (cut - a)) / envelope.rate;

    QuadSpec body_spec = spec;
    if (tail < 0.5 * spec.abs_tol) body_spec.abs_tol = spec.abs_tol - tail;

    IntegralResult out = integrate_finite(f, a, cut, body_spec);
    out.err_estimate += tail;
    out.converged = out.converged && out.err_estimate <= spec.target(out.value);
    return out;
}

IntegralResult integrate_even_line(const Integrand& f, const DecayEnvelope& envelope, const QuadSpec& spec) {
    QuadSpec half = spec;
    half.abs_tol = 0.5 * spec.abs_tol;
    IntegralResult out = integrate_semi_infinite(f, 0.0, envelope, half);
    out.value *= 2.0;
    out.err_estimate *= 2.0;
    out.converged = out.converged && out.err_estimate <= spec.target(out.value);
    return out;
}

}  // namespace sharp::quad
