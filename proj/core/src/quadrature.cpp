#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "infoatom/error.hpp"
#include "infoatom/numerics.hpp"

namespace infoatom::numerics {
namespace {

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule
// (nodes xgk[1], xgk[3], xgk[5], xgk[7]).
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
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double resabs;
};

class Evaluator {
 public:
  Evaluator(const Integrand& f, std::size_t budget) : f_(f), budget_(budget) {}

  double operator()(double x) {
    ++count_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand returned a non-finite value at x = " << x;
      throw IntegrationError(msg.str(), best_estimate_, x);
    }
    return y;
  }

  Segment kronrod(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, 15> fv{};
    fv[7] = (*this)(center);
    for (int j = 0; j < 7; ++j) {
      const double dx = half * kXgk[j];
      fv[j] = (*this)(center - dx);
      fv[14 - j] = (*this)(center + dx);
    }
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
      const double pair = fv[j] + fv[14 - j];
      resk += kWgk[j] * pair;
      resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
      if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int j = 0; j < 7; ++j) {
      resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
    }
    resk *= half;
    resg *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);

    double err = std::abs(resk - resg);
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
      err = std::max(50.0 * kEps * resabs, err);
    }
    return {a, b, resk, err, resabs};
  }

  std::size_t count() const noexcept { return count_; }
  bool exhausted() const noexcept { return count_ >= budget_; }
  void set_best_estimate(double v) noexcept { best_estimate_ = v; }

 private:
  const Integrand& f_;
  std::size_t budget_;
  std::size_t count_ = 0;
  double best_estimate_ = 0.0;
};

// A segment whose error estimate sits on the roundoff floor cannot be improved
// by bisection.
bool roundoff_limited(const Segment& s) {
  return s.error <= 50.0 * kEps * s.resabs * (1.0 + 1e-12);
}

bool too_narrow(const Segment& s) {
  const double mid = 0.5 * (s.a + s.b);
  return !(mid > s.a && mid < s.b) ||
         (s.b - s.a) <= 64.0 * kEps * std::max(std::abs(s.a), std::abs(s.b));
}

IntegrationResult adaptive(Evaluator& eval, double a, double b, double rel_tol,
                           double abs_floor) {
  std::vector<Segment> segments;
  segments.reserve(64);
  segments.push_back(eval.kronrod(a, b));

  auto cmp = [&segments](std::size_t x, std::size_t y) {
    return segments[x].error < segments[y].error;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> queue(cmp);
  if (!roundoff_limited(segments[0]) && !too_narrow(segments[0])) queue.push(0);

  double total = segments[0].value;
  double error = segments[0].error;
  while (error > std::max(rel_tol * std::abs(total), abs_floor) && !queue.empty()) {
    if (eval.exhausted()) {
      throw IntegrationError("quadrature evaluation budget exhausted", total);
    }
    const std::size_t worst = queue.top();
    queue.pop();
    const Segment parent = segments[worst];
    const double mid = 0.5 * (parent.a + parent.b);
    const Segment left = eval.kronrod(parent.a, mid);
    const Segment right = eval.kronrod(mid, parent.b);
    total += left.value + right.value - parent.value;
    error += left.error + right.error - parent.error;
    eval.set_best_estimate(total);

    segments[worst] = left;
    segments.push_back(right);
    for (std::size_t idx : {worst, segments.size() - 1}) {
      if (!roundoff_limited(segments[idx]) && !too_narrow(segments[idx])) queue.push(idx);
    }
  }

  IntegrationResult out;
  for (const Segment& s : segments) {
    out.value += s.value;
    out.error_estimate += s.error;
  }
  out.evaluations = eval.count();
  return out;
}

}  // namespace

IntegrationResult integrate(const Integrand& f, double a, double b,
                            const IntegrationOptions& opts) {
  if (!(opts.rel_tol > 0.0)) throw DomainError("integrate: rel_tol must be > 0");
  if (!(b >= a)) throw DomainError("integrate: require a <= b");
  if (a == b) return {0.0, 0.0, 0};
  Evaluator eval(f, opts.max_evaluations);
  return adaptive(eval, a, b, opts.rel_tol, opts.abs_floor);
}

IntegrationResult integrate_semi_infinite(const Integrand& f,
                                          const IntegrationOptions& opts) {
  if (!(opts.rel_tol > 0.0)) {
    throw DomainError("integrate_semi_infinite: rel_tol must be > 0");
  }
  if (!(opts.initial_cutoff > 0.0)) {
    throw DomainError("integrate_semi_infinite: initial_cutoff must be > 0");
  }
  Evaluator eval(f, opts.max_evaluations);
  IntegrationResult head = adaptive(eval, 0.0, opts.initial_cutoff, opts.rel_tol,
                                    opts.abs_floor);
  double total = head.value;
  double error = head.error_estimate;
  eval.set_best_estimate(total);

  constexpr int kMaxPanels = 256;
  int small_panels = 0;
  double lower = opts.initial_cutoff;
  for (int panel = 0; panel < kMaxPanels; ++panel) {
    const double upper = 2.0 * lower;
    const double floor = std::max(opts.abs_floor, 0.25 * opts.rel_tol * std::abs(total));
    const IntegrationResult part = adaptive(eval, lower, upper, opts.rel_tol, floor);
    total += part.value;
    error += part.error_estimate;
    eval.set_best_estimate(total);
    const double threshold = std::max(opts.rel_tol * std::abs(total), opts.abs_floor);
    small_panels = std::abs(part.value) <= threshold ? small_panels + 1 : 0;
    if (small_panels == 2) {
      return {total, error + std::abs(part.value), eval.count()};
    }
    lower = upper;
  }
  throw IntegrationError("semi-infinite tail did not converge", total);
}

IntegrationResult integrate_semi_infinite(const Integrand& f, double rel_tol) {
  IntegrationOptions opts;
  opts.rel_tol = rel_tol;
  return integrate_semi_infinite(f, opts);
}

}  // namespace infoatom::numerics
