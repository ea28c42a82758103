#include "hubs/quadrature.hpp"

#include <array>
#include <queue>
#include <vector>

namespace hubs::quadrature {

namespace {

// Gauss-Kronrod 15-point nodes and weights on [-1,1]; the embedded
// 7-point Gauss rule sits on the odd-index nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kronrod = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kNodes[i];
    const double f_sum = (i == 7) ? f(mid) : f(mid - dx) + f(mid + dx);
    kronrod += kKronrodW[i] * f_sum;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * f_sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_intervals) {
  if (!(a < b)) return 0.0;
  std::priority_queue<Segment> segments;
  segments.push(evaluate(f, a, b));
  double total_error = segments.top().error;
  double total_value = segments.top().value;
  int used = 1;
  while (total_error > tol) {
    if (used >= max_intervals) {
      throw NumericError("quadrature did not converge: error " + std::to_string(total_error) +
                         " > tol " + std::to_string(tol));
    }
    Segment worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = evaluate(f, worst.a, mid);
    Segment right = evaluate(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    segments.push(left);
    segments.push(right);
    ++used;
  }
  return total_value;
}

}  // namespace hubs::quadrature
