#include "clockrc/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clockrc {

namespace {

// series expansion, converges fast for x < a + 1
double gamma_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a,x), x >= a + 1
double gamma_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gammp(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gammp: bad arguments");
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? gamma_series(a, x) : 1.0 - gamma_cf(a, x);
}

double gammq(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gammq: bad arguments");
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gamma_series(a, x) : gamma_cf(a, x);
}

double chi2_sf(double x, int dof) {
  if (dof < 1) throw std::invalid_argument("chi2_sf: dof must be >= 1");
  return gammq(0.5 * dof, 0.5 * x);
}

Chi2Result chi2_gof(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs) {
  if (counts.size() != probs.size() || counts.empty())
    throw std::invalid_argument("chi2_gof: size mismatch");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  Chi2Result res;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double expected = probs[i] * static_cast<double>(total);
    if (expected <= 0.0) {
      if (counts[i] != 0) res.stat = std::numeric_limits<double>::infinity();
      continue;
    }
    double diff = static_cast<double>(counts[i]) - expected;
    res.stat += diff * diff / expected;
    ++res.dof;
  }
  res.dof -= 1;
  if (res.dof < 1) res.dof = 1;
  res.p_value = std::isinf(res.stat) ? 0.0 : chi2_sf(res.stat, res.dof);
  return res;
}

Chi2Result chi2_two_sample_2x2(std::uint64_t a_success, std::uint64_t a_failure,
                               std::uint64_t b_success, std::uint64_t b_failure) {
  return chi2_two_sample({a_success, a_failure}, {b_success, b_failure});
}

Chi2Result chi2_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("chi2_two_sample: bad table");
  double na = 0.0, nb = 0.0;
  for (auto v : a) na += static_cast<double>(v);
  for (auto v : b) nb += static_cast<double>(v);
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("chi2_two_sample: empty sample");
  Chi2Result res;
  int used = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double col = static_cast<double>(a[i]) + static_cast<double>(b[i]);
    if (col == 0.0) continue;
    double ea = col * na / (na + nb);
    double eb = col * nb / (na + nb);
    double da = static_cast<double>(a[i]) - ea;
    double db = static_cast<double>(b[i]) - eb;
    res.stat += da * da / ea + db * db / eb;
    ++used;
  }
  res.dof = used - 1;
  if (res.dof < 1) res.dof = 1;
  res.p_value = chi2_sf(res.stat, res.dof);
  return res;
}

BatchMeansResult batch_means(const std::vector<double>& series, int batches) {
  if (batches < 2) throw std::invalid_argument("batch_means: need at least 2 batches");
  BatchMeansResult res;
  const std::size_t per = series.size() / static_cast<std::size_t>(batches);
  if (per == 0) throw std::invalid_argument("batch_means: series shorter than batch count");
  std::vector<double> means(static_cast<std::size_t>(batches), 0.0);
  for (int b = 0; b < batches; ++b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < per; ++i) sum += series[static_cast<std::size_t>(b) * per + i];
    means[static_cast<std::size_t>(b)] = sum / static_cast<double>(per);
  }
  for (double m : means) res.mean += m;
  res.mean /= batches;
  double var = 0.0;
  for (double m : means) var += (m - res.mean) * (m - res.mean);
  var /= (batches - 1);
  res.std_error = std::sqrt(var / batches);
  res.batches = batches;
  return res;
}

}  // namespace clockrc
