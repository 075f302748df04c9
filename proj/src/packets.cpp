#include "pointerlab/packets.hpp"

#include <cmath>
#include <complex>

#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {

bool close(double a, double b) {
  return a == b || std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

// v1 supports overlaps and moments only for equal-width, equal-mass packets
// compared at equal times.
void require_compatible(const GaussianPacket& g1, const GaussianPacket& g2) {
  if (!close(g1.sigma_x, g2.sigma_x))
    throw UnsupportedPacketPair("packet widths differ");
  if (!close(g1.mass, g2.mass))
    throw UnsupportedPacketPair("packet masses differ");
  if (!close(g1.time, g2.time))
    throw UnsupportedPacketPair("packet times differ");
}

}  // namespace

void validate(const GaussianPacket& g) {
  if (!std::isfinite(g.x_center) || !std::isfinite(g.p_center) ||
      !std::isfinite(g.sigma_x) || !std::isfinite(g.mass) || !std::isfinite(g.time))
    throw InvalidStateError("packet has a non-finite field");
  if (!(g.sigma_x > 0.0)) throw InvalidStateError("packet sigma_x must be > 0");
  if (!(g.mass > 0.0)) throw InvalidStateError("packet mass must be > 0");
}

double sigma_p(const GaussianPacket& g, double hbar) {
  validate(g);
  return hbar / (2.0 * g.sigma_x);
}

Amplitude overlap(const GaussianPacket& g1, const GaussianPacket& g2, double hbar) {
  validate(g1);
  validate(g2);
  require_compatible(g1, g2);
  const double s = g1.sigma_x;
  const double dx = g1.x_center - g2.x_center;
  const double dp = g1.p_center - g2.p_center;
  const double magnitude =
      std::exp(-dx * dx / (8.0 * s * s) - dp * dp * s * s / (2.0 * hbar * hbar));
  const double phase = dx * (g1.p_center + g2.p_center) / (2.0 * hbar);
  return std::polar(magnitude, phase);
}

SuperpositionMoments superposition_moments(Amplitude c1, const GaussianPacket& g1,
                                           Amplitude c2, const GaussianPacket& g2,
                                           double hbar) {
  if (!is_finite(c1) || !is_finite(c2))
    throw InvalidStateError("superposition coefficients must be finite");
  const Amplitude z0 = overlap(g1, g2, hbar);

  // Cross moments <g1|x^n|g2> share the Gaussian factor z0 with the
  // complex-shifted center zc = (x1 + x2)/2 + i (p2 - p1) s^2 / hbar:
  //   <g1|x|g2>   = z0 * zc
  //   <g1|x^2|g2> = z0 * (zc^2 + s^2)
  const double s = g1.sigma_x;
  const std::complex<double> zc(0.5 * (g1.x_center + g2.x_center),
                                (g2.p_center - g1.p_center) * s * s / hbar);
  const Amplitude i1 = z0 * zc;
  const Amplitude i2 = z0 * (zc * zc + s * s);

  const double w1 = std::norm(c1);
  const double w2 = std::norm(c2);
  const Amplitude cross = std::conj(c1) * c2;
  const double nrm = w1 + w2 + 2.0 * std::real(cross * z0);
  if (!(nrm > 1e-12))
    throw InvalidStateError("superposition norm is degenerate");

  const double m1 =
      (w1 * g1.x_center + w2 * g2.x_center + 2.0 * std::real(cross * i1)) / nrm;
  const double m2 = (w1 * (g1.x_center * g1.x_center + s * s) +
                     w2 * (g2.x_center * g2.x_center + s * s) +
                     2.0 * std::real(cross * i2)) /
                    nrm;
  const double var = std::max(m2 - m1 * m1, 0.0);
  const double sd = std::sqrt(var);
  if (!(sd > 0.0)) throw InvalidStateError("superposition has degenerate width");
  return {m1, sd, std::abs(m1) / sd};
}

InterferenceCheck interference_check(const GaussianPacket& g1, const GaussianPacket& g2,
                                     double k, double hbar) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw ParameterError("interference strength k must be > 0");
  const double dx = std::abs(g1.x_center - g2.x_center);
  const double mag = std::abs(overlap(g1, g2, hbar));
  InterferenceCheck out;
  out.position_separated = dx > k * g1.sigma_x;
  out.overlap_suppressed = mag < std::exp(-k * k / 8.0);
  out.overlap_magnitude = mag;
  out.weakly_interfering = out.position_separated || out.overlap_suppressed;
  return out;
}

bool weakly_interfering(const GaussianPacket& g1, const GaussianPacket& g2, double k,
                        double hbar) {
  return interference_check(g1, g2, k, hbar).weakly_interfering;
}

bool packet_stable(const GaussianPacket& g, double dominance_ratio) {
  validate(g);
  return std::abs(g.x_center) >= dominance_ratio * g.sigma_x;
}

GaussianPacket evolve_free(const GaussianPacket& g, double dt, double hbar) {
  validate(g);
  if (!(dt >= 0.0) || !std::isfinite(dt))
    throw ParameterError("free evolution requires dt >= 0");
  GaussianPacket out = g;
  out.x_center += (g.p_center / g.mass) * dt;
  const double spread = hbar * dt / (2.0 * g.mass * g.sigma_x * g.sigma_x);
  out.sigma_x = g.sigma_x * std::sqrt(1.0 + spread * spread);
  out.time += dt;
  return out;
}

}  // namespace pointerlab
