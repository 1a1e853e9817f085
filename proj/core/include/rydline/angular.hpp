#pragma once

namespace rydline {

/// Normalized associated Legendre function with Condon-Shortley phase,
/// scaled so that the integral of Pbar^2 over x in [-1, 1] is 1.
/// The spherical harmonic is Y_lm = Pbar_lm(cos theta) e^{i m phi} / sqrt(2 pi).
double assoc_legendre_norm(int l, int m, double x);

/// <l m | cos(theta) | l+1 m> angular matrix element.
double cos_theta_coupling(int l, int m);

} // namespace rydline
