#pragma once

#include <array>

namespace mirrad {

// Oscillatory distance envelopes multiplying the mirror-induced part of each
// dissipation kernel, as functions of x = a * (|nu| - Omega). All six are
// even in x, bounded, and decay like 1/x for large x. Closed forms have
// removable 1/x^5 singularities at the origin; below kEnvelopeSwitch they are
// evaluated from fixed-precision Taylor tables instead.
double envelope_f1(double x);  // EE parallel
double envelope_f2(double x);  // EE perpendicular
double envelope_f3(double x);  // EB parallel
double envelope_f4(double x);  // EB perpendicular
double envelope_f5(double x);  // BB parallel
double envelope_f6(double x);  // BB perpendicular, identical to f4

inline constexpr double kEnvelopeSwitch = 0.5;

// Values at x = 0 (mirror touching the atom's average position).
inline constexpr double kF1Zero = 14.0 / 15.0;
inline constexpr double kF2Zero = 11.0 / 15.0;
inline constexpr double kF3Zero = 1.0 / 3.0;
inline constexpr double kF4Zero = 2.0 / 3.0;
inline constexpr double kF5Zero = 1.0 / 3.0;
inline constexpr double kF6Zero = 2.0 / 3.0;

// Even cosine moments V_n(x) = integral_{-1}^{1} u^{2n} cos(2 x u) du for
// n = 0, 1, 2, with the same series/closed-form switching as the envelopes.
double cosine_moment(int n, double x);

namespace envelope_detail {
// Both evaluation routes for envelope index 1..6, exposed so the agreement
// across the switch point stays pinned by tests. closed_form requires x > 0.
double series_form(int index, double x);
double closed_form(int index, double x);
}  // namespace envelope_detail

}  // namespace mirrad
