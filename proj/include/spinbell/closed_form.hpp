#pragma once

// Analytic expressions for the correlations. They form the second route
// that the trace evaluations in correlations.hpp are checked against.

#include "spinbell/spin_core.hpp"

namespace spinbell::closed_form {

/// Antiparallel P_lc = -cos(ta) cos(tb), independent of xi and eta.
double spin_local_antiparallel(const Direction& a, const Direction& b);
/// Antiparallel P_nlc = 2 sin(xi) cos(xi) sin(ta) sin(tb) cos(pa - pb + 2 eta).
double spin_nonlocal_antiparallel(double xi, double eta, const Direction& a, const Direction& b);
/// Parallel P_lc = +cos(ta) cos(tb).
double spin_local_parallel(const Direction& a, const Direction& b);
/// Parallel P_nlc = 2 sin(xi) cos(xi) sin(ta) sin(tb) cos(pa + pb + 2 eta).
double spin_nonlocal_parallel(double xi, double eta, const Direction& a, const Direction& b);

/// Antiparallel N_lc(+a,+b) = sin^2 xi cos^2(ta/2) sin^2(tb/2) + cos^2 xi sin^2(ta/2) cos^2(tb/2).
/// Equals the parallel N_lc(+a,-b).
double number_local_pp(double xi, const Direction& a, const Direction& b);
/// Antiparallel N_lc(-a,-b) = sin^2 xi sin^2(ta/2) cos^2(tb/2) + cos^2 xi cos^2(ta/2) sin^2(tb/2).
/// Equals the parallel N_lc(-a,+b).
double number_local_mm(double xi, const Direction& a, const Direction& b);
/// Antiparallel N_nlc(+a,+b) = N_nlc(-a,-b) = (1/2) sin xi cos xi sin ta sin tb cos(pa - pb + 2 eta).
double number_nonlocal_antiparallel(double xi, double eta, const Direction& a,
                                    const Direction& b);
/// Parallel N_nlc(+a,-b) = N_nlc(-a,+b) = -(1/2) sin xi cos xi sin ta sin tb cos(pa + pb + 2 eta).
double number_nonlocal_parallel(double xi, double eta, const Direction& a, const Direction& b);

/// W_lc = -(cos^2(ta/2) - cos^2(tc/2)) cos^2(tb/2) - cos^2(tc/2) sin^2(ta/2).
double wigner_local(double theta_a, double theta_b, double theta_c);
/// Same quantity, W_lc = (1/4)(-1 - ca cb + cc cb + ca cc).
double wigner_local_cosines(double theta_a, double theta_b, double theta_c);
/// -sin^2(tc/2) cos^2(ta/2); claimed to sit between W_lc and 0.
double wigner_local_chain_term(double theta_a, double theta_c);

double wigner_nonlocal_antiparallel(double xi, double eta, const Direction& a,
                                    const Direction& b, const Direction& c);
double wigner_nonlocal_parallel(double xi, double eta, const Direction& a, const Direction& b,
                                const Direction& c);

}  // namespace spinbell::closed_form
