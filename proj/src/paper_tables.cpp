#include "twophase/paper_tables.hpp"

namespace twophase {

// Generated from the published simulation tables; one entry per
// (table row, estimator).
const std::vector<ReferenceCell>& reference_cells() {
  static const std::vector<ReferenceCell> cells = {
    {"1", "cc_normal", 0.0, 0.0, 0.0, 0.0, 360, "(Intercept)", EstimatorKind::mle_cc, 0.076, 0.076},
    {"1", "cc_normal", 0.0, 0.0, 0.0, 0.0, 360, "(Intercept)", EstimatorKind::stab_xz, 0.076, 0.076},
    {"1", "cc_normal", 0.0, 0.0, 0.0, 0.0, 360, "(Intercept)", EstimatorKind::ipw, 0.076, 0.076},
    {"1", "cc_normal", 0.0, 0.0, 0.0, 0.0, 360, "X", EstimatorKind::mle_cc, 0.103, 0.103},
    {"1", "cc_normal", 0.0, 0.0, 0.0, 0.0, 360, "X", EstimatorKind::stab_xz, 0.103, 0.102},
    {"1", "cc_normal", 0.0, 0.0, 0.0, 0.0, 360, "X", EstimatorKind::ipw, 0.104, 0.104},
    {"1", "cc_normal", 0.5, 0.0, 0.0, 0.0, 403, "(Intercept)", EstimatorKind::mle_cc, 0.082, 0.082},
    {"1", "cc_normal", 0.5, 0.0, 0.0, 0.0, 403, "(Intercept)", EstimatorKind::stab_xz, 0.082, 0.082},
    {"1", "cc_normal", 0.5, 0.0, 0.0, 0.0, 403, "(Intercept)", EstimatorKind::ipw, 0.083, 0.084},
    {"1", "cc_normal", 0.5, 0.0, 0.0, 0.0, 403, "X", EstimatorKind::mle_cc, 0.110, 0.110},
    {"1", "cc_normal", 0.5, 0.0, 0.0, 0.0, 403, "X", EstimatorKind::stab_xz, 0.110, 0.110},
    {"1", "cc_normal", 0.5, 0.0, 0.0, 0.0, 403, "X", EstimatorKind::ipw, 0.119, 0.119},
    {"1", "cc_normal", 1.0, 0.0, 0.0, 0.0, 560, "(Intercept)", EstimatorKind::mle_cc, 0.089, 0.090},
    {"1", "cc_normal", 1.0, 0.0, 0.0, 0.0, 560, "(Intercept)", EstimatorKind::stab_xz, 0.089, 0.090},
    {"1", "cc_normal", 1.0, 0.0, 0.0, 0.0, 560, "(Intercept)", EstimatorKind::ipw, 0.101, 0.102},
    {"1", "cc_normal", 1.0, 0.0, 0.0, 0.0, 560, "X", EstimatorKind::mle_cc, 0.108, 0.108},
    {"1", "cc_normal", 1.0, 0.0, 0.0, 0.0, 560, "X", EstimatorKind::stab_xz, 0.107, 0.107},
    {"1", "cc_normal", 1.0, 0.0, 0.0, 0.0, 560, "X", EstimatorKind::ipw, 0.138, 0.139},
    {"1", "cc_normal", 1.5, 0.0, 0.0, 0.0, 878, "(Intercept)", EstimatorKind::mle_cc, 0.096, 0.096},
    {"1", "cc_normal", 1.5, 0.0, 0.0, 0.0, 878, "(Intercept)", EstimatorKind::stab_xz, 0.096, 0.096},
    {"1", "cc_normal", 1.5, 0.0, 0.0, 0.0, 878, "(Intercept)", EstimatorKind::ipw, 0.118, 0.119},
    {"1", "cc_normal", 1.5, 0.0, 0.0, 0.0, 878, "X", EstimatorKind::mle_cc, 0.107, 0.107},
    {"1", "cc_normal", 1.5, 0.0, 0.0, 0.0, 878, "X", EstimatorKind::stab_xz, 0.107, 0.107},
    {"1", "cc_normal", 1.5, 0.0, 0.0, 0.0, 878, "X", EstimatorKind::ipw, 0.140, 0.142},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.029, 0.029},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.027, 0.027},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.024, 0.024},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.019, 0.019},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.019, 0.019},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.026, 0.026},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.023, 0.023},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.021, 0.021},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.016, 0.016},
    {"2", "tp_homoscedastic", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.012, 0.012},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.029, 0.029},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.027, 0.027},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.024, 0.024},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.020, 0.020},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.022, 0.022},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.026, 0.026},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.023, 0.023},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.021, 0.021},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.018, 0.018},
    {"2", "tp_homoscedastic", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.018, 0.018},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.029, 0.029},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.027, 0.027},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.024, 0.024},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.022, 0.022},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.025, 0.025},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.026, 0.026},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.023, 0.023},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.021, 0.021},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.019, 0.019},
    {"2", "tp_homoscedastic", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.022, 0.022},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.029, 0.029},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.027, 0.027},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.024, 0.024},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.023, 0.023},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.027, 0.027},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.026, 0.026},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.023, 0.023},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.021, 0.021},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.020, 0.020},
    {"2", "tp_homoscedastic", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.024, 0.024},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.041, 0.041},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.037, 0.037},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.033, 0.033},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.029, 0.029},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.027, 0.027},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.037, 0.037},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.032, 0.032},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.029, 0.029},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.027, 0.027},
    {"2", "tp_homoscedastic", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.017, 0.017},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.041, 0.041},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.037, 0.037},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.033, 0.033},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.030, 0.030},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.029, 0.029},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.037, 0.037},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.032, 0.032},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.029, 0.029},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.028, 0.028},
    {"2", "tp_homoscedastic", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.022, 0.022},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.041, 0.041},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.037, 0.037},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.033, 0.033},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.031, 0.031},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.033, 0.033},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.037, 0.037},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.032, 0.032},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.029, 0.029},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.028, 0.028},
    {"2", "tp_homoscedastic", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.028, 0.028},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.041, 0.041},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.037, 0.037},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.033, 0.033},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.032, 0.032},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.036, 0.036},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.037, 0.037},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.032, 0.032},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.029, 0.029},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.028, 0.028},
    {"2", "tp_homoscedastic", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.032, 0.032},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "X", EstimatorKind::ipw, 0.036, 0.036},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "X", EstimatorKind::stab_xz, 0.035, 0.035},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "X", EstimatorKind::stab_z, 0.035, 0.035},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "X", EstimatorKind::stab_rake, 0.029, 0.029},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "X", EstimatorKind::gr, 0.029, 0.029},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "Z", EstimatorKind::ipw, 0.044, 0.044},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "Z", EstimatorKind::stab_xz, 0.043, 0.043},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "Z", EstimatorKind::stab_z, 0.043, 0.043},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "Z", EstimatorKind::stab_rake, 0.031, 0.031},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.1, 0, "Z", EstimatorKind::gr, 0.030, 0.030},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "X", EstimatorKind::ipw, 0.040, 0.040},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "X", EstimatorKind::stab_xz, 0.039, 0.039},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "X", EstimatorKind::stab_z, 0.038, 0.038},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "X", EstimatorKind::stab_rake, 0.031, 0.031},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "X", EstimatorKind::gr, 0.031, 0.031},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "Z", EstimatorKind::ipw, 0.053, 0.053},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "Z", EstimatorKind::stab_xz, 0.049, 0.049},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "Z", EstimatorKind::stab_z, 0.049, 0.049},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "Z", EstimatorKind::stab_rake, 0.033, 0.033},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.25, 0, "Z", EstimatorKind::gr, 0.032, 0.032},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "X", EstimatorKind::ipw, 0.047, 0.047},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "X", EstimatorKind::stab_xz, 0.042, 0.042},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "X", EstimatorKind::stab_z, 0.041, 0.041},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "X", EstimatorKind::stab_rake, 0.034, 0.034},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "X", EstimatorKind::gr, 0.036, 0.036},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "Z", EstimatorKind::ipw, 0.067, 0.067},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "Z", EstimatorKind::stab_xz, 0.057, 0.057},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "Z", EstimatorKind::stab_z, 0.057, 0.057},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "Z", EstimatorKind::stab_rake, 0.038, 0.038},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.5, 0, "Z", EstimatorKind::gr, 0.037, 0.037},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "X", EstimatorKind::ipw, 0.052, 0.052},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "X", EstimatorKind::stab_xz, 0.045, 0.045},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "X", EstimatorKind::stab_z, 0.044, 0.044},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "X", EstimatorKind::stab_rake, 0.037, 0.037},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "X", EstimatorKind::gr, 0.041, 0.041},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "Z", EstimatorKind::ipw, 0.076, 0.076},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "Z", EstimatorKind::stab_xz, 0.063, 0.063},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "Z", EstimatorKind::stab_z, 0.062, 0.062},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "Z", EstimatorKind::stab_rake, 0.041, 0.041},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 0.75, 0, "Z", EstimatorKind::gr, 0.039, 0.039},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "X", EstimatorKind::ipw, 0.058, 0.058},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "X", EstimatorKind::stab_xz, 0.048, 0.048},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "X", EstimatorKind::stab_z, 0.046, 0.046},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "X", EstimatorKind::stab_rake, 0.040, 0.040},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "X", EstimatorKind::gr, 0.046, 0.046},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "Z", EstimatorKind::ipw, 0.087, 0.087},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "Z", EstimatorKind::stab_xz, 0.069, 0.069},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "Z", EstimatorKind::stab_z, 0.069, 0.069},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "Z", EstimatorKind::stab_rake, 0.046, 0.046},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.0, 0, "Z", EstimatorKind::gr, 0.042, 0.042},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "X", EstimatorKind::ipw, 0.067, 0.067},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "X", EstimatorKind::stab_xz, 0.054, 0.054},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "X", EstimatorKind::stab_z, 0.052, 0.052},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "X", EstimatorKind::stab_rake, 0.045, 0.045},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "X", EstimatorKind::gr, 0.052, 0.053},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "Z", EstimatorKind::ipw, 0.101, 0.101},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "Z", EstimatorKind::stab_xz, 0.080, 0.080},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "Z", EstimatorKind::stab_z, 0.079, 0.079},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "Z", EstimatorKind::stab_rake, 0.052, 0.052},
    {"3", "tp_heteroscedastic", 1.0, 1.0, 0.0, 1.5, 0, "Z", EstimatorKind::gr, 0.047, 0.047},
    {"S1", "cc_uniform", 0.0, 0.0, 0.0, 0.0, 360, "(Intercept)", EstimatorKind::mle_cc, 0.201, 0.201},
    {"S1", "cc_uniform", 0.0, 0.0, 0.0, 0.0, 360, "(Intercept)", EstimatorKind::stab_xz, 0.200, 0.200},
    {"S1", "cc_uniform", 0.0, 0.0, 0.0, 0.0, 360, "(Intercept)", EstimatorKind::ipw, 0.201, 0.201},
    {"S1", "cc_uniform", 0.0, 0.0, 0.0, 0.0, 360, "X", EstimatorKind::mle_cc, 0.375, 0.375},
    {"S1", "cc_uniform", 0.0, 0.0, 0.0, 0.0, 360, "X", EstimatorKind::stab_xz, 0.375, 0.374},
    {"S1", "cc_uniform", 0.0, 0.0, 0.0, 0.0, 360, "X", EstimatorKind::ipw, 0.377, 0.376},
    {"S1", "cc_uniform", 0.5, 0.0, 0.0, 0.0, 463, "(Intercept)", EstimatorKind::mle_cc, 0.188, 0.188},
    {"S1", "cc_uniform", 0.5, 0.0, 0.0, 0.0, 463, "(Intercept)", EstimatorKind::stab_xz, 0.188, 0.188},
    {"S1", "cc_uniform", 0.5, 0.0, 0.0, 0.0, 463, "(Intercept)", EstimatorKind::ipw, 0.189, 0.189},
    {"S1", "cc_uniform", 0.5, 0.0, 0.0, 0.0, 463, "X", EstimatorKind::mle_cc, 0.332, 0.332},
    {"S1", "cc_uniform", 0.5, 0.0, 0.0, 0.0, 463, "X", EstimatorKind::stab_xz, 0.331, 0.331},
    {"S1", "cc_uniform", 0.5, 0.0, 0.0, 0.0, 463, "X", EstimatorKind::ipw, 0.332, 0.332},
    {"S1", "cc_uniform", 1.0, 0.0, 0.0, 0.0, 607, "(Intercept)", EstimatorKind::mle_cc, 0.166, 0.166},
    {"S1", "cc_uniform", 1.0, 0.0, 0.0, 0.0, 607, "(Intercept)", EstimatorKind::stab_xz, 0.166, 0.166},
    {"S1", "cc_uniform", 1.0, 0.0, 0.0, 0.0, 607, "(Intercept)", EstimatorKind::ipw, 0.167, 0.167},
    {"S1", "cc_uniform", 1.0, 0.0, 0.0, 0.0, 607, "X", EstimatorKind::mle_cc, 0.287, 0.287},
    {"S1", "cc_uniform", 1.0, 0.0, 0.0, 0.0, 607, "X", EstimatorKind::stab_xz, 0.287, 0.286},
    {"S1", "cc_uniform", 1.0, 0.0, 0.0, 0.0, 607, "X", EstimatorKind::ipw, 0.289, 0.289},
    {"S1", "cc_uniform", 1.5, 0.0, 0.0, 0.0, 809, "(Intercept)", EstimatorKind::mle_cc, 0.159, 0.159},
    {"S1", "cc_uniform", 1.5, 0.0, 0.0, 0.0, 809, "(Intercept)", EstimatorKind::stab_xz, 0.159, 0.159},
    {"S1", "cc_uniform", 1.5, 0.0, 0.0, 0.0, 809, "(Intercept)", EstimatorKind::ipw, 0.161, 0.161},
    {"S1", "cc_uniform", 1.5, 0.0, 0.0, 0.0, 809, "X", EstimatorKind::mle_cc, 0.268, 0.268},
    {"S1", "cc_uniform", 1.5, 0.0, 0.0, 0.0, 809, "X", EstimatorKind::stab_xz, 0.268, 0.268},
    {"S1", "cc_uniform", 1.5, 0.0, 0.0, 0.0, 809, "X", EstimatorKind::ipw, 0.272, 0.272},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "X", EstimatorKind::stab_xz, 0.106, 0.106},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "X", EstimatorKind::stab_z, 0.110, 0.110},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "X", EstimatorKind::stab_rake, 0.110, 0.110},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "X", EstimatorKind::ipw, 0.110, 0.110},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "X", EstimatorKind::gr, 0.110, 0.110},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "Z", EstimatorKind::stab_xz, 0.134, 0.134},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "Z", EstimatorKind::stab_z, 0.137, 0.137},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "Z", EstimatorKind::stab_rake, 0.113, 0.113},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "Z", EstimatorKind::ipw, 0.137, 0.137},
    {"S2", "cc_confounded", 0.1, 0.1, 0.0, 0.0, 367, "Z", EstimatorKind::gr, 0.113, 0.113},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "X", EstimatorKind::stab_xz, 0.107, 0.108},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "X", EstimatorKind::stab_z, 0.118, 0.119},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "X", EstimatorKind::stab_rake, 0.118, 0.119},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "X", EstimatorKind::ipw, 0.119, 0.120},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "X", EstimatorKind::gr, 0.118, 0.120},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "Z", EstimatorKind::stab_xz, 0.125, 0.125},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "Z", EstimatorKind::stab_z, 0.137, 0.137},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "Z", EstimatorKind::stab_rake, 0.111, 0.111},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "Z", EstimatorKind::ipw, 0.137, 0.137},
    {"S2", "cc_confounded", 0.5, 0.1, 0.0, 0.0, 453, "Z", EstimatorKind::gr, 0.111, 0.111},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "X", EstimatorKind::stab_xz, 0.101, 0.101},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "X", EstimatorKind::stab_z, 0.128, 0.130},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "X", EstimatorKind::stab_rake, 0.128, 0.130},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "X", EstimatorKind::ipw, 0.130, 0.132},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "X", EstimatorKind::gr, 0.130, 0.132},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "Z", EstimatorKind::stab_xz, 0.112, 0.112},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "Z", EstimatorKind::stab_z, 0.132, 0.133},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "Z", EstimatorKind::stab_rake, 0.112, 0.114},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "Z", EstimatorKind::ipw, 0.135, 0.135},
    {"S2", "cc_confounded", 1.0, 0.1, 0.0, 0.0, 763, "Z", EstimatorKind::gr, 0.112, 0.113},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "X", EstimatorKind::stab_xz, 0.101, 0.101},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "X", EstimatorKind::stab_z, 0.108, 0.108},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "X", EstimatorKind::stab_rake, 0.108, 0.108},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "X", EstimatorKind::ipw, 0.109, 0.109},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "X", EstimatorKind::gr, 0.109, 0.109},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "Z", EstimatorKind::stab_xz, 0.132, 0.132},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "Z", EstimatorKind::stab_z, 0.144, 0.144},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "Z", EstimatorKind::stab_rake, 0.109, 0.109},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "Z", EstimatorKind::ipw, 0.146, 0.146},
    {"S2", "cc_confounded", 0.1, 0.5, 0.0, 0.0, 422, "Z", EstimatorKind::gr, 0.110, 0.110},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "X", EstimatorKind::stab_xz, 0.095, 0.095},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "X", EstimatorKind::stab_z, 0.113, 0.114},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "X", EstimatorKind::stab_rake, 0.112, 0.113},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "X", EstimatorKind::ipw, 0.115, 0.116},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "X", EstimatorKind::gr, 0.115, 0.116},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "Z", EstimatorKind::stab_xz, 0.121, 0.121},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "Z", EstimatorKind::stab_z, 0.136, 0.135},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "Z", EstimatorKind::stab_rake, 0.099, 0.099},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "Z", EstimatorKind::ipw, 0.141, 0.141},
    {"S2", "cc_confounded", 0.5, 0.5, 0.0, 0.0, 576, "Z", EstimatorKind::gr, 0.101, 0.101},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "X", EstimatorKind::stab_xz, 0.092, 0.092},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "X", EstimatorKind::stab_z, 0.115, 0.116},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "X", EstimatorKind::stab_rake, 0.116, 0.116},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "X", EstimatorKind::ipw, 0.119, 0.120},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "X", EstimatorKind::gr, 0.119, 0.120},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "Z", EstimatorKind::stab_xz, 0.108, 0.108},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "Z", EstimatorKind::stab_z, 0.126, 0.126},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "Z", EstimatorKind::stab_rake, 0.095, 0.096},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "Z", EstimatorKind::ipw, 0.135, 0.135},
    {"S2", "cc_confounded", 1.0, 0.5, 0.0, 0.0, 999, "Z", EstimatorKind::gr, 0.096, 0.096},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "X", EstimatorKind::stab_xz, 0.093, 0.093},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "X", EstimatorKind::stab_z, 0.107, 0.107},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "X", EstimatorKind::stab_rake, 0.107, 0.107},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "X", EstimatorKind::ipw, 0.112, 0.112},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "X", EstimatorKind::gr, 0.111, 0.111},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "Z", EstimatorKind::stab_xz, 0.130, 0.130},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "Z", EstimatorKind::stab_z, 0.152, 0.154},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "Z", EstimatorKind::stab_rake, 0.107, 0.107},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "Z", EstimatorKind::ipw, 0.163, 0.165},
    {"S2", "cc_confounded", 0.1, 1.0, 0.0, 0.0, 606, "Z", EstimatorKind::gr, 0.112, 0.113},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "X", EstimatorKind::stab_xz, 0.085, 0.085},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "X", EstimatorKind::stab_z, 0.101, 0.101},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "X", EstimatorKind::stab_rake, 0.101, 0.101},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "X", EstimatorKind::ipw, 0.108, 0.108},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "X", EstimatorKind::gr, 0.107, 0.108},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "Z", EstimatorKind::stab_xz, 0.112, 0.112},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "Z", EstimatorKind::stab_z, 0.130, 0.130},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "Z", EstimatorKind::stab_rake, 0.089, 0.089},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "Z", EstimatorKind::ipw, 0.146, 0.147},
    {"S2", "cc_confounded", 0.5, 1.0, 0.0, 0.0, 872, "Z", EstimatorKind::gr, 0.097, 0.097},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "X", EstimatorKind::stab_xz, 0.082, 0.083},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "X", EstimatorKind::stab_z, 0.098, 0.099},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "X", EstimatorKind::stab_rake, 0.098, 0.099},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "X", EstimatorKind::ipw, 0.104, 0.104},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "X", EstimatorKind::gr, 0.104, 0.104},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "Z", EstimatorKind::stab_xz, 0.102, 0.102},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "Z", EstimatorKind::stab_z, 0.117, 0.116},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "Z", EstimatorKind::stab_rake, 0.088, 0.088},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "Z", EstimatorKind::ipw, 0.129, 0.129},
    {"S2", "cc_confounded", 1.0, 1.0, 0.0, 0.0, 1418, "Z", EstimatorKind::gr, 0.092, 0.092},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.022, 0.022},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.022, 0.022},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.022, 0.022},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.015, 0.015},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.015, 0.015},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.011, 0.011},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.011, 0.011},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.018, 0.018},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.018, 0.018},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.016, 0.016},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.016, 0.016},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.020, 0.020},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.020, 0.020},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.021, 0.021},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.021, 0.021},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.021, 0.021},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.021, 0.021},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.023, 0.023},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.021, 0.021},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.021, 0.021},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.032, 0.032},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.032, 0.032},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.032, 0.032},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.022, 0.022},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.022, 0.022},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.034, 0.034},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.034, 0.034},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.015, 0.015},
    {"S3", "tp_Z_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.015, 0.015},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.024, 0.024},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.032, 0.032},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.032, 0.032},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.032, 0.032},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.020, 0.020},
    {"S3", "tp_Z_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.020, 0.020},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.026, 0.026},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.026, 0.026},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.035, 0.035},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.035, 0.035},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.035, 0.035},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.026, 0.026},
    {"S3", "tp_Z_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.026, 0.026},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.032, 0.033},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.033, 0.033},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.028, 0.028},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.028, 0.028},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.034, 0.034},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.034, 0.034},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.034, 0.034},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.030, 0.030},
    {"S3", "tp_Z_optimal", 1.5, 1.5, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.029, 0.029},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.016, 0.016},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.016, 0.016},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.072, 0.072},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.036, 0.036},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.036, 0.036},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.017, 0.017},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.017, 0.017},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.072, 0.072},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.046, 0.046},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.046, 0.046},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.019, 0.019},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.019, 0.019},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.072, 0.072},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.058, 0.058},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.059, 0.059},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.022, 0.022},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.102, 0.102},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.101, 0.101},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.101, 0.101},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.051, 0.051},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.050, 0.050},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.023, 0.023},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.023, 0.023},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.102, 0.102},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.101, 0.101},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.101, 0.101},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.059, 0.059},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.059, 0.059},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.025, 0.025},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.025, 0.025},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.102, 0.102},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.101, 0.101},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.101, 0.101},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.074, 0.074},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.074, 0.074},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::ipw, 0.044, 0.044},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.044, 0.044},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.043, 0.043},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::gr, 0.031, 0.031},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.145, 0.145},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.142, 0.142},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.142, 0.142},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::gr, 0.071, 0.071},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::ipw, 0.044, 0.044},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.044, 0.044},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.043, 0.043},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.032, 0.032},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::gr, 0.032, 0.032},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.145, 0.145},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.142, 0.142},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.142, 0.142},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.078, 0.078},
    {"S4", "tp_AZ_balanced", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::gr, 0.077, 0.077},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::ipw, 0.044, 0.044},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.044, 0.044},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.043, 0.043},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.033, 0.033},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::gr, 0.033, 0.033},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.145, 0.145},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.142, 0.142},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.142, 0.142},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.092, 0.092},
    {"S4", "tp_AZ_balanced", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::gr, 0.093, 0.093},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.021, 0.021},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.021, 0.021},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.021, 0.021},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.014, 0.014},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.014, 0.014},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.079, 0.079},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.079, 0.079},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.079, 0.079},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.035, 0.035},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.035, 0.035},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.020, 0.020},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.020, 0.020},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.020, 0.020},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.015, 0.015},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.015, 0.015},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.076, 0.076},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.076, 0.076},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.076, 0.076},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.049, 0.049},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.049, 0.049},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::ipw, 0.020, 0.020},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_xz, 0.021, 0.021},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_z, 0.021, 0.021},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::stab_rake, 0.017, 0.017},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "X", EstimatorKind::gr, 0.017, 0.017},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::ipw, 0.079, 0.079},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.079, 0.079},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_z, 0.079, 0.079},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.064, 0.064},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 0.5, 0.0, 0, "Z", EstimatorKind::gr, 0.064, 0.064},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.029, 0.029},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.029, 0.029},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.029, 0.029},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.020, 0.020},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.020, 0.020},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.110, 0.110},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.110, 0.110},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.110, 0.110},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.051, 0.051},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.050, 0.050},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.029, 0.029},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.029, 0.029},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.029, 0.029},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.021, 0.021},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.020, 0.020},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.115, 0.115},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.115, 0.115},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.115, 0.115},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.061, 0.061},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.061, 0.061},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::ipw, 0.029, 0.029},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.030, 0.030},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.029, 0.030},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.023, 0.023},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "X", EstimatorKind::gr, 0.023, 0.023},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.110, 0.110},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.111, 0.111},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.110, 0.110},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.078, 0.078},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 1.0, 0.0, 0, "Z", EstimatorKind::gr, 0.078, 0.078},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::ipw, 0.041, 0.041},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.042, 0.042},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.041, 0.041},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.027, 0.027},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "X", EstimatorKind::gr, 0.027, 0.027},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.152, 0.153},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.152, 0.152},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.153, 0.153},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.066, 0.067},
    {"S5", "tp_AZ_optimal", 0.1, 0.1, 2.0, 0.0, 0, "Z", EstimatorKind::gr, 0.066, 0.066},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::ipw, 0.041, 0.041},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.041, 0.041},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.041, 0.041},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.027, 0.027},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "X", EstimatorKind::gr, 0.027, 0.027},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.156, 0.156},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.156, 0.156},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.156, 0.155},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.074, 0.074},
    {"S5", "tp_AZ_optimal", 0.5, 0.5, 2.0, 0.0, 0, "Z", EstimatorKind::gr, 0.074, 0.074},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::ipw, 0.040, 0.040},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::stab_xz, 0.041, 0.041},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.041, 0.041},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.030, 0.030},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "X", EstimatorKind::gr, 0.030, 0.030},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.151, 0.151},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::stab_xz, 0.152, 0.152},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.151, 0.151},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.098, 0.098},
    {"S5", "tp_AZ_optimal", 1.0, 1.0, 2.0, 0.0, 0, "Z", EstimatorKind::gr, 0.098, 0.098},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "X", EstimatorKind::ipw, 0.106, 0.107},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.102, 0.102},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.086, 0.086},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "X", EstimatorKind::gr, 0.089, 0.089},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.117, 0.118},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.111, 0.116},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.082, 0.090},
    {"S6", "tp_binary", -1.0, -1.0, 0.0, 0.0, 0, "Z", EstimatorKind::gr, 0.081, 0.082},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "X", EstimatorKind::ipw, 0.125, 0.125},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.125, 0.125},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.100, 0.100},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "X", EstimatorKind::gr, 0.101, 0.101},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.142, 0.142},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.135, 0.136},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.080, 0.081},
    {"S6", "tp_binary", 0.1, 0.1, 0.0, 0.0, 0, "Z", EstimatorKind::gr, 0.081, 0.081},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "X", EstimatorKind::ipw, 0.074, 0.074},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.071, 0.071},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.056, 0.056},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "X", EstimatorKind::gr, 0.059, 0.059},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.086, 0.086},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.082, 0.084},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.051, 0.055},
    {"S6", "tp_binary", 0.5, 0.5, 0.0, 0.0, 0, "Z", EstimatorKind::gr, 0.051, 0.051},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "X", EstimatorKind::ipw, 0.069, 0.069},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.067, 0.067},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.059, 0.059},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "X", EstimatorKind::gr, 0.060, 0.060},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.077, 0.076},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.076, 0.080},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.045, 0.051},
    {"S6", "tp_binary", 1.0, 1.0, 0.0, 0.0, 0, "Z", EstimatorKind::gr, 0.044, 0.044},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "X", EstimatorKind::ipw, 0.088, 0.089},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.088, 0.088},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.081, 0.081},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "X", EstimatorKind::gr, 0.081, 0.082},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.101, 0.102},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.103, 0.104},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.062, 0.065},
    {"S6", "tp_binary", 1.5, 1.5, 0.0, 0.0, 0, "Z", EstimatorKind::gr, 0.062, 0.062},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "X", EstimatorKind::ipw, 0.122, 0.122},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.122, 0.122},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.115, 0.115},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "X", EstimatorKind::gr, 0.115, 0.115},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.133, 0.135},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.135, 0.135},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.095, 0.096},
    {"S6", "tp_binary", 2.0, 2.0, 0.0, 0.0, 0, "Z", EstimatorKind::gr, 0.094, 0.095},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "X", EstimatorKind::ipw, 0.183, 0.185},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_z, 0.185, 0.185},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "X", EstimatorKind::stab_rake, 0.181, 0.181},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "X", EstimatorKind::gr, 0.179, 0.181},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "Z", EstimatorKind::ipw, 0.191, 0.192},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_z, 0.194, 0.195},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "Z", EstimatorKind::stab_rake, 0.168, 0.169},
    {"S6", "tp_binary", 3.0, 3.0, 0.0, 0.0, 0, "Z", EstimatorKind::gr, 0.165, 0.167},
  };
  return cells;
}

}  // namespace twophase
