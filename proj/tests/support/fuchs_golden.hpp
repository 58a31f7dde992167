#pragma once

// Generated by tests/support/golden_gen.cpp (composite Simpson, 1e7 panels).
// Do not edit by hand; regenerate with the fuchs_golden_gen target.

namespace filmwave::testing {

struct FuchsGolden {
    double w_re, w_im, p;
    double integral_re, integral_im;
};

inline constexpr FuchsGolden fuchs_golden_table[25] = {
    {0.050000000000000003, 0.0, 0, 0.029019825201646501, 0.0},
    {0.050000000000000003, 0.0, 0.20000000000000001, 0.034734946849093777, 0.0},
    {0.050000000000000003, 0.0, 0.5, 0.049787570616834496, 0.0},
    {0.050000000000000003, 0.0, 0.80000000000000004, 0.091482957872961221, 0.0},
    {0.050000000000000003, 0.0, 0.94999999999999996, 0.16947814374793194, 0.0},
    {0.29999999999999999, 0.0, 0, 0.11889258678860228, 0.0},
    {0.29999999999999999, 0.0, 0.20000000000000001, 0.13126285963101311, 0.0},
    {0.29999999999999999, 0.0, 0.5, 0.15704298408309131, 0.0},
    {0.29999999999999999, 0.0, 0.80000000000000004, 0.19966244552102583, 0.0},
    {0.29999999999999999, 0.0, 0.94999999999999996, 0.23456336015812132, 0.0},
    {1, 0.0, 0, 0.2107622702639603, 0.0},
    {1, 0.0, 0.20000000000000001, 0.21712450290311783, 0.0},
    {1, 0.0, 0.5, 0.22785513669621105, 0.0},
    {1, 0.0, 0.80000000000000004, 0.24037641883690841, 0.0},
    {1, 0.0, 0.94999999999999996, 0.24748312180761634, 0.0},
    {5, 0.0, 0, 0.24982795980065395, 0.0},
    {5, 0.0, 0.20000000000000001, 0.2498622943418185, 0.0},
    {5, 0.0, 0.5, 0.24991386493336235, 0.0},
    {5, 0.0, 0.80000000000000004, 0.24996551830091712, 0.0},
    {5, 0.0, 0.94999999999999996, 0.24999137611050301, 0.0},
    {40, 0.0, 0, 0.25, 0.0},
    {40, 0.0, 0.20000000000000001, 0.25, 0.0},
    {40, 0.0, 0.5, 0.25, 0.0},
    {40, 0.0, 0.80000000000000004, 0.25, 0.0},
    {40, 0.0, 0.94999999999999996, 0.25, 0.0},
};

// sigma_d / sigma0 for sodium at omega = 0, d = 1e-6 cm, p = 0.3
inline constexpr double sigma_ratio_golden_w = 0.0782472613458529;
inline constexpr double sigma_ratio_golden_p = 0.29999999999999999;
inline constexpr double sigma_ratio_golden = 0.25256302205924641;

}  // namespace filmwave::testing
