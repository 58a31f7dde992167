// Regenerates tests/support/fuchs_golden.hpp on stdout.
//
//   ./fuchs_golden_gen > tests/support/fuchs_golden.hpp
//
// Values come from the 1e7-panel composite-Simpson oracle; they are frozen
// in the repo so the regular suites stay fast.

#include <cstdio>

#include "filmwave/types.hpp"
#include "support/simpson_oracle.hpp"

int main() {
    using filmwave::testing::fuchs_simpson_oracle_real;

    const double w_values[5] = {0.05, 0.3, 1.0, 5.0, 40.0};
    const double p_values[5] = {0.0, 0.2, 0.5, 0.8, 0.95};

    std::printf("#pragma once\n\n");
    std::printf("// Generated by tests/support/golden_gen.cpp (composite Simpson, 1e7 panels).\n");
    std::printf("// Do not edit by hand; regenerate with the fuchs_golden_gen target.\n\n");
    std::printf("namespace filmwave::testing {\n\n");
    std::printf("struct FuchsGolden {\n");
    std::printf("    double w_re, w_im, p;\n");
    std::printf("    double integral_re, integral_im;\n");
    std::printf("};\n\n");
    std::printf("inline constexpr FuchsGolden fuchs_golden_table[25] = {\n");
    for (double w : w_values) {
        for (double p : p_values) {
            const double integral = fuchs_simpson_oracle_real(w, p);
            std::printf("    {%.17g, 0.0, %.17g, %.17g, 0.0},\n", w, p, integral);
        }
    }
    std::printf("};\n\n");

    // film-conductivity spot value: sodium at DC, d = 1e-6 cm, p = 0.3
    const filmwave::MaterialParams na = filmwave::sodium();
    const double d = 1e-6;
    const double p_spot = 0.3;
    const double w_spot = d / (na.v_fermi * na.tau);
    const double integral_spot = fuchs_simpson_oracle_real(w_spot, p_spot);
    const double ratio = 1.0 - 1.5 * (1.0 - p_spot) / w_spot * integral_spot;
    std::printf("// sigma_d / sigma0 for sodium at omega = 0, d = 1e-6 cm, p = 0.3\n");
    std::printf("inline constexpr double sigma_ratio_golden_w = %.17g;\n", w_spot);
    std::printf("inline constexpr double sigma_ratio_golden_p = %.17g;\n", p_spot);
    std::printf("inline constexpr double sigma_ratio_golden = %.17g;\n\n", ratio);
    std::printf("}  // namespace filmwave::testing\n");
    return 0;
}
