#pragma once

#include <charconv>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filmwave/emit.hpp"
#include "filmwave/sweep.hpp"
#include "filmwave/types.hpp"

namespace filmwave {

struct ParseIssue {
    int line = 0;  // 0 = not tied to a single line
    std::string message;
};

/// A fully validated run description assembled from a config file.
struct RunConfig {
    std::optional<std::string> preset;  // fig1..fig9 when preset-driven
    SweepSpec sweep;
    std::optional<std::string> out;
    OutputFormat format = OutputFormat::csv;
};

struct ParseResult {
    std::optional<RunConfig> config;
    std::vector<ParseIssue> issues;
    bool ok() const { return config.has_value(); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

inline std::optional<int> parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    int value = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

inline std::optional<std::vector<double>> parse_double_list(std::string_view s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::string_view item =
            comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
        const auto v = parse_double(item);
        if (!v) return std::nullopt;
        out.push_back(*v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Accepts "x", "yi", "x+yi", "x-yi" with scientific-notation parts.
inline std::optional<std::complex<double>> parse_complex(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    if (s.back() != 'i') {
        const auto re = parse_double(s);
        if (!re) return std::nullopt;
        return std::complex<double>(*re, 0.0);
    }
    s.remove_suffix(1);  // drop 'i'
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const auto im = parse_double(s);
        if (!im) return std::nullopt;
        return std::complex<double>(0.0, *im);
    }
    const auto re = parse_double(s.substr(0, split));
    std::string_view imag_part = s.substr(split);
    double sign = 1.0;
    if (imag_part.front() == '+' || imag_part.front() == '-') {
        sign = imag_part.front() == '-' ? -1.0 : 1.0;
        imag_part.remove_prefix(1);
    }
    const auto im = imag_part.empty() ? std::optional<double>(1.0) : parse_double(imag_part);
    if (!re || !im) return std::nullopt;
    return std::complex<double>(*re, sign * *im);
}

struct KeyEntry {
    int line;
    std::string value;
};

}  // namespace detail

/**
 * Parse the flat `key = value` run-configuration grammar.
 *
 * One assignment per line, '#' starts a comment, unknown and duplicate keys
 * are fatal. Returns either a validated RunConfig or every problem found,
 * each tied to its line.
 */
inline ParseResult parse_config(std::string_view text) {
    using detail::KeyEntry;
    static const char* known_keys[] = {"material", "omega_p", "v_fermi",     "tau",
                                       "preset",   "variant", "omega_min",   "omega_max",
                                       "omega_count", "d",    "theta",       "p",
                                       "G",        "rel_tol", "out",         "format"};

    ParseResult result;
    auto issue = [&](int line, std::string msg) {
        result.issues.push_back({line, std::move(msg)});
    };

    std::map<std::string, KeyEntry, std::less<>> entries;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            issue(line_no, "expected 'key = value'");
            continue;
        }
        const std::string key{detail::trim(line.substr(0, eq))};
        const std::string value{detail::trim(line.substr(eq + 1))};
        if (key.empty()) {
            issue(line_no, "missing key before '='");
            continue;
        }
        bool known = false;
        for (const char* k : known_keys) known = known || key == k;
        if (!known) {
            issue(line_no, "unknown key: " + key);
            continue;
        }
        if (entries.count(key)) {
            issue(line_no, "duplicate key: " + key);
            continue;
        }
        entries.emplace(key, KeyEntry{line_no, value});
    }

    const auto get = [&](std::string_view key) -> const KeyEntry* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    RunConfig config;

    // material: builtin name or a custom (omega_p, v_fermi, tau) triple
    MaterialParams material = sodium();
    const KeyEntry* material_key = get("material");
    const bool custom_triple = get("omega_p") || get("v_fermi") || get("tau");
    if (material_key && material_key->value != "sodium")
        issue(material_key->line, "unknown material: " + material_key->value +
                                      " (builtin: sodium)");
    if (material_key && custom_triple)
        issue(material_key->line,
              "material conflicts with custom omega_p/v_fermi/tau keys");
    if (custom_triple) {
        const struct {
            const char* key;
            double MaterialParams::* field;
        } fields[] = {{"omega_p", &MaterialParams::omega_p},
                      {"v_fermi", &MaterialParams::v_fermi},
                      {"tau", &MaterialParams::tau}};
        for (const auto& f : fields) {
            const KeyEntry* e = get(f.key);
            if (!e) {
                issue(0, std::string("custom material needs all of omega_p, v_fermi, tau; "
                                     "missing ") + f.key);
                continue;
            }
            const auto v = detail::parse_double(e->value);
            if (!v || !(*v > 0.0))
                issue(e->line, std::string(f.key) + " must be a number > 0");
            else
                material.*(f.field) = *v;
        }
    }

    // scalar overrides shared by preset and custom runs
    if (const KeyEntry* e = get("G")) {
        const auto g = detail::parse_complex(e->value);
        if (!g)
            issue(e->line, "G must be a real or complex number (e.g. 0.9 or 0.9-0.1i)");
        else
            config.sweep.penetration = *g;
    }
    double rel_tol = 1e-10;
    if (const KeyEntry* e = get("rel_tol")) {
        const auto v = detail::parse_double(e->value);
        if (!v || !(*v >= 1e-14 && *v <= 1e-4))
            issue(e->line, "rel_tol out of range [1e-14, 1e-4]");
        else
            rel_tol = *v;
    }
    if (const KeyEntry* e = get("out")) config.out = e->value;
    if (const KeyEntry* e = get("format")) {
        if (e->value == "csv")
            config.format = OutputFormat::csv;
        else if (e->value == "gnuplot" || e->value == "gnuplot-columns")
            config.format = OutputFormat::gnuplot_columns;
        else
            issue(e->line, "format must be csv or gnuplot-columns");
    }

    if (const KeyEntry* preset_key = get("preset")) {
        for (const char* conflicting :
             {"omega_min", "omega_max", "omega_count", "d", "theta", "p", "variant"}) {
            if (const KeyEntry* e = get(conflicting))
                issue(e->line, std::string(conflicting) + " conflicts with preset");
        }
        if (custom_triple)
            issue(preset_key->line, "preset conflicts with custom material keys");
        try {
            const std::complex<double> g = config.sweep.penetration;
            config.sweep = figure_preset(preset_key->value).spec;
            config.sweep.penetration = g;
            config.preset = preset_key->value;
        } catch (const validation_error& e) {
            issue(preset_key->line, e.what());
        }
    } else {
        config.sweep.material = material;
        config.sweep.variant = ModelVariant::low_freq_simplified;
        if (const KeyEntry* e = get("variant")) {
            const auto v = parse_variant(e->value);
            if (!v)
                issue(e->line, "variant must be full_kd, thin_kd or low_freq_simplified");
            else
                config.sweep.variant = *v;
        }
        const auto axis_double = [&](const char* key, double& dst) {
            const KeyEntry* e = get(key);
            if (!e) {
                issue(0, std::string("missing required key: ") + key);
                return;
            }
            const auto v = detail::parse_double(e->value);
            if (!v)
                issue(e->line, std::string(key) + " must be a number");
            else
                dst = *v;
        };
        axis_double("omega_min", config.sweep.omega.min);
        axis_double("omega_max", config.sweep.omega.max);
        if (const KeyEntry* e = get("omega_count")) {
            const auto v = detail::parse_int(e->value);
            if (!v || *v < 2)
                issue(e->line, "omega_count must be an integer >= 2");
            else
                config.sweep.omega.count = *v;
        } else {
            issue(0, "missing required key: omega_count");
        }

        const auto list_key = [&](const char* key, std::vector<double>& dst) {
            const KeyEntry* e = get(key);
            if (!e) {
                issue(0, std::string("missing required key: ") + key);
                return;
            }
            const auto v = detail::parse_double_list(e->value);
            if (!v)
                issue(e->line, std::string(key) + " must be a number or comma-separated list");
            else
                dst = *v;
        };
        list_key("d", config.sweep.thickness);
        list_key("theta", config.sweep.angle);
        list_key("p", config.sweep.specularity);

        // range checks with line attribution
        if (const KeyEntry* e = get("d"))
            for (double d : config.sweep.thickness)
                if (!(d > 0.0)) issue(e->line, "d out of range: must be > 0");
        if (const KeyEntry* e = get("p"))
            for (double p : config.sweep.specularity)
                if (!(p >= 0.0 && p <= 1.0)) issue(e->line, "p out of range [0, 1]");
        if (const KeyEntry* e = get("theta"))
            for (double t : config.sweep.angle)
                if (!(t >= 0.0 && t <= half_pi))
                    issue(e->line, "theta out of range [0, pi/2]");
        if (const KeyEntry* e = get("omega_min"))
            if (!(config.sweep.omega.min >= 0.0))
                issue(e->line, "omega_min out of range: must be >= 0");

        int multi = 0;
        multi += config.sweep.thickness.size() > 1;
        multi += config.sweep.angle.size() > 1;
        multi += config.sweep.specularity.size() > 1;
        if (multi > 1) issue(0, "at most one of d/theta/p may be a value list");
        if (result.issues.empty() && !(config.sweep.omega.min < config.sweep.omega.max))
            issue(0, "omega_min must be < omega_max");
    }

    config.sweep.rel_tol = rel_tol;

    if (!result.issues.empty()) return result;

    try {
        config.sweep.validate();
    } catch (const validation_error& e) {
        issue(0, e.what());
        return result;
    }

    result.config = std::move(config);
    return result;
}

}  // namespace filmwave
