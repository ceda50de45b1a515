#pragma once

// CSV products of the command-line front end: parameter sweeps, figure
// series and dark-dimension censuses. All numbers print with 12 significant
// digits so identical flags give byte-identical output.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "darkspace.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "spectral.hpp"
#include "walk.hpp"

namespace ladderwalk {

inline std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string format_optional(const std::optional<double> &v) {
    return v ? format_number(*v) : std::string{};
}

namespace detail {

inline double parse_real(std::string_view text, std::string_view whole) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("malformed complex literal '" + std::string(whole) + "'");
    }
    return value;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace detail

/// Parses `re`, `imj` or `re+imj` / `re-imj`.
inline Amplitude parse_complex(std::string_view text) {
    const std::string_view whole = text;
    text = detail::trim(text);
    if (text.empty()) {
        throw std::invalid_argument("empty complex literal");
    }
    if (text.back() != 'j') {
        return {detail::parse_real(text, whole), 0.0};
    }
    text.remove_suffix(1);
    // split at the last sign that is not leading and not an exponent sign
    std::size_t split = std::string_view::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const std::string_view im = text;
        if (im.empty() || im == "+" || im == "-") {
            return {0.0, im == "-" ? -1.0 : 1.0};
        }
        return {0.0, detail::parse_real(im, whole)};
    }
    const double re = detail::parse_real(text.substr(0, split), whole);
    const std::string_view im = text.substr(split);
    if (im == "+" || im == "-") {
        return {re, im == "-" ? -1.0 : 1.0};
    }
    return {re, detail::parse_real(im, whole)};
}

/// Three comma-separated amplitudes x,y,z. Unless `normalize` is set the
/// squared norm must be within 1e-9 of one.
inline InitialState parse_init(std::string_view text, bool normalize = false) {
    std::vector<Amplitude> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("initial state needs exactly three amplitudes x,y,z");
    }
    InitialState init{parts[0], parts[1], parts[2]};
    if (init.norm_squared() == 0.0) {
        throw std::invalid_argument("initial state is the zero vector");
    }
    if (normalize) {
        return init.normalized();
    }
    if (!init.is_normalized(1e-9)) {
        throw std::invalid_argument("initial state is not normalized (|x|^2+|y|^2+|z|^2 = " +
                                    format_number(init.norm_squared()) + "); pass --normalize");
    }
    return init;
}

struct SweepOptions {
    std::vector<LadderConfig> configs{LadderConfig::cycles_only};
    std::size_t lmin = 1;
    std::size_t lmax = 14;
    InitialState init{0.0, 1.0, 0.0};
    bool simulate = false;
    LimitOptions limit;
};

/// Closed form plus the numeric projector and, optionally, the simulated limit.
inline SurvivalReport survival_report(const LadderSpec &spec, const InitialState &init, bool simulate,
                                      const LimitOptions &limit = {}) {
    auto report = total(spec.config, spec.length, init);
    const auto basis = build_ladder(spec);
    const auto psi0 = report.init.to_state(basis);
    report.numeric_projector_total = norm_squared(project_dark(build_dark_basis(basis), psi0));
    if (simulate) {
        const auto sim = simulate_limit(basis, report.init, limit);
        report.simulated_total = sim.survival;
        report.simulation_converged = sim.converged;
    }
    return report;
}

inline void write_sweep(std::ostream &os, const SweepOptions &opts) {
    if (opts.lmin == 0 || opts.lmax < opts.lmin) {
        throw std::invalid_argument("invalid ladder length range");
    }
    os << "L,config,s_a,s_d,s_b_minus_a,s_c_minus_a,s_c_minus_ab,total_analytic,total_projector";
    if (opts.simulate) {
        os << ",total_simulated";
    }
    os << ",asymptotic";
    if (opts.simulate) {
        os << ",status";
    }
    os << '\n';
    for (std::size_t L = opts.lmin; L <= opts.lmax; ++L) {
        for (auto config : opts.configs) {
            const auto r = survival_report({config, L}, opts.init, opts.simulate, opts.limit);
            const auto &c = r.components;
            os << L << ',' << to_int(config) << ',' << format_number(c.s_a) << ',' << format_number(c.s_d)
               << ',' << format_optional(c.s_b_minus_a) << ',' << format_optional(c.s_c_minus_a) << ','
               << format_optional(c.s_c_minus_ab) << ',' << format_number(r.total) << ','
               << format_optional(r.numeric_projector_total);
            if (opts.simulate) {
                os << ',' << format_optional(r.simulated_total);
            }
            os << ',' << format_number(r.asymptotic_total);
            if (opts.simulate) {
                os << ',' << (r.simulation_converged.value_or(false) ? "ok" : "not_converged");
            }
            os << '\n';
        }
    }
}

inline void write_analytic(std::ostream &os, const std::vector<LadderConfig> &configs, std::size_t lmin,
                           std::size_t lmax, const InitialState &init) {
    os << "L,config,s_a,s_d,s_b_minus_a,s_c_minus_a,s_c_minus_ab,total_analytic,asymptotic\n";
    for (std::size_t L = lmin; L <= lmax; ++L) {
        for (auto config : configs) {
            const auto r = total(config, L, init);
            const auto &c = r.components;
            os << L << ',' << to_int(config) << ',' << format_number(c.s_a) << ',' << format_number(c.s_d)
               << ',' << format_optional(c.s_b_minus_a) << ',' << format_optional(c.s_c_minus_a) << ','
               << format_optional(c.s_c_minus_ab) << ',' << format_number(r.total) << ','
               << format_number(r.asymptotic_total) << '\n';
        }
    }
}

inline void write_simulation(std::ostream &os, const std::vector<LadderConfig> &configs, std::size_t lmin,
                             std::size_t lmax, const InitialState &init, const LimitOptions &limit) {
    os << "L,config,total_simulated,steps,total_analytic,status\n";
    for (std::size_t L = lmin; L <= lmax; ++L) {
        for (auto config : configs) {
            const auto basis = build_ladder({config, L});
            const auto sim = simulate_limit(basis, init, limit);
            os << L << ',' << to_int(config) << ',' << format_number(sim.survival) << ',' << sim.steps << ','
               << format_number(total(config, L, init).total) << ',' << (sim.converged ? "ok" : "not_converged")
               << '\n';
        }
    }
}

inline void write_series(std::ostream &os, const LadderSpec &spec, const InitialState &init, std::size_t t_max) {
    const auto series = survival_series(build_ladder(spec), init, t_max);
    os << "t,S\n";
    for (std::size_t t = 0; t < series.size(); ++t) {
        os << t << ',' << format_number(series[t]) << '\n';
    }
}

inline void write_darkdim(std::ostream &os, const std::vector<LadderConfig> &configs, std::size_t lmin,
                          std::size_t lmax) {
    os << "L,config,edges,bright,dark_numeric,dark_analytic,match\n";
    for (std::size_t L = lmin; L <= lmax; ++L) {
        for (auto config : configs) {
            const LadderSpec spec{config, L};
            const auto basis = build_ladder(spec);
            const auto bright = bright_dimension(basis);
            const auto dark = basis.size() - bright;
            const auto analytic = dark_dimension_analytic(spec);
            os << L << ',' << to_int(config) << ',' << basis.size() << ',' << bright << ',' << dark << ','
               << analytic << ',' << (dark == analytic ? "yes" : "no") << '\n';
        }
    }
}

enum class FigureId { fig4, fig5_left, fig5_right, fig6_left, fig6_right };

inline FigureId parse_figure_id(std::string_view id) {
    if (id == "4") return FigureId::fig4;
    if (id == "5L") return FigureId::fig5_left;
    if (id == "5R") return FigureId::fig5_right;
    if (id == "6L") return FigureId::fig6_left;
    if (id == "6R") return FigureId::fig6_right;
    throw std::invalid_argument("unknown figure id '" + std::string(id) + "' (expected 4, 5L, 5R, 6L, 6R)");
}

inline InitialState figure_initial_state(FigureId id) {
    switch (id) {
    case FigureId::fig5_right:
        return special_initial_state(LadderConfig::long_loop).witness();
    case FigureId::fig6_left:
        return {1.0, 0.0, 0.0};
    default:
        return {0.0, 1.0, 0.0};
    }
}

inline constexpr std::size_t figure_max_length = 14;

/// Series of one figure panel for L = 1..14.
inline void write_figure(std::ostream &os, FigureId id) {
    const auto init = figure_initial_state(id);
    switch (id) {
    case FigureId::fig4:
        os << "L,S1,Sb_minus_a,S2\n";
        break;
    case FigureId::fig5_left:
    case FigureId::fig5_right:
        os << "L,S1,S3\n";
        break;
    case FigureId::fig6_left:
    case FigureId::fig6_right:
        os << "L,S2,S4\n";
        break;
    }
    for (std::size_t L = 1; L <= figure_max_length; ++L) {
        os << L << ',';
        switch (id) {
        case FigureId::fig4:
            os << format_number(total(LadderConfig::cycles_only, L, init).total) << ','
               << format_number(s_b_minus_a(L, init)) << ','
               << format_number(total(LadderConfig::short_loop, L, init).total);
            break;
        case FigureId::fig5_left:
        case FigureId::fig5_right:
            os << format_number(total(LadderConfig::cycles_only, L, init).total) << ','
               << format_number(total(LadderConfig::long_loop, L, init).total);
            break;
        case FigureId::fig6_left:
        case FigureId::fig6_right:
            os << format_number(total(LadderConfig::short_loop, L, init).total) << ','
               << format_number(total(LadderConfig::all_loops, L, init).total);
            break;
        }
        os << '\n';
    }
}

} // namespace ladderwalk
