#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "tiltwall/chern.hpp"
#include "tiltwall/config.hpp"
#include "tiltwall/enumerate.hpp"
#include "tiltwall/kernel.hpp"
#include "tiltwall/rational.hpp"
#include "tiltwall/surface.hpp"
#include "tiltwall/svg.hpp"
#include "tiltwall/wall.hpp"

namespace tw = tiltwall;

namespace {

// Every value-carrying flag is a string parsed by the same strict parsers the
// config file uses, so diagnostics and accepted syntax stay identical.
struct Flags {
    std::string config_path;
    std::string surface;
    std::string h2;
    std::string lambda;
    std::string chi_o;
    std::vector<std::string> classes;
    std::string h0;
    std::string reg;
    std::string rank_range;
    std::string rank_step;
    std::string deg_step;
    std::string ch2_step;
    std::string min_radius_sq;
    std::string threads;
    std::string beta_min;
    std::string beta_max;
    std::string alpha_max;
    std::string out;
    std::string format;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path, "key = value job file; flags override it");
    cmd->add_option("--surface", f.surface, "surface preset del-pezzo:<1..9>");
    cmd->add_option("--h2", f.h2, "H^2 of a custom polarized surface (positive integer)");
    cmd->add_option("--lambda", f.lambda, "anticanonical scale -K = lambda*H (positive rational)");
    cmd->add_option("--chi-o", f.chi_o, "chi(O) of a custom surface (integer, default 1)");
    cmd->add_option("--class", f.classes, "Chern class \"r,d,c\" (repeatable, ordered)");
    cmd->add_option("--out", f.out, "write the result to this file instead of stdout");
    cmd->add_option("--format", f.format, "output format: text, csv or svg");
}

void add_kernel_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--h0", f.h0, "number of global sections (default: chi, with warning)");
    cmd->add_option("--reg", f.reg, "regularity; adds the least-twist report line");
}

void add_enum_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--rank-range", f.rank_range, "destabilizer rank range \"a..b\"");
    cmd->add_option("--rank-step", f.rank_step, "rank scan step (default 1)");
    cmd->add_option("--deg-step", f.deg_step, "degree lattice step (default 1)");
    cmd->add_option("--ch2-step", f.ch2_step, "ch2 lattice step (default 1/2)");
    cmd->add_option("--min-radius-sq", f.min_radius_sq, "discard walls smaller than this");
    cmd->add_option("--threads", f.threads, "parallel scan threads (default 1)");
}

void add_plot_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--beta-min", f.beta_min, "left edge of the plot window");
    cmd->add_option("--beta-max", f.beta_max, "right edge of the plot window");
    cmd->add_option("--alpha-max", f.alpha_max, "top edge of the plot window");
}

template <typename Fn>
auto parse_flag(const char* flag, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& ex) {
        throw tw::ConfigError(std::string(flag) + ": " + ex.what());
    }
}

tw::JobConfig load_config(const Flags& f) {
    tw::JobConfig cfg;
    if (!f.config_path.empty()) cfg = tw::parse_config_file(f.config_path);

    if (!f.surface.empty()) cfg.surface_preset = f.surface;
    if (!f.h2.empty()) cfg.h2 = parse_flag("--h2", [&] { return tw::parse_integer(f.h2); });
    if (!f.lambda.empty())
        cfg.lambda = parse_flag("--lambda", [&] { return tw::Rational::parse(f.lambda); });
    if (!f.chi_o.empty())
        cfg.chi_o = parse_flag("--chi-o", [&] { return tw::parse_integer(f.chi_o); });

    if (!f.classes.empty()) {
        cfg.classes.clear();
        for (std::size_t i = 0; i < f.classes.size(); ++i) {
            tw::ChernClass c =
                parse_flag("--class", [&] { return tw::parse_chern(f.classes[i]); });
            cfg.classes.emplace_back(std::to_string(i + 1), c);
        }
    }

    if (!f.h0.empty()) cfg.h0 = parse_flag("--h0", [&] { return tw::parse_integer(f.h0); });
    if (!f.reg.empty()) cfg.reg = parse_flag("--reg", [&] { return tw::Rational::parse(f.reg); });

    if (!f.rank_range.empty()) {
        std::size_t dots = f.rank_range.find("..");
        if (dots == std::string::npos) {
            throw tw::ConfigError("--rank-range: expected \"a..b\", got \"" + f.rank_range +
                                  "\"");
        }
        cfg.rank_min = parse_flag("--rank-range", [&] {
            return tw::parse_integer(f.rank_range.substr(0, dots));
        });
        cfg.rank_max = parse_flag("--rank-range", [&] {
            return tw::parse_integer(f.rank_range.substr(dots + 2));
        });
    }
    if (!f.rank_step.empty())
        cfg.rank_step = parse_flag("--rank-step", [&] { return tw::parse_integer(f.rank_step); });
    if (!f.deg_step.empty())
        cfg.deg_step = parse_flag("--deg-step", [&] { return tw::Rational::parse(f.deg_step); });
    if (!f.ch2_step.empty())
        cfg.ch2_step = parse_flag("--ch2-step", [&] { return tw::Rational::parse(f.ch2_step); });
    if (!f.min_radius_sq.empty()) {
        cfg.min_radius_sq =
            parse_flag("--min-radius-sq", [&] { return tw::Rational::parse(f.min_radius_sq); });
    }
    if (!f.threads.empty()) {
        tw::Integer n = parse_flag("--threads", [&] { return tw::parse_integer(f.threads); });
        if (n < 1 || n > 1024) throw tw::ConfigError("--threads: must be between 1 and 1024");
        cfg.threads = static_cast<unsigned>(n.get_ui());
    }

    if (!f.beta_min.empty())
        cfg.beta_min = parse_flag("--beta-min", [&] { return tw::Rational::parse(f.beta_min); });
    if (!f.beta_max.empty())
        cfg.beta_max = parse_flag("--beta-max", [&] { return tw::Rational::parse(f.beta_max); });
    if (!f.alpha_max.empty()) {
        cfg.alpha_max =
            parse_flag("--alpha-max", [&] { return tw::Rational::parse(f.alpha_max); });
    }

    if (!f.out.empty()) cfg.out_path = f.out;
    if (!f.format.empty()) {
        if (f.format != "text" && f.format != "csv" && f.format != "svg") {
            throw tw::ConfigError("--format: must be text, csv or svg");
        }
        cfg.format = f.format;
    }
    return cfg;
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (!out_path) {
        std::cout << content;
        return;
    }
    std::ofstream os(*out_path, std::ios::binary);
    if (!os) throw tw::IoError("cannot open output file: " + *out_path);
    os << content;
    os.flush();
    if (!os) throw tw::IoError("failed writing output file: " + *out_path);
}

void require_format(const tw::JobConfig& cfg, const char* cmd, const char* expected) {
    if (cfg.format && *cfg.format != expected) {
        throw tw::ConfigError(std::string(cmd) + " only emits " + expected + ", not " +
                              *cfg.format);
    }
}

const tw::ChernClass& single_class(const tw::JobConfig& cfg, const char* cmd) {
    if (cfg.classes.size() != 1) {
        throw tw::ConfigError(std::string(cmd) + " needs exactly one class, got " +
                              std::to_string(cfg.classes.size()));
    }
    return cfg.classes[0].second;
}

tw::EnumerationConfig make_enum_config(const tw::JobConfig& cfg, const tw::Surface& s,
                                       const tw::ChernClass& e) {
    tw::EnumerationConfig ec;
    if (cfg.rank_min && cfg.rank_max) {
        ec.rank_min = *cfg.rank_min;
        ec.rank_max = *cfg.rank_max;
    } else if (cfg.rank_min || cfg.rank_max) {
        throw tw::ConfigError("rank-min and rank-max must be given together");
    } else {
        auto range = tw::default_rank_range(s, e);
        ec.rank_min = range.first;
        ec.rank_max = range.second;
    }
    if (cfg.rank_step) ec.rank_step = *cfg.rank_step;
    if (cfg.deg_step) ec.deg_step = *cfg.deg_step;
    if (cfg.ch2_step) ec.ch2_step = *cfg.ch2_step;
    if (cfg.min_radius_sq) ec.min_radius_sq = *cfg.min_radius_sq;
    if (cfg.threads) ec.threads = *cfg.threads;
    return ec;
}

int cmd_invariants(const tw::JobConfig& cfg) {
    require_format(cfg, "invariants", "text");
    tw::Surface s = tw::surface_from_config(cfg);
    if (cfg.classes.empty()) {
        throw tw::ConfigError("invariants needs at least one class");
    }
    std::string out;
    for (const auto& entry : cfg.classes) {
        const tw::ChernClass& c = entry.second;
        out += "class " + entry.first + " = " + tw::to_string(c) + "\n";
        out += "  slope        : " + tw::slope(c).to_string() + "\n";
        out += "  discriminant : " + tw::discriminant(c).to_string() + "\n";
        out += "  chi          : " + tw::euler_characteristic(s, c).to_string() + "\n";
        out += std::string("  bogomolov    : ") +
               (tw::bogomolov_check(c) ? "PASS (discriminant >= 0)"
                                       : "FAIL (discriminant < 0)") +
               "\n";
        out += std::string("  lattice      : ") + (tw::is_lattice_class(c) ? "yes" : "no") +
               "\n";
    }
    emit(cfg.out_path, out);
    return 0;
}

int cmd_wall(const tw::JobConfig& cfg) {
    if (cfg.classes.size() != 2) {
        throw tw::ConfigError("wall needs exactly two classes (e first, f second)");
    }
    const tw::ChernClass& e = cfg.classes[0].second;
    const tw::ChernClass& f = cfg.classes[1].second;
    tw::WallCoefficients co = tw::wall_coefficients(e, f);
    tw::Wall w = tw::classify_wall(e, f);
    std::string out;
    if (cfg.format && *cfg.format == "csv") {
        out = "rank,deg,ch2,center,radius_sq,filters\n";
        if (w.kind == tw::WallKind::Semicircle) {
            out += tw::to_string(f) + "," + w.center.to_string() + "," +
                   w.radius_sq.to_string() + ",\n";
        }
    } else {
        require_format(cfg, "wall", "text");
        out += "e = " + tw::to_string(e) + "\n";
        out += "f = " + tw::to_string(f) + "\n";
        out += "coefficients : x=" + co.x.to_string() + ", y=" + co.y.to_string() +
               ", z=" + co.z.to_string() + "\n";
        out += "wall         : " + w.to_string() + "\n";
    }
    emit(cfg.out_path, out);
    return 0;
}

tw::Integer resolve_h0(const tw::Surface& s, const tw::ChernClass& e,
                       const std::optional<tw::Integer>& given) {
    if (given) return *given;
    tw::Rational chi = tw::euler_characteristic(s, e);
    if (!chi.is_integer()) {
        throw tw::ConfigError("h0 not given and chi(class) = " + chi.to_string() +
                              " is not an integer; pass --h0");
    }
    tw::Integer h0 = chi.num();
    if (h0 < e.rank) {
        throw tw::ConfigError("h0 not given and chi(class) = " + h0.get_str() +
                              " is below the rank; pass --h0");
    }
    std::cerr << "warning: h0 not given; using chi(class) = " << h0.get_str()
              << ", which presumes h1 = h2 = 0\n";
    return h0;
}

int cmd_kernel_check(const tw::JobConfig& cfg) {
    require_format(cfg, "kernel-check", "text");
    tw::Surface s = tw::surface_from_config(cfg);
    const tw::ChernClass& e = single_class(cfg, "kernel-check");
    tw::Integer h0 = resolve_h0(s, e, cfg.h0);
    tw::KernelReport report;
    try {
        report = tw::check_theorem_hypotheses(s, e, h0);
    } catch (const std::invalid_argument& ex) {
        throw tw::ConfigError(ex.what());
    }
    std::string out = tw::render_report(report);
    if (cfg.reg) {
        tw::Integer d;
        try {
            d = tw::twist_bound(s, e, *cfg.reg);
        } catch (const std::invalid_argument& ex) {
            throw tw::ConfigError(ex.what());
        }
        out += "  twist bound         : least d with stable twisted kernel (reg = " +
               cfg.reg->to_string() + ") : " + d.get_str() + "\n";
    }
    emit(cfg.out_path, out);
    return report.all_hypotheses_hold ? 0 : 1;
}

int cmd_enumerate(const tw::JobConfig& cfg) {
    require_format(cfg, "enumerate", "csv");
    tw::Surface s = tw::surface_from_config(cfg);
    const tw::ChernClass& e = single_class(cfg, "enumerate");
    tw::EnumerationConfig ec = make_enum_config(cfg, s, e);
    std::vector<tw::CandidateWall> cands;
    try {
        cands = tw::enumerate_candidate_walls(e, ec);
    } catch (const std::invalid_argument& ex) {
        throw tw::ConfigError(ex.what());
    }
    emit(cfg.out_path, tw::candidates_to_csv(cands));
    return 0;
}

int cmd_plot(const tw::JobConfig& cfg) {
    require_format(cfg, "plot", "svg");
    tw::Surface s = tw::surface_from_config(cfg);
    const tw::ChernClass& e = single_class(cfg, "plot");
    if (!cfg.out_path) {
        throw tw::ConfigError("plot writes an SVG file; pass --out <path>");
    }

    tw::SlicePlot plot;
    std::vector<tw::CandidateWall> cands;
    try {
        plot.vertical = tw::vertical_wall(e);
        cands = tw::enumerate_candidate_walls(e, make_enum_config(cfg, s, e));
    } catch (const std::invalid_argument& ex) {
        throw tw::ConfigError(ex.what());
    }
    for (const auto& c : cands) plot.semicircles.push_back(c.wall);
    if (e.deg.sign() > 0 && e.ch2.sign() > 0) {
        plot.highlight = tw::destabilizing_wall(e);
    }

    if (cfg.beta_min && cfg.beta_max && cfg.alpha_max) {
        plot.window = tw::PlotWindow{*cfg.beta_min, *cfg.beta_max, *cfg.alpha_max};
    } else if (cfg.beta_min || cfg.beta_max || cfg.alpha_max) {
        throw tw::ConfigError("beta-min, beta-max and alpha-max must be given together");
    } else {
        // Frame every drawn wall with one unit of margin, exactly.
        tw::Rational mu = tw::slope(e).value();
        tw::Rational lo = mu;
        tw::Rational hi = mu;
        tw::Rational top(1);
        auto grow = [&](const tw::Wall& w) {
            tw::Rational r_up = tw::sqrt_upper(w.radius_sq);
            if (w.center - r_up < lo) lo = w.center - r_up;
            if (w.center + r_up > hi) hi = w.center + r_up;
            if (r_up > top) top = r_up;
        };
        for (const tw::Wall& w : plot.semicircles) grow(w);
        if (plot.highlight) grow(*plot.highlight);
        plot.window = tw::PlotWindow{lo - tw::Rational(1), hi + tw::Rational(1),
                                     top + tw::Rational(1)};
    }

    std::string svg;
    try {
        svg = tw::render_slice_svg(plot);
    } catch (const std::invalid_argument& ex) {
        throw tw::ConfigError(ex.what());
    }
    emit(cfg.out_path, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall-and-chamber calculator for tilt stability on surfaces"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* inv = app.add_subcommand("invariants", "slope, discriminant, chi and lattice checks");
    add_common_flags(inv, f);

    CLI::App* wall = app.add_subcommand("wall", "wall of a pair of classes");
    add_common_flags(wall, f);

    CLI::App* kernel = app.add_subcommand("kernel-check", "kernel-sheaf stability criterion");
    add_common_flags(kernel, f);
    add_kernel_flags(kernel, f);

    CLI::App* enumerate = app.add_subcommand("enumerate", "candidate destabilizing walls as CSV");
    add_common_flags(enumerate, f);
    add_enum_flags(enumerate, f);

    CLI::App* plot = app.add_subcommand("plot", "SVG picture of the wall structure");
    add_common_flags(plot, f);
    add_enum_flags(plot, f);
    add_plot_flags(plot, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        tw::JobConfig cfg = load_config(f);
        if (inv->parsed()) return cmd_invariants(cfg);
        if (wall->parsed()) return cmd_wall(cfg);
        if (kernel->parsed()) return cmd_kernel_check(cfg);
        if (enumerate->parsed()) return cmd_enumerate(cfg);
        if (plot->parsed()) return cmd_plot(cfg);
        std::cerr << "error: no command given\n";
        return 2;
    } catch (const tw::IoError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const tw::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
