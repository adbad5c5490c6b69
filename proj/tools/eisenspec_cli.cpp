#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eisenspec/acceptance.hpp"
#include "eisenspec/dynamics.hpp"
#include "eisenspec/eisenstein.hpp"
#include "eisenspec/emit.hpp"
#include "eisenspec/errors.hpp"
#include "eisenspec/geometry.hpp"
#include "eisenspec/lp_analysis.hpp"
#include "eisenspec/spectrum.hpp"

using namespace eisenspec;
using Complex = std::complex<double>;
using emit::Table;

namespace {

struct Output {
    std::string path;
    std::string format = "csv";
};

void add_output(CLI::App* cmd, Output& out) {
    cmd->add_option("--out", out.path, "output file (default: stdout)");
    cmd->add_option("--format", out.format, "csv, svg or json")->check(CLI::IsMember({"csv", "svg", "json"}));
}

void deliver(const Table& t, const Output& out, std::size_t xcol = 0, std::size_t ycol = 1) {
    const auto fmt = emit::parse_format(out.format);
    std::string body;
    if (fmt == emit::Format::Svg) {
        body = emit::to_svg(t, xcol, ycol);
    } else {
        body = emit::render(t, fmt);
    }
    if (out.path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out.path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + out.path + "' for writing");
    f << body;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "x,y" -> point
geometry::UpperHalfPoint parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--z", "expected \"x,y\"");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--z", "expected two decimal numbers \"x,y\"");
    }
}

Table modes_table(const dynamics::ModeSpan& span) {
    Table t;
    t.columns = {"lambda_re", "lambda_im", "coeff_re", "coeff_im"};
    for (const auto& m : span.modes) {
        t.add_row({m.lambda.real(), m.lambda.imag(), m.coefficient.real(), m.coefficient.imag()});
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein series, L^p spectra and heat-semigroup dynamics on the modular surface"};
    app.require_subcommand(1);

    // region
    Output region_out;
    double region_p = 1.5, region_b = 0.5, region_mu = 0.0, region_c = 0.0, region_tau = 2.0;
    int region_samples = 100;
    std::string region_group;
    auto* region = app.add_subcommand("region", "boundary of the parabolic region P_{M,p}");
    region->add_option("--p", region_p, "exponent p > 1");
    region->add_option("--b", region_b, "norm of rho_P");
    region->add_option("--mu", region_mu, "shift mu >= 0");
    region->add_option("--c", region_c, "shift c");
    region->add_option("--samples", region_samples, "number of boundary points");
    region->add_option("--tau-max", region_tau, "range of the boundary parameter");
    region->add_option("--group", region_group, "group datum: 'modular' or a JSON file (sets b)");
    add_output(region, region_out);

    // eisen
    Output eisen_out;
    double s_re = 0.7, s_im = 3.0, x = 0.0, y = 1.5, y_min = 0.9, y_max = 3.0;
    std::string method = "fourier";
    int bound = 1000, modes = 0, nx = 0, ny = 0;
    auto* eisen = app.add_subcommand("eisen", "evaluate E(z, s) at a point or on a grid");
    eisen->add_option("--s-re", s_re, "Re s");
    eisen->add_option("--s-im", s_im, "Im s");
    eisen->add_option("--method", method, "fourier or coset")->check(CLI::IsMember({"fourier", "coset"}));
    eisen->add_option("--bound", bound, "coset truncation bound");
    eisen->add_option("--modes", modes, "Fourier modes (0: automatic)");
    eisen->add_option("--x", x, "Re z");
    eisen->add_option("--y", y, "Im z");
    eisen->add_option("--nx", nx, "grid points in x over [-1/2, 1/2]");
    eisen->add_option("--ny", ny, "grid points in y over [y-min, y-max]");
    eisen->add_option("--y-min", y_min);
    eisen->add_option("--y-max", y_max);
    add_output(eisen, eisen_out);

    // eigencheck
    Output eig_out;
    double eig_s_re = 0.6, eig_s_im = 2.0, step = 1e-3, z_re = 0.2, z_im = 1.4;
    std::string eig_z;
    auto* eig = app.add_subcommand("eigencheck", "finite-difference residual of Delta E = s(1-s) E");
    eig->add_option("--s-re", eig_s_re);
    eig->add_option("--s-im", eig_s_im);
    eig->add_option("--z", eig_z, "point as \"x,y\"");
    eig->add_option("--z-re", z_re);
    eig->add_option("--z-im", z_im);
    eig->add_option("--step", step);
    add_output(eig, eig_out);

    // lpscan
    Output lp_out;
    double lp_s_re = 0.75, lp_s_im = 5.0, pmin = 1.1, pmax = 1.9;
    int lp_steps = 9;
    std::vector<double> ymax = {10.0, 20.0, 40.0};
    auto* lps = app.add_subcommand("lpscan", "L^p verdicts and truncated norms over a range of p");
    lps->add_option("--s-re", lp_s_re);
    lps->add_option("--s-im", lp_s_im);
    lps->add_option("--pmin", pmin);
    lps->add_option("--pmax", pmax);
    lps->add_option("--steps", lp_steps);
    lps->add_option("--ymax", ymax, "truncation heights")->delimiter(',');
    add_output(lps, lp_out);

    // scatter
    Output sc_out;
    double sc_re = 0.5, sc_im = 5.0;
    auto* sc = app.add_subcommand("scatter", "scattering scalar phi(s)");
    sc->add_option("--s-re", sc_re);
    sc->add_option("--s-im", sc_im);
    add_output(sc, sc_out);

    // residue
    Output res_out;
    double eps = 1e-2;
    std::string res_z = "0.1,1.3";
    auto* res = app.add_subcommand("residue", "residue of E(z, s) at s = 1");
    res->add_option("--eps", eps);
    res->add_option("--z", res_z, "point as \"x,y\"");
    add_output(res, res_out);

    // dynamics
    auto* dyn = app.add_subcommand("dynamics", "heat-semigroup dynamics");
    dyn->require_subcommand(1);
    double dp = 1.5, dc = 0.5, db = 0.5, theta = 0.1;
    Output dv_out, dper_out, dev_out, dpr_out, dten_out;
    auto* dv = dyn->add_subcommand("verdict", "subspace-chaos verdict");
    auto* dper = dyn->add_subcommand("periodic", "periodic eigenfunction with lambda - c = i theta");
    for (auto* cmd : {dv, dper}) {
        cmd->add_option("--p", dp);
        cmd->add_option("--c", dc);
        cmd->add_option("--b", db);
    }
    dper->add_option("--theta", theta);
    add_output(dv, dv_out);
    add_output(dper, dper_out);

    std::string modes_file, modes_file2;
    double t_max = 10.0, ev_c = 0.0;
    int ev_steps = 50;
    auto* dev = dyn->add_subcommand("evolve", "orbit trace of a mode span");
    dev->add_option("--modes", modes_file, "mode span JSON")->required();
    dev->add_option("--c", ev_c);
    dev->add_option("--b", db);
    dev->add_option("--t-max", t_max);
    dev->add_option("--steps", ev_steps);
    add_output(dev, dev_out);

    double center_re = -0.05, center_im = -0.1, radius = 0.0;
    int nodes = 64;
    bool broken = false;
    auto* dpr = dyn->add_subcommand("probe", "contour-integral analyticity probe on Omega");
    dpr->add_option("--p", dp);
    dpr->add_option("--c", dc);
    dpr->add_option("--b", db);
    dpr->add_option("--center-re", center_re);
    dpr->add_option("--center-im", center_im);
    dpr->add_option("--radius", radius, "0: half the distance to the boundary");
    dpr->add_option("--nodes", nodes);
    dpr->add_flag("--broken", broken, "pair |F| instead of F");
    add_output(dpr, dpr_out);

    double t_eval = 0.0;
    auto* dten = dyn->add_subcommand("tensor", "tensor product of two mode spans");
    dten->add_option("--modes", modes_file, "first span JSON")->required();
    dten->add_option("--modes2", modes_file2, "second span JSON")->required();
    dten->add_option("--t", t_eval, "evolve the product to time t");
    dten->add_option("--c", ev_c, "c_1 + c_2");
    dten->add_option("--b", db);
    add_output(dten, dten_out);

    // selftest
    Output st_out;
    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    add_output(st, st_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*region) {
            if (!region_group.empty()) region_b = geometry::GroupDatum::load(region_group).b;
            spectrum::ParabolicRegion reg{region_p, region_b, region_mu, region_c};
            Table t;
            t.columns = {"tau", "re_lambda", "im_lambda"};
            for (const auto& bp : spectrum::region_boundary(reg, region_samples, region_tau)) {
                t.add_row({bp.tau, bp.lambda.real(), bp.lambda.imag()});
            }
            deliver(t, region_out, 1, 2);
        } else if (*eisen) {
            const auto s = eisenstein::SpectralParameter::from_s({s_re, s_im});
            const eisenstein::EisensteinEvaluator ev(
                geometry::GroupDatum::modular_surface(),
                {method == "coset" ? eisenstein::Method::CosetSum : eisenstein::Method::Fourier,
                 method == "coset" ? bound : modes, eisenstein::kDefaultPoleExclusion});
            std::vector<geometry::UpperHalfPoint> pts;
            if (nx > 0 || ny > 0) {
                if (nx < 2 || ny < 2) throw DomainError("eisen: a grid needs --nx >= 2 and --ny >= 2");
                for (int j = 0; j < ny; ++j)
                    for (int i = 0; i < nx; ++i)
                        pts.emplace_back(-0.5 + double(i) / (nx - 1), y_min + (y_max - y_min) * j / (ny - 1));
            } else {
                pts.emplace_back(x, y);
            }
            std::vector<Complex> vals(pts.size());
            for (std::size_t k = 0; k < pts.size(); ++k) vals[k] = ev(pts[k], s);
            Table t;
            t.columns = {"x", "y", "re", "im", "abs"};
            for (std::size_t k = 0; k < pts.size(); ++k) {
                t.add_row({pts[k].x(), pts[k].y(), vals[k].real(), vals[k].imag(), std::abs(vals[k])});
            }
            deliver(t, eisen_out, 1, 4);
        } else if (*eig) {
            const auto z = eig_z.empty() ? geometry::UpperHalfPoint(z_re, z_im) : parse_point(eig_z);
            const auto s = eisenstein::SpectralParameter::from_s({eig_s_re, eig_s_im});
            Table t;
            t.columns = {"x", "y", "step", "residual"};
            for (double h : {step, step / 2.0}) {
                t.add_row({z.x(), z.y(), h, eisenstein::eigencheck_residual(z, s, h)});
            }
            deliver(t, eig_out, 2, 3);
        } else if (*lps) {
            if (lp_steps < 1) throw DomainError("lpscan: --steps must be >= 1");
            const auto s = eisenstein::SpectralParameter::from_s({lp_s_re, lp_s_im});
            Table t;
            t.columns = {"p", "verdict"};
            for (double h : ymax) t.columns.push_back("truncated_norm_y" + emit::format_number(h));
            for (int k = 0; k < lp_steps; ++k) {
                const double p = lp_steps == 1 ? pmin : pmin + (pmax - pmin) * k / (lp_steps - 1);
                std::vector<emit::Cell> row = {p, std::string(lp::to_string(lp::lp_membership_verdict(s, p).verdict))};
                for (double h : ymax) row.emplace_back(lp::lp_norm_truncated(s, p, h).norm);
                t.add_row(std::move(row));
            }
            deliver(t, lp_out, 0, 2);
        } else if (*sc) {
            const auto s = eisenstein::SpectralParameter::from_s({sc_re, sc_im});
            const Complex phi = eisenstein::scattering_phi(s);
            Table t;
            t.columns = {"s_re", "s_im", "phi_re", "phi_im", "modulus"};
            t.add_row({sc_re, sc_im, phi.real(), phi.imag(), std::abs(phi)});
            deliver(t, sc_out, 1, 4);
        } else if (*res) {
            const auto z = parse_point(res_z);
            const Complex r = eisenstein::residue_at_one(z, eps);
            const double vol = geometry::fundamental_volume_numeric(QuadratureSpec{4, 64});
            Table t;
            t.columns = {"x", "y", "residue_re", "residue_im", "inverse_volume"};
            t.add_row({z.x(), z.y(), r.real(), r.imag(), 1.0 / vol});
            deliver(t, res_out, 0, 2);
        } else if (*dv) {
            const auto v = dynamics::chaos_verdict(dp, dc, db);
            Table t;
            t.columns = {"p", "c", "b", "verdict", "witness"};
            t.add_row({dp, dc, db, std::string(dynamics::to_string(v.verdict)), v.witness});
            deliver(t, dv_out, 0, 1);
        } else if (*dper) {
            const auto pp = dynamics::periodic_param(theta, dp, dc, db);
            Table t;
            t.columns = {"theta", "admissible", "lambda_h0_re", "lambda_h0_im", "period", "reason"};
            t.add_row({theta, std::string(pp.admissible ? "true" : "false"), pp.param.lambda_h0().real(),
                       pp.param.lambda_h0().imag(), pp.period, pp.reason});
            deliver(t, dper_out, 0, 2);
        } else if (*dev) {
            const auto span = dynamics::ModeSpan::from_json(slurp(modes_file), db);
            Table t;
            t.columns = {"t"};
            for (std::size_t k = 0; k < span.modes.size(); ++k) t.columns.push_back("mode" + std::to_string(k));
            t.columns.push_back("norm");
            for (const auto& row : dynamics::orbit_trace(span, ev_c, t_max, ev_steps)) {
                std::vector<emit::Cell> cells = {row.t};
                for (double m : row.moduli) cells.emplace_back(m);
                cells.emplace_back(row.norm_proxy);
                t.add_row(std::move(cells));
            }
            deliver(t, dev_out, 0, t.columns.size() - 1);
        } else if (*dpr) {
            dynamics::ProbeSpec ps{dp, dc, db, {center_re, center_im}, radius, nodes, broken};
            const auto r = dynamics::analyticity_probe(ps);
            Table t;
            t.columns = {"center_re", "center_im", "radius", "nodes", "broken", "residual", "max_abs"};
            t.add_row({center_re, center_im, r.radius, double(nodes), std::string(broken ? "true" : "false"),
                       r.residual, r.max_abs});
            deliver(t, dpr_out, 2, 5);
        } else if (*dten) {
            const auto a = dynamics::ModeSpan::from_json(slurp(modes_file), db);
            const auto b = dynamics::ModeSpan::from_json(slurp(modes_file2), db);
            auto prod = dynamics::tensor_modes(a, b);
            if (t_eval > 0.0) prod = dynamics::evolve(prod, t_eval, ev_c);
            deliver(modes_table(prod), dten_out, 0, 1);
        } else if (*st) {
            Table t;
            t.columns = {"id", "criterion", "result", "seconds", "detail"};
            int failed = 0;
            for (int id = 1; id <= acceptance::criterion_count(); ++id) {
                const auto r = acceptance::run_criterion(id);
                std::fprintf(stderr, "%s\n", acceptance::format_line(r).c_str());
                if (!r.passed) ++failed;
                t.add_row({double(id), r.name, std::string(r.passed ? "PASS" : "FAIL"), r.seconds, r.detail});
            }
            deliver(t, st_out, 0, 3);
            return failed == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
