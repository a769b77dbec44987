#include "oldqm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oldqm/bohr.hpp"
#include "oldqm/constants.hpp"
#include "oldqm/expansion.hpp"
#include "oldqm/integrals.hpp"
#include "oldqm/kepler.hpp"
#include "oldqm/output.hpp"
#include "oldqm/quantize.hpp"
#include "oldqm/spiral.hpp"

namespace oldqm {

namespace {

struct GlobalOptions {
    double alpha = 0.0;  // 0: derive from the charge
    std::string units = "cgs";
    std::string format = "text";
    std::string out_path;
};

PhysicalConstants resolve_constants(const GlobalOptions& g) {
    PhysicalConstants k = default_constants();
    if (g.alpha > 0.0) k = with_alpha(k, g.alpha);
    return k;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

Json make_meta(const std::vector<std::string>& args, const GlobalOptions& g,
               const PhysicalConstants& k) {
    Json meta = Json::object();
    meta["version"] = artifact_version;
    meta["command"] = join_args(args);
    meta["alpha"] = fine_structure_constant(k);
    meta["units"] = g.units;
    meta["electron_mass_g"] = k.electron_mass;
    meta["electron_charge_statc"] = k.electron_charge;
    meta["hbar_erg_s"] = k.hbar;
    meta["c_cm_s"] = k.c;
    return meta;
}

// Energy in the unit selected by --units: erg for cgs, eV for ev, and the
// level's own dimensionless ratio for natural.
std::pair<double, const char*> energy_in_units(const EnergyLevel& e, const std::string& units,
                                               const PhysicalConstants& k) {
    if (units == "cgs") return {convert(e, EnergyUnit::erg, k).value, "erg"};
    if (units == "ev") return {convert(e, EnergyUnit::ev, k).value, "eV"};
    return {e.value, unit_name(e.unit)};
}

void add_quantity_row(TableDocument& doc, const char* name, double value, const char* unit) {
    Json row = Json::object();
    row["quantity"] = name;
    row["value"] = value;
    row["unit"] = unit;
    doc.rows.push_back(std::move(row));
}

TableDocument cmd_constants(const GlobalOptions& g, const PhysicalConstants& k) {
    TableDocument doc;
    doc.columns = {"quantity", "value", "unit"};
    add_quantity_row(doc, "electron_mass", k.electron_mass, "g");
    add_quantity_row(doc, "electron_charge", k.electron_charge, "statC");
    add_quantity_row(doc, "hbar", k.hbar, "erg*s");
    add_quantity_row(doc, "c", k.c, "cm/s");
    add_quantity_row(doc, "fine_structure_constant", fine_structure_constant(k), "");
    add_quantity_row(doc, "bohr_radius", bohr_radius(k), "cm");
    const auto hartree = energy_in_units({1.0, EnergyUnit::ratio_hartree}, g.units, k);
    add_quantity_row(doc, "hartree_energy", hartree.first, hartree.second);
    const auto rest = energy_in_units({1.0, EnergyUnit::ratio_rest}, g.units, k);
    add_quantity_row(doc, "rest_energy", rest.first, rest.second);
    return doc;
}

TableDocument cmd_bohr(const GlobalOptions& g, const PhysicalConstants& k, int z, int n1,
                       int n2) {
    TableDocument doc;
    doc.columns = {"quantity", "value", "unit"};
    const BohrState initial{static_cast<double>(z), n1};
    const BohrState final_state{static_cast<double>(z), n2};
    add_quantity_row(doc, "radius_initial", bohr_orbit_radius(initial, k), "cm");
    add_quantity_row(doc, "radius_final", bohr_orbit_radius(final_state, k), "cm");
    add_quantity_row(doc, "speed_initial", bohr_speed(initial, k), "cm/s");
    const auto e1 = energy_in_units({bohr_energy(initial, k), EnergyUnit::erg}, g.units, k);
    const auto e2 = energy_in_units({bohr_energy(final_state, k), EnergyUnit::erg}, g.units, k);
    add_quantity_row(doc, "energy_initial", e1.first, e1.second);
    add_quantity_row(doc, "energy_final", e2.first, e2.second);
    const PhotonTransition ph = transition(z, n1, n2, k);
    const auto ph_e = energy_in_units({ph.energy, EnergyUnit::erg}, g.units, k);
    add_quantity_row(doc, "photon_energy", ph_e.first, ph_e.second);
    add_quantity_row(doc, "wavelength_cm", ph.wavelength_cm, "cm");
    add_quantity_row(doc, "wavelength_nm", ph.wavelength_nm, "nm");
    Json row = Json::object();
    row["quantity"] = "direction";
    row["value"] = ph.direction == PhotonDirection::emission ? "emission" : "absorption";
    row["unit"] = "";
    doc.rows.push_back(std::move(row));
    return doc;
}

double binding_ev(const EnergyLevel& level, const PhysicalConstants& k) {
    if (level.unit == EnergyUnit::ratio_rest)
        return convert({level.value - 1.0, EnergyUnit::ratio_rest}, EnergyUnit::ev, k).value;
    return convert(level, EnergyUnit::ev, k).value;
}

TableDocument cmd_spectrum(const PhysicalConstants& k, const std::string& model, int z,
                           int nmax, const std::string& method, double tol) {
    TableDocument doc;
    const bool analytic = method == "analytic";
    // The polynomial-reduction rule solves the same algebraic condition as
    // the closed-form action, so "nu" runs the root-finder on that path;
    // "wkb-numeric" quantizes through the quadrature end to end.
    WkbOptions wkb_opt;
    wkb_opt.rel_tol = tol;
    wkb_opt.method = method == "nu" ? ActionMethod::closed_form : ActionMethod::quadrature;

    auto level_of = [&](const RadialProblem& p, int n_r) {
        return analytic ? analytic_energy(p, n_r) : wkb_energy_numeric(p, n_r, wkb_opt).energy;
    };

    if (model == "old-sommerfeld") {
        if (!analytic)
            throw std::domain_error("spectrum: model old-sommerfeld supports --method analytic");
        doc.columns = {"n", "ntheta", "n_r", "energy_ratio", "binding_ev"};
        for (int n = 1; n <= nmax; ++n)
            for (int ntheta = 1; ntheta <= n; ++ntheta) {
                const EnergyLevel e = old_fine_structure_energy({n - ntheta, ntheta}, z, k);
                Json row = Json::object();
                row["n"] = n;
                row["ntheta"] = ntheta;
                row["n_r"] = n - ntheta;
                row["energy_ratio"] = e.value;
                row["binding_ev"] = binding_ev(e, k);
                doc.rows.push_back(std::move(row));
            }
        return doc;
    }
    if (model == "dirac") {
        doc.columns = {"n", "j", "n_r", "energy_ratio", "binding_ev"};
        for (int n = 1; n <= nmax; ++n)
            for (int two_j = 1; two_j <= 2 * n - 1; two_j += 2) {
                const double j = 0.5 * two_j;
                const int n_r = n - (two_j + 1) / 2;
                const EnergyLevel e = level_of(make_dirac(z, j, k), n_r);
                Json row = Json::object();
                row["n"] = n;
                row["j"] = j;
                row["n_r"] = n_r;
                row["energy_ratio"] = e.value;
                row["binding_ev"] = binding_ev(e, k);
                doc.rows.push_back(std::move(row));
            }
        return doc;
    }
    const bool nonrel = model == "nonrel";
    doc.columns = {"n", "l", "n_r", nonrel ? "energy_hartree" : "energy_ratio", "binding_ev"};
    for (int n = 1; n <= nmax; ++n)
        for (int l = 0; l < n; ++l) {
            const int n_r = n - l - 1;
            const RadialProblem p =
                nonrel ? make_nonrel(z, l, k) : make_rel_schrodinger(z, l, k);
            const EnergyLevel e = level_of(p, n_r);
            Json row = Json::object();
            row["n"] = n;
            row["l"] = l;
            row["n_r"] = n_r;
            row[doc.columns[3]] = e.value;
            row["binding_ev"] = binding_ev(e, k);
            doc.rows.push_back(std::move(row));
        }
    return doc;
}

TableDocument cmd_orbit(const GlobalOptions& g, const PhysicalConstants& k, int z, int nr,
                        int ntheta, double revolutions, int points) {
    const OrbitGeometry geom = quantized_orbit({nr, ntheta}, z, k);
    const double span = revolutions * 2.0 * std::numbers::pi / geom.omega;
    std::vector<double> thetas(points);
    for (int i = 0; i < points; ++i)
        thetas[i] = points == 1 ? 0.0 : span * i / (points - 1);
    const double scale = g.units == "cgs" ? bohr_radius(k) / z : 1.0;

    TableDocument doc;
    doc.meta = Json::object();
    doc.meta["semi_major"] = geom.semi_major * scale;
    doc.meta["eccentricity"] = geom.eccentricity;
    doc.meta["omega"] = geom.omega;
    doc.meta["perihelion_shift_rad"] = perihelion_shift(geom);
    doc.meta["r_unit"] = g.units == "cgs" ? "cm" : "a0/Z";
    doc.columns = {"theta", "r", "x", "y"};
    for (const OrbitPoint& pt : sample_orbit(geom, thetas)) {
        Json row = Json::object();
        row["theta"] = pt.theta;
        row["r"] = pt.r * scale;
        row["x"] = pt.x * scale;
        row["y"] = pt.y * scale;
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

TableDocument cmd_integral_abc(double a, double b, double c, double quad_tol) {
    const AbcCoefficients k{a, b, c};
    TableDocument doc;
    doc.columns = {"quantity", "value", "unit"};
    const auto [r1, r2] = turning_points(k);
    add_quantity_row(doc, "turning_point_inner", r1, "");
    add_quantity_row(doc, "turning_point_outer", r2, "");
    const double closed = action_closed_form(k);
    const double quad = action_quadrature(k, quad_tol);
    add_quantity_row(doc, "closed_form", closed, "");
    add_quantity_row(doc, "quadrature", quad, "");
    add_quantity_row(doc, "difference", quad - closed, "");
    return doc;
}

TableDocument cmd_integral_eccentricity(double eps, double quad_tol) {
    const auto [numeric, closed] = eccentricity_integral(eps, quad_tol);
    TableDocument doc;
    doc.columns = {"quantity", "value", "unit"};
    add_quantity_row(doc, "numeric", numeric, "");
    add_quantity_row(doc, "closed_form", closed, "");
    add_quantity_row(doc, "difference", numeric - closed, "");
    return doc;
}

TableDocument cmd_wkb(const PhysicalConstants& k, const std::string& model, int z, int n_r,
                      int l, double j, double tol) {
    RadialProblem p = model == "nonrel"  ? make_nonrel(z, l, k)
                      : model == "dirac" ? make_dirac(z, j, k)
                                         : make_rel_schrodinger(z, l, k);
    const EnergyLevel analytic = analytic_energy(p, n_r);
    const QuantizationResult numeric = wkb_energy_numeric(p, n_r, {tol, ActionMethod::quadrature});
    const AbcCoefficients abc = abc_at_level(p, n_r);

    TableDocument doc;
    doc.columns = {"quantity", "value", "unit"};
    const char* unit = unit_name(analytic.unit);
    add_quantity_row(doc, "analytic_energy", analytic.value, unit);
    add_quantity_row(doc, "wkb_numeric_energy", numeric.energy.value, unit);
    add_quantity_row(doc, "difference", numeric.energy.value - analytic.value, unit);
    add_quantity_row(doc, "action_residual", numeric.action_residual, "");
    add_quantity_row(doc, "bisection_steps", numeric.bisection_steps, "");
    add_quantity_row(doc, "generic_rule_residual", generic_rule_residual(abc, n_r), "");
    add_quantity_row(doc, "nikiforov_uvarov_residual",
                     nikiforov_uvarov_rule(abc, n_r).residual, "");
    return doc;
}

TableDocument cmd_expand(const PhysicalConstants& k, const std::string& model, int n, int l,
                         double j, double mu_flag, int z, int orders) {
    const double mu = mu_flag > 0.0 ? mu_flag : z * fine_structure_constant(k);
    const ExpansionReport rep = model == "dirac" ? expand_dirac(n, j, mu, orders)
                                                 : expand_rel_schrodinger(n, l, mu, orders);
    TableDocument doc;
    doc.meta = Json::object();
    doc.meta["mu"] = rep.mu;
    doc.meta["exact"] = rep.exact;
    doc.meta["remainder_order_estimate"] = rep.remainder_order_estimate;
    doc.columns = {"order", "partial_sum", "error"};
    for (std::size_t i = 0; i < rep.orders.size(); ++i) {
        Json row = Json::object();
        row["order"] = rep.orders[i];
        row["partial_sum"] = rep.partial_sums[i];
        row["error"] = rep.exact - rep.partial_sums[i];
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

TableDocument cmd_compare(const PhysicalConstants& k, int z, int nmax) {
    TableDocument doc;
    doc.columns = {"n",      "l",    "j",      "n_r",        "e_nonrel",        "e_old",
                   "e_dirac", "e_rel_schr", "old_minus_dirac", "schr_minus_dirac",
                   "mu4_schr", "mu4_dirac"};
    for (const ComparisonRow& r : comparison_table(z, nmax, k)) {
        Json row = Json::object();
        row["n"] = r.n;
        row["l"] = r.l;
        row["j"] = r.j;
        row["n_r"] = r.n_r;
        row["e_nonrel"] = r.e_nonrel;
        row["e_old"] = r.e_old;
        row["e_dirac"] = r.e_dirac;
        row["e_rel_schr"] = r.e_rel_schr;
        row["old_minus_dirac"] = r.e_old - r.e_dirac;
        row["schr_minus_dirac"] = r.e_rel_schr - r.e_dirac;
        row["mu4_schr"] = r.mu4_schr;
        row["mu4_dirac"] = r.mu4_dirac;
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

TableDocument cmd_spiral(const PhysicalConstants& k, double r_start, bool trajectory,
                         int points, double tol) {
    SpiralOptions opt;
    opt.rel_tol = tol;
    const SpiralResult res = integrate_spiral(r_start, opt, k);

    TableDocument doc;
    if (!trajectory) {
        doc.columns = {"quantity", "value", "unit"};
        add_quantity_row(doc, "initial_radius", r_start, "cm");
        add_quantity_row(doc, "spiral_time", res.analytic_collapse_time, "s");
        add_quantity_row(doc, "revolution_time", revolution_time(r_start, k), "s");
        add_quantity_row(doc, "orbit_rotations", res.initial_orbit_rotations, "");
        add_quantity_row(doc, "integrated_rotations", res.integrated_rotations, "");
        add_quantity_row(doc, "collapse_time_ode", res.collapse_time, "s");
        add_quantity_row(doc, "collapse_time_relative_error",
                         std::abs(res.collapse_time - res.analytic_collapse_time) /
                             res.analytic_collapse_time,
                         "");
        return doc;
    }
    doc.meta = Json::object();
    doc.meta["spiral_time_s"] = res.analytic_collapse_time;
    doc.meta["collapse_time_ode_s"] = res.collapse_time;
    doc.columns = {"t", "r"};
    const std::size_t n = res.samples.size();
    const std::size_t stride = std::max<std::size_t>(1, n / static_cast<std::size_t>(points));
    for (std::size_t i = 0; i < n; i += stride) {
        Json row = Json::object();
        row["t"] = res.samples[i].t;
        row["r"] = res.samples[i].r;
        doc.rows.push_back(std::move(row));
    }
    if ((n - 1) % stride != 0) {
        Json row = Json::object();
        row["t"] = res.samples.back().t;
        row["r"] = res.samples.back().r;
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"semiclassical hydrogenic atom toolkit: orbits, spectra, fine structure"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--alpha", g.alpha, "override the fine-structure constant (rescales e)")
        ->check(CLI::PositiveNumber);
    app.add_option("--units", g.units, "energy units for reports")
        ->check(CLI::IsMember({"cgs", "ev", "natural"}));
    app.add_option("--format", g.format, "output serialization")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", g.out_path, "write data to a file instead of stdout");

    int z = 1, n1 = 2, n2 = 1, nmax = 3, n_r = 0, ntheta = 1, l = 0, n_level = 1;
    double j = 0.5, revolutions = 1.0, tol = 1e-10, quad_tol = 1e-10;
    double a = 1.0, b = 4.0, c = 1.0, eccentricity = -1.0, mu_flag = -1.0, r_start = 0.0;
    int points = 1000, orders = 4;
    std::string model = "dirac", method = "analytic";
    bool trajectory = false;

    CLI::App* sc_constants = app.add_subcommand("constants", "physical constants in use");
    sc_constants->fallthrough();

    CLI::App* sc_bohr = app.add_subcommand("bohr", "circular orbit levels and one transition");
    sc_bohr->fallthrough();
    sc_bohr->add_option("--z", z, "nuclear charge")->check(CLI::Range(1, 1000000));
    sc_bohr->add_option("--n1", n1, "initial level")->check(CLI::PositiveNumber);
    sc_bohr->add_option("--n2", n2, "final level")->check(CLI::PositiveNumber);

    CLI::App* sc_spectrum = app.add_subcommand("spectrum", "bound level table for one model");
    sc_spectrum->fallthrough();
    sc_spectrum->add_option("--model", model, "nonrel|rel-schrodinger|dirac|old-sommerfeld")
        ->check(CLI::IsMember({"nonrel", "rel-schrodinger", "dirac", "old-sommerfeld"}));
    sc_spectrum->add_option("--z", z, "nuclear charge")->check(CLI::Range(1, 1000000));
    sc_spectrum->add_option("--nmax", nmax, "highest principal quantum number")
        ->check(CLI::Range(1, 50));
    sc_spectrum->add_option("--method", method, "analytic|wkb-numeric|nu")
        ->check(CLI::IsMember({"analytic", "wkb-numeric", "nu"}));
    sc_spectrum->add_option("--tol", tol, "root-finder tolerance");

    CLI::App* sc_orbit = app.add_subcommand("orbit", "sampled relativistic Kepler rosette");
    sc_orbit->fallthrough();
    sc_orbit->add_option("--z", z, "nuclear charge")->check(CLI::Range(1, 1000000));
    sc_orbit->add_option("--nr", n_r, "radial quantum number")->check(CLI::Range(0, 1000));
    sc_orbit->add_option("--ntheta", ntheta, "azimuthal quantum number")
        ->check(CLI::Range(1, 1000));
    sc_orbit->add_option("--revolutions", revolutions, "radial periods to sample")
        ->check(CLI::PositiveNumber);
    sc_orbit->add_option("--points", points, "sample count (max 1e6)")
        ->check(CLI::Range(1, 1000000));

    CLI::App* sc_integral = app.add_subcommand("integral", "radial action / eccentricity integral");
    sc_integral->fallthrough();
    sc_integral->add_option("--a", a, "coefficient A");
    sc_integral->add_option("--b", b, "coefficient B");
    sc_integral->add_option("--c", c, "coefficient C");
    sc_integral->add_option("--quad-tol", quad_tol, "quadrature relative tolerance");
    sc_integral->add_option("--eccentricity", eccentricity,
                            "evaluate the orbit-average integral at this eps instead");

    CLI::App* sc_wkb = app.add_subcommand("wkb", "numeric vs analytic quantization of one level");
    sc_wkb->fallthrough();
    sc_wkb->add_option("--model", model, "nonrel|rel-schrodinger|dirac")
        ->check(CLI::IsMember({"nonrel", "rel-schrodinger", "dirac"}));
    sc_wkb->add_option("--z", z, "nuclear charge")->check(CLI::Range(1, 1000000));
    sc_wkb->add_option("--nr", n_r, "radial quantum number")->check(CLI::Range(0, 1000));
    sc_wkb->add_option("--l", l, "orbital angular momentum")->check(CLI::Range(0, 1000));
    sc_wkb->add_option("--j", j, "total angular momentum (half-odd)");
    sc_wkb->add_option("--tol", tol, "root-finder tolerance");

    CLI::App* sc_expand = app.add_subcommand("expand", "small-coupling expansion report");
    sc_expand->fallthrough();
    sc_expand->add_option("--model", model, "rel-schrodinger|dirac")
        ->check(CLI::IsMember({"rel-schrodinger", "dirac"}));
    sc_expand->add_option("--n", n_level, "principal quantum number")->check(CLI::Range(1, 100));
    sc_expand->add_option("--l", l, "orbital angular momentum")->check(CLI::Range(0, 99));
    sc_expand->add_option("--j", j, "total angular momentum (half-odd)");
    sc_expand->add_option("--orders", orders, "highest even power of mu");
    sc_expand->add_option("--mu", mu_flag, "coupling; default alpha*Z");
    sc_expand->add_option("--z", z, "nuclear charge")->check(CLI::Range(1, 1000000));

    CLI::App* sc_compare = app.add_subcommand("compare", "old / Dirac / spin-free level table");
    sc_compare->fallthrough();
    sc_compare->add_option("--z", z, "nuclear charge")->check(CLI::Range(1, 1000000));
    sc_compare->add_option("--nmax", nmax, "highest principal quantum number")
        ->check(CLI::Range(1, 50));

    CLI::App* sc_spiral = app.add_subcommand("spiral", "classical radiative decay of an orbit");
    sc_spiral->fallthrough();
    sc_spiral->add_option("--r-start", r_start, "initial radius in cm; default a0");
    sc_spiral->add_flag("--trajectory", trajectory, "emit (t, r) samples instead of the summary");
    sc_spiral->add_option("--points", points, "max trajectory rows (max 1e6)")
        ->check(CLI::Range(1, 1000000));
    sc_spiral->add_option("--tol", tol, "integrator relative tolerance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const PhysicalConstants k = resolve_constants(g);
        TableDocument doc;
        if (sc_constants->parsed()) {
            doc = cmd_constants(g, k);
        } else if (sc_bohr->parsed()) {
            doc = cmd_bohr(g, k, z, n1, n2);
        } else if (sc_spectrum->parsed()) {
            doc = cmd_spectrum(k, model, z, nmax, method, tol);
        } else if (sc_orbit->parsed()) {
            doc = cmd_orbit(g, k, z, n_r, ntheta, revolutions, points);
        } else if (sc_integral->parsed()) {
            doc = eccentricity >= 0.0 ? cmd_integral_eccentricity(eccentricity, quad_tol)
                                      : cmd_integral_abc(a, b, c, quad_tol);
        } else if (sc_wkb->parsed()) {
            doc = cmd_wkb(k, model, z, n_r, l, j, tol);
        } else if (sc_expand->parsed()) {
            doc = cmd_expand(k, model, n_level, l, j, mu_flag, z, orders);
        } else if (sc_compare->parsed()) {
            doc = cmd_compare(k, z, nmax);
        } else if (sc_spiral->parsed()) {
            doc = cmd_spiral(k, r_start > 0.0 ? r_start : bohr_radius(k), trajectory, points,
                             tol);
        }

        Json meta = make_meta(args, g, k);
        for (auto it = doc.meta.begin(); it != doc.meta.end(); ++it) meta[it.key()] = it.value();
        doc.meta = std::move(meta);

        const OutputFormat format = parse_format(g.format);
        if (!g.out_path.empty()) {
            std::ofstream file(g.out_path);
            if (!file) {
                err << "error: cannot open output file '" << g.out_path << "'\n";
                return 1;
            }
            emit(doc, format, file);
        } else {
            emit(doc, format, out);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace oldqm
