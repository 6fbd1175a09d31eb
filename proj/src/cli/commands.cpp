#include "diracbox/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "diracbox/box1d.hpp"
#include "diracbox/box3d.hpp"
#include "diracbox/cli/output.hpp"
#include "diracbox/dos.hpp"
#include "diracbox/error.hpp"
#include "diracbox/reference_levels.hpp"
#include "diracbox/spinor.hpp"

namespace diracbox::cli {

namespace {

constexpr double kVerifyThreshold = 1e-9;
constexpr int kChiDraws = 10;

struct Common {
    std::string format = "csv";
    std::string output;
};

struct BoxArgs {
    std::optional<double> cube;
    std::optional<double> lx, ly, lz;

    BoxGeometry geometry() const
    {
        if (cube) {
            if (lx || ly || lz) {
                throw CLI::ValidationError("--cube", "cannot be combined with --lx/--ly/--lz");
            }
            return BoxGeometry::cube(*cube);
        }
        if (!(lx && ly && lz)) {
            throw CLI::ValidationError("--lx/--ly/--lz", "give all three edges or use --cube");
        }
        return BoxGeometry({*lx, *ly, *lz});
    }
};

Cell real(double v) { return Cell{v}; }
Cell integer(std::int64_t v) { return Cell{v}; }
Cell text(std::string v) { return Cell{std::move(v)}; }

Format parse_format(const std::string& name) { return name == "json" ? Format::Json : Format::Csv; }

void add_common(CLI::App* cmd, Common& common)
{
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", common.output, "Write to this path instead of standard output");
}

void add_box(CLI::App* cmd, BoxArgs& box)
{
    cmd->add_option("--cube", box.cube, "Cubic box edge L/L_C")->check(CLI::PositiveNumber);
    cmd->add_option("--lx", box.lx, "Edge along x in Compton wavelengths")->check(CLI::PositiveNumber);
    cmd->add_option("--ly", box.ly, "Edge along y in Compton wavelengths")->check(CLI::PositiveNumber);
    cmd->add_option("--lz", box.lz, "Edge along z in Compton wavelengths")->check(CLI::PositiveNumber);
}

QuantumNumbers parse_qn(const std::string& text)
{
    std::array<int, 3> n{};
    std::stringstream in(text);
    std::string item;
    int count = 0;
    while (std::getline(in, item, ',')) {
        if (count == 3) {
            throw CLI::ValidationError("--qn", "expected three comma-separated integers");
        }
        try {
            std::size_t used = 0;
            n[static_cast<std::size_t>(count)] = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw CLI::ValidationError("--qn", "not an integer: '" + item + "'");
        }
        ++count;
    }
    if (count != 3) {
        throw CLI::ValidationError("--qn", "expected three comma-separated integers");
    }
    for (int v : n) {
        if (v < 1) {
            throw CLI::ValidationError("--qn", "quantum numbers must be >= 1");
        }
    }
    return QuantumNumbers(n);
}

// Emits to --output or the given stream.
int emit(const Common& common, const RowSet& rows, std::ostream& out, std::ostream& err)
{
    const Format format = parse_format(common.format);
    if (common.output.empty()) {
        write(out, rows, format);
        return kExitOk;
    }
    std::ofstream file(common.output, std::ios::binary);
    if (!file) {
        err << "error: cannot open --output path '" << common.output << "'\n";
        return kExitUsage;
    }
    write(file, rows, format);
    return kExitOk;
}

void box_params(RowSet& rows, const BoxGeometry& g)
{
    rows.params.emplace_back("lx", real(g[0]));
    rows.params.emplace_back("ly", real(g[1]));
    rows.params.emplace_back("lz", real(g[2]));
}

// ---------------------------------------------------------------------------
// solve1d

struct Solve1DArgs {
    Common common;
    double lambda = 0.0;
    int n_max = 1;
    double tol = 1e-12;
};

int cmd_solve1d(const Solve1DArgs& a, std::ostream& out, std::ostream& err)
{
    RowSet rows;
    rows.params = {{"lambda", real(a.lambda)}, {"n_max", integer(a.n_max)}, {"tol", real(a.tol)}};
    rows.columns = {"lambda", "n_max", "tol", "n", "x", "x_over_pi", "u", "epsilon", "residual", "status"};

    BisectOptions options;
    options.tol_x = a.tol;
    int code = kExitOk;
    for (int n = 1; n <= a.n_max; ++n) {
        try {
            const Mode1D m = solve_1d_mode(a.lambda, n, options);
            rows.add_row({real(a.lambda), integer(a.n_max), real(a.tol), integer(n), real(m.x), real(m.x / pi),
                          real(m.u), real(m.epsilon), real(m.residual), text("ok")});
        } catch (const SolverError& e) {
            err << "error: " << e.what() << '\n';
            rows.add_row({real(a.lambda), integer(a.n_max), real(a.tol), integer(n), {}, {}, {}, {}, {},
                          text("failed")});
            code = kExitNumerical;
            break;
        }
    }
    const int io = emit(a.common, rows, out, err);
    return io != kExitOk ? io : code;
}

// ---------------------------------------------------------------------------
// solve3d

struct Solve3DArgs {
    Common common;
    BoxArgs box;
    std::string qn;
    int n_max = 0;
    double tol = 1e-10;
};

std::vector<Cell> mode_row(const BoxGeometry& g, double tol, const ModeSolution& s, std::optional<int> level,
                           std::optional<int> degeneracy)
{
    return {real(g[0]),
            real(g[1]),
            real(g[2]),
            real(tol),
            integer(s.qn[0]),
            integer(s.qn[1]),
            integer(s.qn[2]),
            real(s.phase(0) / pi),
            real(s.phase(1) / pi),
            real(s.phase(2) / pi),
            real(s.epsilon),
            level ? integer(*level) : Cell{},
            degeneracy ? integer(*degeneracy) : Cell{},
            real(s.residuals[0]),
            real(s.residuals[1]),
            real(s.residuals[2]),
            integer(s.sweeps),
            text("ok")};
}

int cmd_solve3d(const Solve3DArgs& a, std::ostream& out, std::ostream& err)
{
    const BoxGeometry g = a.box.geometry();
    const bool single = !a.qn.empty();
    if (single == (a.n_max > 0)) {
        throw CLI::ValidationError("--qn/--n-max", "give exactly one of --qn or --n-max");
    }
    SweepOptions options;
    options.tol = a.tol;

    RowSet rows;
    box_params(rows, g);
    rows.params.emplace_back("tol", real(a.tol));
    rows.columns = {"lx",  "ly",         "lz",       "tol",         "n1",        "n2",
                    "n3",  "x1_over_pi", "x2_over_pi", "x3_over_pi", "epsilon",   "level",
                    "degeneracy", "residual1", "residual2", "residual3", "sweeps", "status"};

    int code = kExitOk;
    try {
        if (single) {
            const QuantumNumbers qn = parse_qn(a.qn);
            rows.params.emplace_back("qn", text(a.qn));
            rows.add_row(mode_row(g, a.tol, solve_mode(g, qn, options), std::nullopt, std::nullopt));
        } else {
            rows.params.emplace_back("n_max", integer(a.n_max));
            const LevelTable table = enumerate_spectrum(g, a.n_max, options);
            int index = 0;
            for (const auto& level : table.levels) {
                ++index;
                for (const auto& member : level.members) {
                    rows.add_row(mode_row(g, a.tol, member, index, level.degeneracy));
                }
            }
        }
    } catch (const SolverError& e) {
        err << "error: " << e.what() << '\n';
        std::vector<Cell> row(rows.columns.size());
        row[0] = real(g[0]);
        row[1] = real(g[1]);
        row[2] = real(g[2]);
        row[3] = real(a.tol);
        row.back() = text("failed");
        rows.add_row(std::move(row));
        code = kExitNumerical;
    }
    const int io = emit(a.common, rows, out, err);
    return io != kExitOk ? io : code;
}

// ---------------------------------------------------------------------------
// table1

int cmd_table1(const Common& common, std::ostream& out, std::ostream& err)
{
    RowSet rows;
    rows.params = {{"phase_tolerance", real(kReferencePhaseTolerance)},
                   {"energy_tolerance", real(kReferenceEnergyTolerance)}};
    rows.columns = {"n1",          "n2",          "n3",          "degeneracy",  "lambda",
                    "x1_over_pi",  "x2_over_pi",  "x3_over_pi",  "epsilon",     "ref_x1_over_pi",
                    "ref_x2_over_pi", "ref_x3_over_pi", "ref_epsilon", "max_abs_dev_x_over_pi",
                    "rel_dev_epsilon", "status"};

    int code = kExitOk;
    for (const auto& ref : kReferenceLevels) {
        // Printed data must be self-consistent before it is used as a target.
        WaveVector printed;
        for (int l = 0; l < 3; ++l) {
            printed.u[l] = ref.phase_over_pi[l] * pi / ref.lambda;
        }
        if (std::abs(dispersion(printed) / ref.epsilon - 1.0) > kReferenceSelfCheckTolerance) {
            err << "error: reference row for lambda " << ref.lambda << " fails the dispersion self-check\n";
            code = kExitNumerical;
        }
    }

    const SweepOptions options;
    for (const auto& ref : kReferenceLevels) {
        const BoxGeometry g = BoxGeometry::cube(ref.lambda);
        const QuantumNumbers qn(ref.qn);
        std::vector<Cell> row{integer(qn[0]), integer(qn[1]), integer(qn[2]), integer(ref.degeneracy),
                              real(ref.lambda)};
        try {
            const ModeSolution s = solve_mode(g, qn, options);
            double dev_x = 0.0;
            for (int l = 0; l < 3; ++l) {
                row.push_back(real(s.phase(l) / pi));
                dev_x = std::max(dev_x, std::abs(s.phase(l) / pi - ref.phase_over_pi[l]));
            }
            const double dev_e = std::abs(s.epsilon / ref.epsilon - 1.0);
            const bool ok = dev_x <= kReferencePhaseTolerance && dev_e <= kReferenceEnergyTolerance;
            row.push_back(real(s.epsilon));
            for (double v : ref.phase_over_pi) {
                row.push_back(real(v));
            }
            row.push_back(real(ref.epsilon));
            row.push_back(real(dev_x));
            row.push_back(real(dev_e));
            row.push_back(text(ok ? "ok" : "deviation"));
            if (!ok) {
                code = kExitNumerical;
            }
        } catch (const SolverError& e) {
            err << "error: " << e.what() << '\n';
            row.resize(rows.columns.size() - 1);
            row.push_back(text("failed"));
            code = kExitNumerical;
        }
        rows.add_row(std::move(row));
    }
    const int io = emit(common, rows, out, err);
    return io != kExitOk ? io : code;
}

// ---------------------------------------------------------------------------
// fig-data

struct FigArgs {
    Common common;
    std::string which;
    std::vector<double> ratios{10.0, 1.0, 0.1};
    std::vector<double> cubes{0.1, 1.0, 10.0};
    int points = 2000;
    double x_max = 2.0 * pi;
};

int cmd_fig1(const FigArgs& a, std::ostream& out, std::ostream& err)
{
    constexpr double kClip = 20.0;
    constexpr double kAsymptoteGap = 1e-3;
    RowSet rows;
    rows.params = {{"figure", text("fig1")}, {"points", integer(a.points)}, {"x_max", real(a.x_max)}};
    rows.columns = {"ratio", "x", "tan_x", "line"};
    for (double ratio : a.ratios) {
        for (int i = 1; i <= a.points; ++i) {
            const double x = a.x_max * i / a.points;
            const double offset = x / pi - 0.5;
            if (std::abs(offset - std::round(offset)) * pi < kAsymptoteGap) {
                continue;
            }
            const double t = std::clamp(std::tan(x), -kClip, kClip);
            rows.add_row({real(ratio), real(x), real(t), real(-x * ratio)});
        }
    }
    return emit(a.common, rows, out, err);
}

int cmd_fig2(const FigArgs& a, std::ostream& out, std::ostream& err)
{
    RowSet rows;
    rows.params = {{"figure", text("fig2")}, {"n_max", integer(3)}};
    rows.columns = {"lambda", "solution", "level", "n1", "n2", "n3", "epsilon", "log10_kinetic", "degeneracy"};
    int code = kExitOk;
    for (double lambda : a.cubes) {
        try {
            const LevelTable table = enumerate_spectrum(BoxGeometry::cube(lambda), 3);
            int solution = 0;
            int index = 0;
            for (const auto& level : table.levels) {
                ++index;
                for (const auto& m : level.members) {
                    rows.add_row({real(lambda), integer(++solution), integer(index), integer(m.qn[0]),
                                  integer(m.qn[1]), integer(m.qn[2]), real(m.epsilon),
                                  real(std::log10(m.kinetic)), integer(level.degeneracy)});
                }
            }
        } catch (const SolverError& e) {
            err << "error: " << e.what() << '\n';
            code = kExitNumerical;
        }
    }
    const int io = emit(a.common, rows, out, err);
    return io != kExitOk ? io : code;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    Common common;
    BoxArgs box;
    std::string qn = "1,1,1";
    int samples = 0;
    std::uint64_t seed = 0;
    bool break_coeffs = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    const BoxGeometry g = a.box.geometry();
    const QuantumNumbers qn = parse_qn(a.qn);

    ModeSolution mode;
    try {
        mode = solve_mode(g, qn);
    } catch (const SolverError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }

    std::mt19937_64 rng(a.seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    std::vector<Spinor2> chis{default_chi()};
    for (int i = 0; i < kChiDraws; ++i) {
        Spinor2 chi(Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng)));
        chis.push_back(chi / chi.norm());
    }

    std::vector<std::pair<double, double>> in_face;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            in_face.emplace_back(i / 4.0, j / 4.0);
        }
    }
    in_face.emplace_back(0.5, 0.5);
    for (int i = 0; i < a.samples; ++i) {
        const double s = uniform(rng);
        in_face.emplace_back(s, uniform(rng));
    }

    std::vector<SpinorField> fields;
    for (const auto& chi : chis) {
        SpinorField field = build_field(mode, chi);
        if (a.break_coeffs) {
            CoefficientSet broken = field.coefficients();
            for (auto& c : broken.C) {
                c = -c;
            }
            field = SpinorField(mode, broken, chi);
        }
        fields.push_back(std::move(field));
    }

    RowSet rows;
    box_params(rows, g);
    rows.params.emplace_back("qn", text(a.qn));
    rows.params.emplace_back("samples", integer(a.samples));
    rows.params.emplace_back("seed", integer(static_cast<std::int64_t>(a.seed)));
    rows.params.emplace_back("break_coeffs", integer(a.break_coeffs ? 1 : 0));
    rows.columns = {"lx",          "ly",     "lz",     "n1",
                    "n2",          "n3",     "seed",   "samples",
                    "face",        "points", "max_mit_residual", "max_reduced_residual",
                    "max_normal_current", "status"};

    auto base_row = [&](std::string face, std::int64_t points) {
        return std::vector<Cell>{real(g[0]), real(g[1]), real(g[2]), integer(qn[0]), integer(qn[1]),
                                 integer(qn[2]), integer(static_cast<std::int64_t>(a.seed)), integer(a.samples),
                                 text(std::move(face)), integer(points)};
    };

    double worst_mit = 0.0;
    double worst_reduced = 0.0;
    double worst_current = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        for (bool far : {false, true}) {
            const Face face{axis, far};
            double mit = 0.0;
            double reduced = 0.0;
            double current = 0.0;
            for (const auto& field : fields) {
                for (const auto& [s, t] : in_face) {
                    const Point p = face_point(g, face, s, t);
                    const double norm = field(p).norm();
                    mit = std::max(mit, mit_residual(field, face, p) / norm);
                    reduced = std::max(reduced, mit_reduced_residual(field, face, p) / norm);
                    const auto j = dirac_current(field, p);
                    current = std::max(current, std::abs(j[static_cast<std::size_t>(axis) + 1]) / j[0]);
                }
            }
            worst_mit = std::max(worst_mit, mit);
            worst_reduced = std::max(worst_reduced, reduced);
            worst_current = std::max(worst_current, current);
            const bool ok = mit <= kVerifyThreshold && current <= kVerifyThreshold;
            auto row = base_row(std::string(1, "xyz"[axis]) + (far ? "=L" : "=0"),
                                static_cast<std::int64_t>(in_face.size() * fields.size()));
            row.push_back(real(mit));
            row.push_back(real(reduced));
            row.push_back(real(current));
            row.push_back(text(ok ? "ok" : "violated"));
            rows.add_row(std::move(row));
        }
    }
    const bool ok = worst_mit <= kVerifyThreshold && worst_current <= kVerifyThreshold;
    auto summary = base_row("all", static_cast<std::int64_t>(6 * in_face.size() * fields.size()));
    summary.push_back(real(worst_mit));
    summary.push_back(real(worst_reduced));
    summary.push_back(real(worst_current));
    summary.push_back(text(ok ? "ok" : "violated"));
    rows.add_row(std::move(summary));

    const int io = emit(a.common, rows, out, err);
    if (io != kExitOk) {
        return io;
    }
    return ok ? kExitOk : kExitNumerical;
}

// ---------------------------------------------------------------------------
// dos

struct DosArgs {
    Common common;
    std::vector<double> lambdas;
    int n_max = 10;
};

int cmd_dos(const DosArgs& a, std::ostream& out, std::ostream& err)
{
    RowSet rows;
    rows.params.emplace_back("n_max", integer(a.n_max));
    for (double l : a.lambdas) {
        rows.params.emplace_back("lambda", real(l));
    }
    rows.columns = {"section",    "lambda",     "n_max",      "index",   "n1",         "n2",
                    "n3",         "degeneracy", "x1_over_pi", "x2_over_pi", "x3_over_pi", "epsilon",
                    "epsilon_nr", "spacing",    "count_rel",  "count_nr"};

    int code = kExitOk;
    for (double lambda : a.lambdas) {
        auto row = [&](const char* section, std::int64_t index) {
            std::vector<Cell> r(rows.columns.size());
            r[0] = text(section);
            r[1] = real(lambda);
            r[2] = integer(a.n_max);
            r[3] = integer(index);
            return r;
        };
        try {
            if (a.n_max >= 2) {
                const auto spacing = spacing_series(lambda, a.n_max);
                for (std::size_t i = 0; i < spacing.size(); ++i) {
                    auto r = row("spacing", static_cast<std::int64_t>(i + 1));
                    r[13] = real(spacing[i]);
                    rows.add_row(std::move(r));
                }
            }
            const NrComparison cmp = nr_comparison(BoxGeometry::cube(lambda), a.n_max);
            std::int64_t index = 0;
            for (const auto& pair : cmp.pairs) {
                auto r = row("level", ++index);
                r[4] = integer(pair.qn[0]);
                r[5] = integer(pair.qn[1]);
                r[6] = integer(pair.qn[2]);
                r[7] = integer(pair.degeneracy);
                r[8] = real(pair.phase_over_pi[0]);
                r[9] = real(pair.phase_over_pi[1]);
                r[10] = real(pair.phase_over_pi[2]);
                r[11] = real(pair.epsilon_rel);
                r[12] = real(pair.epsilon_nr);
                rows.add_row(std::move(r));
            }
            index = 0;
            for (const auto& t : cmp.thresholds) {
                auto r = row("count", ++index);
                r[11] = real(t.epsilon);
                r[14] = integer(t.count_rel);
                r[15] = integer(t.count_nr);
                rows.add_row(std::move(r));
            }
        } catch (const SolverError& e) {
            err << "error: " << e.what() << '\n';
            auto r = row("failed", 0);
            rows.add_row(std::move(r));
            code = kExitNumerical;
        }
    }
    const int io = emit(a.common, rows, out, err);
    return io != kExitOk ? io : code;
}

void apply_thread_cap()
{
    const char* env = std::getenv("DIRACBOX_THREADS");
    if (env == nullptr) {
        return;
    }
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) {
        omp_set_num_threads(static_cast<int>(n));
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bound states of a Dirac particle in a 1-D or 3-D MIT bag box", "diracbox"};
    app.require_subcommand(1);

    Solve1DArgs s1;
    auto* solve1d = app.add_subcommand("solve1d", "Levels of the 1-D bag");
    solve1d->add_option("--lambda", s1.lambda, "Box length L/L_C")->required()->check(CLI::PositiveNumber);
    solve1d->add_option("--n-max", s1.n_max, "Highest branch")->check(CLI::Range(1, 100000));
    solve1d->add_option("--tol", s1.tol, "Bisection width tolerance")->check(CLI::PositiveNumber);
    add_common(solve1d, s1.common);

    Solve3DArgs s3;
    auto* solve3d = app.add_subcommand("solve3d", "Modes of the 3-D bag");
    add_box(solve3d, s3.box);
    solve3d->add_option("--qn", s3.qn, "Quantum numbers n1,n2,n3");
    solve3d->add_option("--n-max", s3.n_max, "Enumerate all triples up to n_max")->check(CLI::Range(1, 200));
    solve3d->add_option("--tol", s3.tol, "Sweep tolerance on k_l L_l")->check(CLI::PositiveNumber);
    add_common(solve3d, s3.common);

    Common t1;
    auto* table1 = app.add_subcommand("table1", "Reproduce the published cubic-box levels");
    add_common(table1, t1);

    FigArgs fig;
    auto* figdata = app.add_subcommand("fig-data", "Data behind the graphical solution and spectrum figures");
    figdata->add_option("which", fig.which, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
    figdata->add_option("--ratios", fig.ratios, "L_C/L values for fig1")->delimiter(',')->check(CLI::PositiveNumber);
    figdata->add_option("--cube", fig.cubes, "Cubic edges L/L_C for fig2")->delimiter(',')->check(CLI::PositiveNumber);
    figdata->add_option("--points", fig.points, "Grid points for fig1")->check(CLI::Range(2, 10000000));
    figdata->add_option("--x-max", fig.x_max, "Upper end of the fig1 grid")->check(CLI::PositiveNumber);
    add_common(figdata, fig.common);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check wall conditions and outward current of a mode");
    add_box(verify, ver.box);
    verify->add_option("--qn", ver.qn, "Quantum numbers n1,n2,n3");
    verify->add_option("--samples", ver.samples, "Extra random points per face")->check(CLI::Range(0, 1000000));
    verify->add_option("--seed", ver.seed, "Seed for chi draws and face samples");
    verify->add_flag("--break-coeffs", ver.break_coeffs, "Negate every C_l (debug mutation)");
    add_common(verify, ver.common);

    DosArgs dos;
    auto* dos_cmd = app.add_subcommand("dos", "Level spacing, cumulative counts and NR comparison");
    dos_cmd->add_option("--lambda", dos.lambdas, "Box edges L/L_C")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    dos_cmd->add_option("--n-max", dos.n_max, "Highest branch / quantum number")->check(CLI::Range(1, 60));
    add_common(dos_cmd, dos.common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    apply_thread_cap();

    try {
        if (*solve1d) {
            return cmd_solve1d(s1, out, err);
        }
        if (*solve3d) {
            return cmd_solve3d(s3, out, err);
        }
        if (*table1) {
            return cmd_table1(t1, out, err);
        }
        if (*figdata) {
            return fig.which == "fig1" ? cmd_fig1(fig, out, err) : cmd_fig2(fig, out, err);
        }
        if (*verify) {
            return cmd_verify(ver, out, err);
        }
        if (*dos_cmd) {
            return cmd_dos(dos, out, err);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const SolverError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

} // namespace diracbox::cli
