// Copyright 2026 The cglmp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cglmp/bell_operator.hpp"
#include "cglmp/probability.hpp"
#include "cglmp/spectral.hpp"
#include "cglmp/states.hpp"

namespace cglmp::cli {

namespace {

constexpr double kLowerBound = 2.0 * std::numbers::sqrt2 - 1e-9;
constexpr double kUpperBound = 4.0;

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

TableRow compute_row(int d, const TableOptions &options, std::ostream &log) {
    const auto start = std::chrono::steady_clock::now();
    TableRow row;
    row.d = d;
    const ReducedBellOperator op = reduced_bell_coefficients(d);
    row.i_app = bell_value_schmidt(app_state(d), op).value;
    row.i_mes = i_d_mes_closed(d).value;
    if (d <= options.eig_budget) {
        LanczosOptions lanczos;
        lanczos.tol = options.tol;
        lanczos.max_iter = options.max_iter;
        try {
            const EigenResult res = max_eigenpair(op, lanczos);
            row.i_eig = res.eigenvalue;
            row.residual = res.residual;
            row.iterations = res.iterations;
        } catch (const ConvergenceError &e) {
            row.converged = false;
            row.residual = e.best().residual;
            row.iterations = e.best().iterations;
            log << "warning: d=" << d << ": " << e.what() << '\n';
        }
    }
    if (options.timing) {
        row.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return row;
}

// Splits one CSV line; no quoting is used by the table format.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        out.push_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

template <class T>
T parse_field(std::string_view field, std::size_t line, const char *name) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("bad ") + name + " field '" + std::string(field) + "'");
    }
    return value;
}

template <class T>
std::optional<T> parse_optional(std::string_view field, std::size_t line, const char *name) {
    if (field.empty()) {
        return std::nullopt;
    }
    return parse_field<T>(field, line, name);
}

void add_check(std::vector<VerifyCheck> &checks, std::string name, double deviation, double tol) {
    checks.push_back({std::move(name), deviation, tol, std::isfinite(deviation) && deviation <= tol});
}

// Distance of v outside (kLowerBound, kUpperBound); 0 when inside.
double bound_violation(double v) {
    if (v <= kLowerBound) return kLowerBound - v + 1e-300;
    if (v >= kUpperBound) return v - kUpperBound + 1e-300;
    return 0.0;
}

} // namespace

std::vector<int> reference_grid() {
    std::vector<int> grid;
    for (int d = 2; d <= 10; ++d) grid.push_back(d);
    for (int d = 20; d <= 100; d += 10) grid.push_back(d);
    for (int d = 150; d <= 1000; d += 50) grid.push_back(d);
    for (int d = 1500; d <= 4000; d += 500) grid.push_back(d);
    for (int d : {5000, 6000, 7000, 8000, 50000, 70000, 80000, 90000, 100000}) grid.push_back(d);
    for (int d = 200000; d <= 600000; d += 100000) grid.push_back(d);
    return grid;
}

std::vector<TableRow> compute_table(std::span<const int> dims, const TableOptions &options,
                                    std::ostream &log) {
    std::vector<int> sorted(dims.begin(), dims.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int d : sorted) {
        if (d < 2) {
            throw InvalidDimension("table: d must be >= 2, got " + std::to_string(d));
        }
    }

    std::vector<TableRow> rows(sorted.size());
    std::vector<std::ostringstream> logs(sorted.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < sorted.size(); i = next++) {
            rows[i] = compute_row(sorted[i], options, logs[i]);
        }
    };
    const int jobs = std::clamp(options.jobs, 1, std::max<int>(1, static_cast<int>(sorted.size())));
    std::vector<std::jthread> pool;
    for (int t = 1; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    for (std::size_t i = 0; i < sorted.size(); ++i) {
        log << logs[i].str();
    }
    return rows;
}

void write_table_csv(std::ostream &out, std::span<const TableRow> rows) {
    out << kTableHeader << '\n';
    for (const auto &row : rows) {
        out << row.d << ',' << (row.i_eig ? format_number(*row.i_eig) : "") << ','
            << format_number(row.i_app) << ',' << format_number(row.i_mes) << ','
            << (row.residual ? format_number(*row.residual) : "") << ','
            << (row.iterations ? std::to_string(*row.iterations) : "") << ','
            << format_number(row.wall_ms) << '\n';
    }
}

std::vector<TableRow> read_table_csv(std::istream &in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw ParseError(1, "empty input, expected header");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kTableHeader) {
        throw ParseError(1, std::string("expected header '") + kTableHeader + "'");
    }
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 7) {
            throw ParseError(line_no, "expected 7 fields, got " + std::to_string(fields.size()));
        }
        TableRow row;
        row.d = parse_field<int>(fields[0], line_no, "d");
        if (row.d < 2) {
            throw ParseError(line_no, "d must be >= 2");
        }
        row.i_eig = parse_optional<double>(fields[1], line_no, "i_eig");
        row.i_app = parse_field<double>(fields[2], line_no, "i_app");
        row.i_mes = parse_field<double>(fields[3], line_no, "i_mes");
        row.residual = parse_optional<double>(fields[4], line_no, "residual");
        row.iterations = parse_optional<int>(fields[5], line_no, "iterations");
        row.wall_ms = parse_field<double>(fields[6], line_no, "wall_ms");
        row.converged = row.i_eig.has_value() || !row.residual.has_value();
        rows.push_back(row);
    }
    return rows;
}

std::vector<FitPoint> eig_points(std::span<const TableRow> rows) {
    std::vector<FitPoint> pts;
    for (const auto &row : rows) {
        if (row.i_eig) {
            pts.push_back({static_cast<double>(row.d), *row.i_eig});
        }
    }
    return pts;
}

std::vector<VerifyCheck> run_verify(const VerifyOptions &options) {
    const int dmax = options.d_max_oracle;
    if (dmax < 2 || dmax > kFullMatrixMaxDim) {
        throw DomainError("verify: d_max_oracle must lie in [2, " +
                          std::to_string(kFullMatrixMaxDim) + "], got " + std::to_string(dmax));
    }
    std::vector<VerifyCheck> checks;

    // Operator route as used by the spectral code, optionally sabotaged.
    auto operator_route = [&](int d) {
        const auto exact = reduced_bell_coefficients(d);
        std::vector<double> b(exact.coeffs().begin(), exact.coeffs().end());
        if (options.inject_fault) {
            b[1] += 1e-3;
        }
        return ReducedBellOperator(std::move(b));
    };

    {
        double dev = 0.0;
        for (int d = 2; d <= 256; ++d) {
            const auto a = reduced_bell_coefficients(d);
            const auto b = reduced_bell_coefficients_sinesum(d);
            for (int r = 0; r < d; ++r) dev = std::max(dev, std::abs(a[r] - b[r]));
        }
        add_check(checks, "coefficients: sine sum vs closed form (d<=256)", dev, 1e-12);
    }
    {
        double herm = 0.0, off_block = 0.0, block = 0.0;
        for (int d = 2; d <= dmax; ++d) {
            const auto full = full_bell_matrix(d);
            herm = std::max(herm, (full.entries() - full.entries().adjoint()).cwiseAbs().maxCoeff());
            for (int m = 0; m < d; ++m)
                for (int mp = 0; mp < d; ++mp)
                    for (int j = 0; j < d; ++j)
                        for (int jp = 0; jp < d; ++jp)
                            if (mod_d((j - m) - (jp - mp), d) != 0)
                                off_block = std::max(off_block, std::abs(full(m, mp, j, jp)));
            try {
                const auto first = extract_first_block(full);
                const auto closed = reduced_bell_coefficients(d);
                for (int r = 0; r < d; ++r) block = std::max(block, std::abs(first[r] - closed[r]));
            } catch (const StructureError &) {
                block = std::numeric_limits<double>::infinity();
            }
        }
        add_check(checks, "full operator: hermitian", herm, 1e-10);
        add_check(checks, "full operator: block diagonal", off_block, 1e-10);
        add_check(checks, "full operator: first block vs closed form", block, 1e-10);
    }
    {
        std::mt19937_64 rng(0xC61F);
        std::normal_distribution<double> gauss;
        double dev = 0.0;
        for (int d = 2; d <= dmax; ++d) {
            const auto op = operator_route(d);
            const auto settings = make_optimal_settings(d);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<double> a(d);
                double n2 = 0.0;
                for (double &x : a) {
                    x = gauss(rng);
                    n2 += x * x;
                }
                for (double &x : a) x /= std::sqrt(n2);
                const auto s = SchmidtState::unchecked(std::move(a));
                const double prob = bell_value_probabilistic(GeneralState::from_schmidt(s), settings).value;
                dev = std::max(dev, std::abs(prob - bell_value_schmidt(s, op).value));
            }
        }
        add_check(checks, "route equivalence: probabilities vs Schmidt form", dev, 1e-9);
    }
    {
        double dev = 0.0;
        for (int d : {2, 3, 4, 5, 7, 16, 64, 100, 257, 1000, 4096}) {
            dev = std::max(dev, std::abs(bell_value_schmidt(mes_state(d), operator_route(d)).value -
                                         i_d_mes_closed(d).value));
        }
        add_check(checks, "maximally entangled: closed form vs Schmidt form", dev, 1e-9);
    }
    {
        double eig_dev = 0.0, perron = 0.0, bounds = 0.0, monotone = 0.0, dominance = 0.0;
        double prev = 0.0;
        std::vector<int> dims;
        for (int d = 2; d <= dmax; ++d) dims.push_back(d);
        for (int d : {128, 256, 512})
            if (d > dmax) dims.push_back(d);
        for (int d : dims) {
            const auto op = reduced_bell_coefficients(d);
            const auto lanczos = max_eigenpair(op);
            const auto dense = dense_max_eigenpair(op);
            eig_dev = std::max(eig_dev, std::abs(lanczos.eigenvalue - dense.eigenvalue));
            const auto &v = lanczos.eigenvector;
            for (int j = 0; j < d; ++j) {
                if (!(v[j] > 0.0)) perron = std::numeric_limits<double>::infinity();
                perron = std::max(perron, std::abs(v[j] - v[d - 1 - j]));
            }
            const double app = bell_value_schmidt(app_state(d), op).value;
            const double mes = i_d_mes_closed(d).value;
            for (double x : {lanczos.eigenvalue, app, mes}) bounds = std::max(bounds, bound_violation(x));
            dominance = std::max(dominance, std::max(app, mes) - lanczos.eigenvalue);
            if (lanczos.eigenvalue <= prev) monotone = std::max(monotone, prev - lanczos.eigenvalue + 1e-300);
            prev = lanczos.eigenvalue;
        }
        add_check(checks, "eigenvalue: Lanczos vs dense", eig_dev, 1e-8);
        add_check(checks, "eigenvector: positive and symmetric", perron, 1e-8);
        add_check(checks, "bounds: values in (2 sqrt 2, 4)", bounds, 0.0);
        add_check(checks, "eigenvalue: strictly increasing in d", monotone, 0.0);
        add_check(checks, "eigenvalue: dominates mes and app values", std::max(dominance, 0.0), 1e-9);
    }
    {
        const double dev = std::abs(i_d_mes_limit(1'000'000).value - i_d_mes_closed(1'000'000).value);
        add_check(checks, "limit series vs closed form at d=1e6", dev, 1e-5);
    }
    return checks;
}

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Maximal violations of the CGLMP inequality for two qudits", "cglmp"};
    app.require_subcommand(1);

    TableOptions table_opts;
    std::vector<int> dims;
    bool reference = false;
    std::string table_out = "-";
    auto *table = app.add_subcommand("table", "Bell values of the eigenvector, approximate and maximally entangled states as CSV");
    table->add_option("--d", dims, "Dimensions, comma separated")->delimiter(',');
    table->add_flag("--reference-grid", reference, "Add the reference grid of dimensions (2..600000)");
    table->add_option("--tol", table_opts.tol, "Eigen residual tolerance")->check(CLI::PositiveNumber);
    table->add_option("--max-iter", table_opts.max_iter, "Operator applications per eigensolve")->check(CLI::Range(2, 1 << 30));
    table->add_option("--eig-budget", table_opts.eig_budget, "Largest d that gets an eigenvalue");
    table->add_option("--jobs", table_opts.jobs, "Rows computed concurrently")->check(CLI::Range(1, 1024));
    table->add_flag("--timing", table_opts.timing, "Fill wall_ms (output is then not reproducible)");
    table->add_option("--out", table_out, "Output file, - for stdout");

    VerifyOptions verify_opts;
    auto *verify = app.add_subcommand("verify", "Cross-check the probability, operator and spectral routes");
    verify->add_option("--d-max", verify_opts.d_max_oracle, "Largest d for the dense oracles (<= 64)");
    verify->add_flag("--inject-fault", verify_opts.inject_fault, "Test mode: perturb the operator route");

    std::string fit_in;
    auto *fit = app.add_subcommand("fit", "Fit I_eig(d) ~ A - B d^-p to a table CSV");
    fit->add_option("table", fit_in, "CSV written by 'table'")->required();

    std::int64_t terms = 1'000'000;
    std::vector<int> compare;
    auto *limit = app.add_subcommand("limit", "Large-d limit of the maximally entangled Bell value");
    limit->add_option("--terms", terms, "Series terms before the tail estimate")->check(CLI::PositiveNumber);
    limit->add_option("--compare", compare, "Also print the closed form at these d")->delimiter(',');

    int coeff_d = 0;
    std::string form = "closed";
    auto *coeffs = app.add_subcommand("coeffs", "Toeplitz coefficients B_r of the reduced operator");
    coeffs->add_option("--d", coeff_d, "Dimension")->required();
    coeffs->add_option("--form", form, "closed or sinesum")->check(CLI::IsMember({"closed", "sinesum"}));

    try {
        // CLI11 consumes a reversed argument vector.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsageError;
    }

    try {
        if (*table) {
            if (reference) {
                const auto grid = reference_grid();
                dims.insert(dims.end(), grid.begin(), grid.end());
            }
            const auto rows = compute_table(dims, table_opts, err);
            if (table_out == "-") {
                write_table_csv(out, rows);
            } else {
                std::ofstream file(table_out, std::ios::binary);
                if (!file) {
                    throw IoError("cannot open '" + table_out + "' for writing");
                }
                write_table_csv(file, rows);
                file.flush();
                if (!file) {
                    throw IoError("write to '" + table_out + "' failed");
                }
            }
            return kSuccess;
        }
        if (*verify) {
            const auto checks = run_verify(verify_opts);
            bool ok = true;
            for (const auto &c : checks) {
                out << (c.passed ? "PASS " : "FAIL ") << c.name << "  deviation=" << format_number(c.deviation)
                    << " tol=" << format_number(c.tolerance) << '\n';
                ok = ok && c.passed;
            }
            out << (ok ? "all checks passed" : "verification FAILED") << '\n';
            return ok ? kSuccess : kVerificationFailure;
        }
        if (*fit) {
            std::ifstream file(fit_in);
            if (!file) {
                throw IoError("cannot open '" + fit_in + "'");
            }
            const auto rows = read_table_csv(file);
            const auto pts = eig_points(rows);
            const FitModel model = fit_power_law(pts);
            nlohmann::ordered_json j;
            j["A"] = model.asymptote;
            j["B"] = model.amplitude;
            j["p"] = model.exponent;
            j["rms_residual"] = model.rms_residual;
            j["points"] = pts.size();
            out << j.dump(2) << '\n';
            return kSuccess;
        }
        if (*limit) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12f", i_d_mes_limit(terms).value);
            out << buf << '\n';
            for (int d : compare) {
                std::snprintf(buf, sizeof buf, "%.12f", i_d_mes_closed(d).value);
                out << "d=" << d << ' ' << buf << '\n';
            }
            return kSuccess;
        }
        if (*coeffs) {
            const auto op = form == "closed" ? reduced_bell_coefficients(coeff_d)
                                             : reduced_bell_coefficients_sinesum(coeff_d);
            out << "r,b_r\n";
            char buf[64];
            for (int r = 0; r < op.dim(); ++r) {
                std::snprintf(buf, sizeof buf, "%.17g", op[r]);
                out << r << ',' << buf << '\n';
            }
            return kSuccess;
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error &e) {
        // Preconditions: bad dimensions, too few fit points, oracle range.
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace cglmp::cli
