// Command-line front end: reproducible experiments over the library modules.
// Every file-writing run records a manifest next to its first output; `replay`
// re-executes a manifest and reproduces the outputs byte for byte.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbp/census.hpp"
#include "gbp/distribution.hpp"
#include "gbp/instance.hpp"
#include "gbp/polynomial.hpp"
#include "gbp/prob_table.hpp"
#include "gbp/version.hpp"
#include "gbp/wagner.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_manifest(const std::string& subcommand, const ordered_json& parameters,
                    const std::vector<std::string>& outputs) {
    if (outputs.empty()) return;
    ordered_json m;
    m["tool"] = "gbp";
    m["version"] = gbp::kVersion;
    m["subcommand"] = subcommand;
    m["parameters"] = parameters;
    m["outputs"] = outputs;
    write_file(outputs.front() + ".manifest.json", m.dump(2) + "\n");
}

gbp::RingContext ring_from(std::optional<int> m, std::optional<std::int64_t> modulus) {
    if (m && modulus) throw CLI::ValidationError("give either --m or --M, not both");
    if (m) return gbp::RingContext::dyadic(*m);
    if (modulus) return gbp::RingContext(*modulus);
    throw CLI::ValidationError("one of --m or --M is required");
}

// ---------------------------------------------------------------------------
// gen

struct GenParams {
    int L = 0, N = 0;
    std::optional<int> m;
    std::optional<std::int64_t> M;
    std::uint64_t seed = 0;
    std::string out;
};

void run_gen(const GenParams& p) {
    gbp::Instance inst = gbp::sample_instance(p.L, p.N, ring_from(p.m, p.M), p.seed);
    std::ostringstream buffer;
    gbp::store_instance(inst, buffer);
    write_file(p.out, buffer.str());

    ordered_json params{{"L", p.L}, {"N", p.N}, {"seed", p.seed}, {"out", p.out}};
    if (p.m) params["m"] = *p.m;
    if (p.M) params["M"] = *p.M;
    write_manifest("gen", params, {p.out});
}

// ---------------------------------------------------------------------------
// census

struct CensusParams {
    std::string in;
    std::string out;
};

void run_census(const CensusParams& p) {
    gbp::Instance inst = gbp::load_instance(p.in);
    gbp::Census c = gbp::census(inst);
    std::ostringstream csv;
    csv << "b,V_b\n";
    for (std::int64_t b = inst.ring.window_min(); b <= inst.ring.window_max(); ++b)
        csv << b << ',' << gbp::to_string(c.at(gbp::Residue{b})) << '\n';
    write_file(p.out, csv.str());
    std::cout << "V0=" << gbp::to_string(c.zero_count()) << "\n";

    write_manifest("census", ordered_json{{"in", p.in}, {"out", p.out}}, {p.out});
}

// ---------------------------------------------------------------------------
// wagner

struct WagnerParams {
    std::string in;
    bool list = false;
    std::uint64_t cap = 1000;
    std::string out;
};

void run_wagner(const WagnerParams& p) {
    gbp::Instance inst = gbp::load_instance(p.in);
    gbp::u128 w = gbp::count_wagner(inst);
    gbp::u128 v0 = gbp::count_zero(inst);
    std::cout << "V0=" << gbp::to_string(v0) << " W=" << gbp::to_string(w) << "\n";

    std::vector<std::string> outputs;
    if (p.list) {
        if (p.out.empty()) throw CLI::ValidationError("--list needs --out for the CSV");
        gbp::SolutionList sols = gbp::list_wagner_solutions(inst, p.cap);
        std::ostringstream csv;
        for (int j = 1; j <= inst.cols; ++j) csv << (j > 1 ? "," : "") << "i_" << j;
        csv << '\n';
        for (const auto& sol : sols.solutions) {
            for (std::size_t j = 0; j < sol.size(); ++j) csv << (j > 0 ? "," : "") << sol[j];
            csv << '\n';
        }
        write_file(p.out, csv.str());
        outputs.push_back(p.out);
        if (sols.truncated) std::cerr << "list truncated at cap=" << p.cap << "\n";
    }

    ordered_json params{{"in", p.in}, {"list", p.list}, {"cap", p.cap}};
    if (!p.out.empty()) params["out"] = p.out;
    write_manifest("wagner", params, outputs);
}

// ---------------------------------------------------------------------------
// ratio

struct RatioParams {
    int n = 0, m = 0;
    bool exact = false;
    std::string out;
    std::string dump_table;
};

void run_ratio(const RatioParams& p) {
    std::ostringstream row;
    row << "n,m,R_nm\n" << p.n << ',' << p.m << ',';
    if (p.exact) {
        gbp::ExactLimits limits{std::max(4, p.n), std::max(10, p.m)};
        row << gbp::to_fraction_string(gbp::detection_ratio_exact(p.n, p.m, limits));
    } else {
        row << fmt12(gbp::detection_ratio(p.n, p.m));
    }
    row << '\n';

    std::vector<std::string> outputs;
    if (!p.out.empty()) {
        write_file(p.out, row.str());
        outputs.push_back(p.out);
    } else {
        std::cout << row.str();
    }
    if (!p.dump_table.empty()) {
        std::ostringstream csv;
        if (p.exact) {
            auto table = gbp::frontier_table<gbp::Rational>(p.m);
            gbp::write_table_csv(csv, table);
            for (int i = 2; i <= p.n; ++i) {
                table = gbp::step_table(table);
                gbp::write_table_csv(csv, table);
            }
        } else {
            auto table = gbp::frontier_table<double>(p.m);
            gbp::write_table_csv(csv, table);
            for (int i = 2; i <= p.n; ++i) {
                table = gbp::step_table(table);
                gbp::write_table_csv(csv, table);
            }
        }
        write_file(p.dump_table, csv.str());
        outputs.push_back(p.dump_table);
    }
    ordered_json params{{"n", p.n}, {"m", p.m}, {"exact", p.exact}};
    if (!p.out.empty()) params["out"] = p.out;
    if (!p.dump_table.empty()) params["dump-table"] = p.dump_table;
    write_manifest("ratio", params, outputs);
}

// ---------------------------------------------------------------------------
// limit

struct LimitParams {
    int n = 0;
    std::string out;
    std::string coeffs;
};

void run_limit(const LimitParams& p) {
    gbp::Rational phi0 = gbp::limit_constant(p.n);
    std::ostringstream row;
    row << "n,phi0_num,phi0_den,phi0\n"
        << p.n << ',' << gbp::numerator(phi0).str() << ',' << gbp::denominator(phi0).str() << ','
        << fmt12(gbp::to_double(phi0)) << '\n';

    std::vector<std::string> outputs;
    if (!p.out.empty()) {
        write_file(p.out, row.str());
        outputs.push_back(p.out);
    } else {
        std::cout << row.str();
    }
    if (!p.coeffs.empty()) {
        std::ostringstream csv;
        csv << "k,num,den\n";
        const gbp::Polynomial& poly = gbp::limit_polynomial(p.n);
        for (std::size_t k = 0; k < poly.coefficients().size(); ++k) {
            const gbp::Rational& c = poly.coefficients()[k];
            csv << k << ',' << gbp::numerator(c).str() << ',' << gbp::denominator(c).str() << '\n';
        }
        write_file(p.coeffs, csv.str());
        outputs.push_back(p.coeffs);
    }
    ordered_json params{{"n", p.n}};
    if (!p.out.empty()) params["out"] = p.out;
    if (!p.coeffs.empty()) params["coeffs"] = p.coeffs;
    write_manifest("limit", params, outputs);
}

// ---------------------------------------------------------------------------
// figure2

struct FigureParams {
    std::string n_list = "2,3,4";
    int m_max = 14;
    std::string out_csv;
    std::string out_svg;
};

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int n = std::stoi(item);
        if (n < 2) throw CLI::ValidationError("--n-list entries must be >= 2");
        out.push_back(n);
    }
    if (out.empty()) throw CLI::ValidationError("--n-list must not be empty");
    return out;
}

struct Curve {
    int n;
    std::vector<int> ms;
    std::vector<double> ratios;
    double limit;
};

std::string render_figure_svg(const std::vector<Curve>& curves, int m_max);

void run_figure2(const FigureParams& p) {
    std::vector<int> ns = parse_n_list(p.n_list);
    if (p.m_max > gbp::kFloatModeMaxM)
        throw CLI::ValidationError("--m-max beyond the float-mode cap of " +
                                   std::to_string(gbp::kFloatModeMaxM));

    std::vector<Curve> curves;
    std::ostringstream csv;
    csv << "n,m,R_nm,phi_n0\n";
    for (int n : ns) {
        Curve curve;
        curve.n = n;
        curve.limit = gbp::to_double(gbp::limit_constant(n));
        for (int m = n + 1; m <= p.m_max; ++m) {
            double r = gbp::detection_ratio(n, m);
            curve.ms.push_back(m);
            curve.ratios.push_back(r);
            csv << n << ',' << m << ',' << fmt12(r) << ',' << fmt12(curve.limit) << '\n';
        }
        if (curve.ms.empty())
            throw CLI::ValidationError("no m values for n=" + std::to_string(n) +
                                       "; raise --m-max");
        curves.push_back(std::move(curve));
    }
    write_file(p.out_csv, csv.str());
    write_file(p.out_svg, render_figure_svg(curves, p.m_max));

    ordered_json params{{"n-list", p.n_list},
                        {"m-max", p.m_max},
                        {"out-csv", p.out_csv},
                        {"out-svg", p.out_svg}};
    write_manifest("figure2", params, {p.out_csv, p.out_svg});
}

std::string render_figure_svg(const std::vector<Curve>& curves, int m_max) {
    const double width = 800, height = 600;
    const double left = 80, right = 640, top = 40, bottom = 540;
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};

    int m_min = m_max;
    double log_min = 0.0;
    for (const Curve& c : curves) {
        m_min = std::min(m_min, c.ms.front());
        for (double r : c.ratios) log_min = std::min(log_min, std::log10(r));
        log_min = std::min(log_min, std::log10(c.limit));
    }
    double y_lo = std::floor(log_min) - 0.2, y_hi = 0.2;

    auto sx = [&](double m) {
        return left + (right - left) * (m - m_min) / std::max(1.0, double(m_max - m_min));
    };
    auto sy = [&](double log_r) { return bottom - (bottom - top) * (log_r - y_lo) / (y_hi - y_lo); };
    auto coord = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
        << "\" font-family=\"sans-serif\" font-size=\"14\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(bottom) << "\" x2=\""
        << coord(right) << "\" y2=\"" << coord(bottom) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(top) << "\" x2=\"" << coord(left)
        << "\" y2=\"" << coord(bottom) << "\" stroke=\"black\"/>\n";

    for (int m = m_min; m <= m_max; ++m) {
        double x = sx(m);
        svg << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(bottom) << "\" x2=\"" << coord(x)
            << "\" y2=\"" << coord(bottom + 6) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(x) << "\" y=\"" << coord(bottom + 22)
            << "\" text-anchor=\"middle\">" << m << "</text>\n";
    }
    for (int e = static_cast<int>(std::ceil(y_lo)); e <= 0; ++e) {
        double y = sy(e);
        svg << "<line x1=\"" << coord(left - 6) << "\" y1=\"" << coord(y) << "\" x2=\""
            << coord(left) << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << coord(left - 10) << "\" y=\"" << coord(y + 5)
            << "\" text-anchor=\"end\">1e" << e << "</text>\n";
    }
    svg << "<text x=\"" << coord((left + right) / 2) << "\" y=\"" << coord(bottom + 45)
        << "\" text-anchor=\"middle\">m</text>\n";
    svg << "<text x=\"20\" y=\"" << coord((top + bottom) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << coord((top + bottom) / 2)
        << ")\">R_nm</text>\n";

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const Curve& c = curves[i];
        const char* color = kColors[i % 6];
        // dotted limit line
        double ly = sy(std::log10(c.limit));
        svg << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(ly) << "\" x2=\""
            << coord(right) << "\" y2=\"" << coord(ly) << "\" stroke=\"" << color
            << "\" stroke-dasharray=\"2 6\" stroke-width=\"1.5\"/>\n";
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < c.ms.size(); ++k) {
            if (k > 0) svg << ' ';
            svg << coord(sx(c.ms[k])) << ',' << coord(sy(std::log10(c.ratios[k])));
        }
        svg << "\"/>\n";
        // markers
        for (std::size_t k = 0; k < c.ms.size(); ++k)
            svg << "<circle cx=\"" << coord(sx(c.ms[k])) << "\" cy=\""
                << coord(sy(std::log10(c.ratios[k]))) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        // legend
        double leg_y = top + 20 * static_cast<double>(i);
        svg << "<line x1=\"" << coord(right + 15) << "\" y1=\"" << coord(leg_y) << "\" x2=\""
            << coord(right + 45) << "\" y2=\"" << coord(leg_y) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << coord(right + 52) << "\" y=\"" << coord(leg_y + 5) << "\">n="
            << c.n << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

// ---------------------------------------------------------------------------
// mc

struct McParams {
    int L = 0, N = 0;
    std::optional<int> m;
    std::optional<std::int64_t> M;
    std::string stat = "v0";
    std::uint64_t K = 0;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out;
    std::string summary;
};

gbp::Statistic parse_stat(const std::string& s) {
    if (s == "v0") return gbp::Statistic::ZeroSums;
    if (s == "w") return gbp::Statistic::WagnerSolutions;
    throw CLI::ValidationError("--stat must be v0 or w");
}

void run_mc(const McParams& p) {
    gbp::MonteCarloResult result = gbp::monte_carlo(p.L, p.N, ring_from(p.m, p.M),
                                                    parse_stat(p.stat), p.K, p.seed, p.threads);
    std::ostringstream csv;
    csv << "k,probability\n";
    for (const auto& [k, w] : result.distribution.weights)
        csv << k << ',' << fmt12(gbp::to_double(w)) << '\n';
    write_file(p.out, csv.str());

    ordered_json s{{"mean", result.summary.mean},
                   {"variance", result.summary.variance},
                   {"std_error", result.summary.std_error},
                   {"replicates", result.summary.replicates}};
    std::cout << s.dump() << "\n";
    std::vector<std::string> outputs{p.out};
    if (!p.summary.empty()) {
        write_file(p.summary, s.dump(2) + "\n");
        outputs.push_back(p.summary);
    }

    ordered_json params{{"L", p.L},       {"N", p.N},             {"stat", p.stat}, {"K", p.K},
                        {"seed", p.seed}, {"threads", p.threads}, {"out", p.out}};
    if (p.m) params["m"] = *p.m;
    if (p.M) params["M"] = *p.M;
    if (!p.summary.empty()) params["summary"] = p.summary;
    write_manifest("mc", params, outputs);
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsParams {
    std::int64_t L = 0;
    int N = 0;
    std::string M;
    std::string out;
};

void run_bounds(const BoundsParams& p) {
    gbp::BigInt modulus = gbp::parse_big_integer(p.M);
    double mu = gbp::expected_zero_sums(p.L, p.N, modulus);
    ordered_json report{{"L", p.L}, {"N", p.N}, {"M", p.M}};
    report["mu"] = mu;
    report["v0_bound"] = gbp::chen_stein_bound_zero_sums(p.L, p.N, modulus);

    // The detected-count bound applies when N = 2^n and M = 2^m + 1 with m > n.
    report["lambda"] = nullptr;
    report["w_bound"] = nullptr;
    if (p.N >= 2 && (p.N & (p.N - 1)) == 0) {
        int n = 0;
        while ((1 << n) < p.N) ++n;
        gbp::BigInt shifted = modulus - 1;
        int m = 0;
        while (m <= 62 && (gbp::BigInt(1) << m) < shifted) ++m;
        if ((gbp::BigInt(1) << m) == shifted && m > n && m <= gbp::kFloatModeMaxM) {
            report["lambda"] = gbp::expected_wagner_solutions(p.L, n, m);
            report["w_bound"] = gbp::chen_stein_bound_wagner(p.L, n, m);
        }
    }

    std::string text = report.dump(2) + "\n";
    std::vector<std::string> outputs;
    if (!p.out.empty()) {
        write_file(p.out, text);
        outputs.push_back(p.out);
    }
    std::cout << text;
    ordered_json params{{"L", p.L}, {"N", p.N}, {"M", p.M}};
    if (!p.out.empty()) params["out"] = p.out;
    write_manifest("bounds", params, outputs);
}

// ---------------------------------------------------------------------------
// exact-dist

struct ExactDistParams {
    int L = 0, N = 0;
    std::optional<int> m;
    std::optional<std::int64_t> M;
    std::string stat = "v0";
    std::optional<std::uint64_t> budget;
    std::string out;
};

void run_exact_dist(const ExactDistParams& p) {
    std::uint64_t budget = gbp::kDefaultEnumerationBudget;
    if (const char* env = std::getenv("GBP_ENUM_BUDGET"); env && *env)
        budget = std::strtoull(env, nullptr, 10);
    if (p.budget) budget = *p.budget;

    gbp::CountDistribution dist =
        gbp::exact_distribution(p.L, p.N, ring_from(p.m, p.M), parse_stat(p.stat), budget);
    std::ostringstream csv;
    csv << "k,probability\n";
    for (const auto& [k, w] : dist.weights)
        csv << k << ',' << gbp::to_fraction_string(w) << '\n';
    write_file(p.out, csv.str());
    std::cout << "mean=" << gbp::to_fraction_string(dist.mean_exact()) << "\n";

    ordered_json params{{"L", p.L}, {"N", p.N}, {"stat", p.stat}, {"out", p.out}};
    if (p.m) params["m"] = *p.m;
    if (p.M) params["M"] = *p.M;
    if (p.budget) params["budget"] = *p.budget;
    write_manifest("exact-dist", params, {p.out});
}

// ---------------------------------------------------------------------------
// replay

template <class T>
std::optional<T> opt_from(const ordered_json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    return j.at(key).get<T>();
}

std::string str_or_empty(const ordered_json& j, const char* key) {
    return j.contains(key) ? j.at(key).get<std::string>() : std::string();
}

void run_replay(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    ordered_json m = ordered_json::parse(in);
    std::string sub = m.at("subcommand").get<std::string>();
    const ordered_json& q = m.at("parameters");

    if (sub == "gen") {
        GenParams p;
        p.L = q.at("L").get<int>();
        p.N = q.at("N").get<int>();
        p.m = opt_from<int>(q, "m");
        p.M = opt_from<std::int64_t>(q, "M");
        p.seed = q.at("seed").get<std::uint64_t>();
        p.out = q.at("out").get<std::string>();
        run_gen(p);
    } else if (sub == "census") {
        run_census({q.at("in").get<std::string>(), q.at("out").get<std::string>()});
    } else if (sub == "wagner") {
        WagnerParams p;
        p.in = q.at("in").get<std::string>();
        p.list = q.at("list").get<bool>();
        p.cap = q.at("cap").get<std::uint64_t>();
        p.out = str_or_empty(q, "out");
        run_wagner(p);
    } else if (sub == "ratio") {
        RatioParams p;
        p.n = q.at("n").get<int>();
        p.m = q.at("m").get<int>();
        p.exact = q.at("exact").get<bool>();
        p.out = str_or_empty(q, "out");
        p.dump_table = str_or_empty(q, "dump-table");
        run_ratio(p);
    } else if (sub == "limit") {
        LimitParams p;
        p.n = q.at("n").get<int>();
        p.out = str_or_empty(q, "out");
        p.coeffs = str_or_empty(q, "coeffs");
        run_limit(p);
    } else if (sub == "figure2") {
        FigureParams p;
        p.n_list = q.at("n-list").get<std::string>();
        p.m_max = q.at("m-max").get<int>();
        p.out_csv = q.at("out-csv").get<std::string>();
        p.out_svg = q.at("out-svg").get<std::string>();
        run_figure2(p);
    } else if (sub == "mc") {
        McParams p;
        p.L = q.at("L").get<int>();
        p.N = q.at("N").get<int>();
        p.m = opt_from<int>(q, "m");
        p.M = opt_from<std::int64_t>(q, "M");
        p.stat = q.at("stat").get<std::string>();
        p.K = q.at("K").get<std::uint64_t>();
        p.seed = q.at("seed").get<std::uint64_t>();
        p.threads = q.at("threads").get<int>();
        p.out = q.at("out").get<std::string>();
        p.summary = str_or_empty(q, "summary");
        run_mc(p);
    } else if (sub == "bounds") {
        BoundsParams p;
        p.L = q.at("L").get<std::int64_t>();
        p.N = q.at("N").get<int>();
        p.M = q.at("M").get<std::string>();
        p.out = str_or_empty(q, "out");
        run_bounds(p);
    } else if (sub == "exact-dist") {
        ExactDistParams p;
        p.L = q.at("L").get<int>();
        p.N = q.at("N").get<int>();
        p.m = opt_from<int>(q, "m");
        p.M = opt_from<std::int64_t>(q, "M");
        p.stat = q.at("stat").get<std::string>();
        p.budget = opt_from<std::uint64_t>(q, "budget");
        p.out = q.at("out").get<std::string>();
        run_exact_dist(p);
    } else {
        throw std::runtime_error("manifest names an unknown subcommand: " + sub);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalised birthday problem toolkit"};
    app.require_subcommand(1);

    GenParams gen;
    auto* cmd_gen = app.add_subcommand("gen", "sample a uniform instance and store it");
    cmd_gen->add_option("--L", gen.L, "rows per column")->required();
    cmd_gen->add_option("--N", gen.N, "number of columns")->required();
    cmd_gen->add_option("--m", gen.m, "window exponent (M = 2^m + 1)");
    cmd_gen->add_option("--M", gen.M, "modulus");
    cmd_gen->add_option("--seed", gen.seed, "64-bit seed")->required();
    cmd_gen->add_option("--out", gen.out, "instance file")->required();

    CensusParams cen;
    auto* cmd_census = app.add_subcommand("census", "exact counts V_b for an instance");
    cmd_census->add_option("--in", cen.in, "instance file")->required();
    cmd_census->add_option("--out", cen.out, "census CSV")->required();

    WagnerParams wag;
    auto* cmd_wagner = app.add_subcommand("wagner", "count (and list) detected solutions");
    cmd_wagner->add_option("--in", wag.in, "instance file")->required();
    cmd_wagner->add_flag("--list", wag.list, "emit detected solutions as CSV");
    cmd_wagner->add_option("--cap", wag.cap, "listing cap");
    cmd_wagner->add_option("--out", wag.out, "solutions CSV (with --list)");

    RatioParams rat;
    auto* cmd_ratio = app.add_subcommand("ratio", "detection ratio R_nm");
    cmd_ratio->add_option("--n", rat.n, "tree depth")->required();
    cmd_ratio->add_option("--m", rat.m, "window exponent")->required();
    cmd_ratio->add_flag("--exact", rat.exact, "exact rational mode");
    cmd_ratio->add_option("--out", rat.out, "write the row to a file");
    cmd_ratio->add_option("--dump-table", rat.dump_table, "export level tables as CSV");

    LimitParams lim;
    auto* cmd_limit = app.add_subcommand("limit", "limit constant phi_n(0)");
    cmd_limit->add_option("--n", lim.n, "level")->required();
    cmd_limit->add_option("--out", lim.out, "write the row to a file");
    cmd_limit->add_option("--coeffs", lim.coeffs, "dump polynomial coefficients as CSV");

    FigureParams fig;
    auto* cmd_fig = app.add_subcommand("figure2", "ratio curves with their limits");
    cmd_fig->add_option("--n-list", fig.n_list, "comma-separated levels (default 2,3,4)");
    cmd_fig->add_option("--m-max", fig.m_max, "largest window exponent (default 14)");
    cmd_fig->add_option("--out-csv", fig.out_csv, "data CSV")->required();
    cmd_fig->add_option("--out-svg", fig.out_svg, "plot SVG")->required();

    McParams mc;
    auto* cmd_mc = app.add_subcommand("mc", "seeded Monte Carlo replicates");
    cmd_mc->add_option("--L", mc.L, "rows per column")->required();
    cmd_mc->add_option("--N", mc.N, "number of columns")->required();
    cmd_mc->add_option("--m", mc.m, "window exponent");
    cmd_mc->add_option("--M", mc.M, "modulus");
    cmd_mc->add_option("--stat", mc.stat, "v0 or w")->required();
    cmd_mc->add_option("--K", mc.K, "replicates")->required();
    cmd_mc->add_option("--seed", mc.seed, "base seed")->required();
    cmd_mc->add_option("--threads", mc.threads, "worker threads (output-neutral)");
    cmd_mc->add_option("--out", mc.out, "distribution CSV")->required();
    cmd_mc->add_option("--summary", mc.summary, "summary JSON file");

    BoundsParams bnd;
    auto* cmd_bounds = app.add_subcommand("bounds", "Poisson approximation error bounds");
    cmd_bounds->add_option("--L", bnd.L, "rows per column")->required();
    cmd_bounds->add_option("--N", bnd.N, "number of columns")->required();
    cmd_bounds->add_option("--M", bnd.M, "modulus (decimal, 1eK, or 10^K)")->required();
    cmd_bounds->add_option("--out", bnd.out, "write the report to a file");

    ExactDistParams exd;
    auto* cmd_exd = app.add_subcommand("exact-dist", "exact count distribution by enumeration");
    cmd_exd->add_option("--L", exd.L, "rows per column")->required();
    cmd_exd->add_option("--N", exd.N, "number of columns")->required();
    cmd_exd->add_option("--m", exd.m, "window exponent");
    cmd_exd->add_option("--M", exd.M, "modulus");
    cmd_exd->add_option("--stat", exd.stat, "v0 or w")->required();
    cmd_exd->add_option("--budget", exd.budget,
                        "max matrices to enumerate (env GBP_ENUM_BUDGET overrides the default)");
    cmd_exd->add_option("--out", exd.out, "distribution CSV")->required();

    std::string manifest_path;
    auto* cmd_replay = app.add_subcommand("replay", "re-run a recorded manifest");
    cmd_replay->add_option("--manifest", manifest_path, "manifest file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gen->parsed()) run_gen(gen);
        if (cmd_census->parsed()) run_census(cen);
        if (cmd_wagner->parsed()) run_wagner(wag);
        if (cmd_ratio->parsed()) run_ratio(rat);
        if (cmd_limit->parsed()) run_limit(lim);
        if (cmd_fig->parsed()) run_figure2(fig);
        if (cmd_mc->parsed()) run_mc(mc);
        if (cmd_bounds->parsed()) run_bounds(bnd);
        if (cmd_exd->parsed()) run_exact_dist(exd);
        if (cmd_replay->parsed()) run_replay(manifest_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
