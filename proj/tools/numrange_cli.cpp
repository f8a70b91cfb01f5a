// numrange: numerical radius and numerical-range boundary of 2x2 complex
// matrices. Subcommands: radius, boundary, batch, bench.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numrange/complex_literal.hpp"
#include "numrange/oracle.hpp"
#include "numrange/radius_engine.hpp"

using json = nlohmann::ordered_json;
using namespace numrange;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitPartial = 4;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Matrix2 matrix_from_literals(const std::vector<std::string>& lits) {
    if (lits.size() != 4) throw ComplexParseError("expected exactly 4 complex literals", 0);
    return {parse_complex(lits[0]), parse_complex(lits[1]),
            parse_complex(lits[2]), parse_complex(lits[3])};
}

struct InputRecord {
    std::string id;
    bool has_id = false;
    Matrix2 matrix;
};

InputRecord record_from_json(const json& j) {
    InputRecord rec;
    if (j.contains("id") && !j["id"].is_null()) {
        rec.id = j["id"].get<std::string>();
        rec.has_id = true;
    }
    const auto& m = j.at("matrix");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2) {
        throw std::invalid_argument("matrix must be a 2x2 array of complex literals");
    }
    rec.matrix = {parse_complex(m[0][0].get<std::string>()),
                  parse_complex(m[0][1].get<std::string>()),
                  parse_complex(m[1][0].get<std::string>()),
                  parse_complex(m[1][1].get<std::string>())};
    return rec;
}

InputRecord record_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return record_from_json(json::parse(in));
}

struct Evaluation {
    RadiusResult result;
    double oracle_w = 0.0;
    bool checked = false;
    long long wall_ns = 0;
};

Evaluation evaluate(const Matrix2& a, bool check) {
    Evaluation ev;
    const auto t0 = std::chrono::steady_clock::now();
    ev.result = numerical_radius(a);
    ev.wall_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    if (check) {
        ev.oracle_w = radius_angle_sweep(a).w;
        ev.checked = true;
    }
    return ev;
}

json result_record(const InputRecord& in, const Evaluation& ev, bool with_time) {
    json out;
    if (in.has_id) out["id"] = in.id;
    out["w"] = ev.result.w;
    out["method"] = method_name(ev.result.method);
    out["near"] = ev.result.near();
    out["far_point"] = {ev.result.far_point.first, ev.result.far_point.second};
    if (ev.checked) {
        out["oracle_w"] = ev.oracle_w;
        out["abs_err"] = std::abs(ev.result.w - ev.oracle_w);
    }
    if (with_time) out["wall_time_ns"] = ev.wall_ns;
    return out;
}

// ---- radius ----------------------------------------------------------------

int cmd_radius(const std::vector<std::string>& lits, const std::string& input, bool check) {
    InputRecord rec;
    if (!input.empty()) {
        rec = record_from_file(input);
    } else {
        rec.matrix = matrix_from_literals(lits);
    }
    const Evaluation ev = evaluate(rec.matrix, check);
    std::cout << result_record(rec, ev, true).dump() << "\n";
    return 0;
}

// ---- boundary --------------------------------------------------------------

void emit_boundary_csv(const EllipseParams& e, int samples, std::ostream& os) {
    os << "t,x,y\n";
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * M_PI * k / samples;
        const auto [x, y] = boundary_point(e, t);
        os << fmt17(t) << "," << fmt17(x) << "," << fmt17(y) << "\n";
    }
}

void emit_boundary_svg(const EllipseParams& e, double w, int samples, std::ostream& os) {
    // SVG y axis points down; emit with y negated so the picture matches the
    // complex plane.
    double min_x = -w, max_x = w, min_y = -w, max_y = w;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * M_PI * k / samples;
        auto [x, y] = boundary_point(e, t);
        y = -y;
        pts.emplace_back(x, y);
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double pad = 0.1 * std::max(max_x - min_x, max_y - min_y);
    min_x -= pad;
    min_y -= pad;
    const double width = (max_x - min_x) + 2.0 * pad;
    const double height = (max_y - min_y) + 2.0 * pad;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt17(min_x) << " "
       << fmt17(min_y) << " " << fmt17(width) << " " << fmt17(height)
       << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    os << "  <path fill=\"none\" stroke=\"red\" stroke-width=\"" << fmt17(0.004 * width)
       << "\" d=\"";
    for (size_t k = 0; k < pts.size(); ++k) {
        os << (k == 0 ? "M" : " L") << fmt17(pts[k].first) << " " << fmt17(pts[k].second);
    }
    os << " Z\"/>\n";
    os << "  <circle fill=\"none\" stroke=\"blue\" stroke-width=\"" << fmt17(0.004 * width)
       << "\" cx=\"0\" cy=\"0\" r=\"" << fmt17(w) << "\"/>\n";
    os << "</svg>\n";
}

int cmd_boundary(const std::vector<std::string>& lits, const std::string& input, int samples,
                 const std::string& format) {
    InputRecord rec;
    if (!input.empty()) {
        rec = record_from_file(input);
    } else {
        rec.matrix = matrix_from_literals(lits);
    }
    const RadiusResult r = numerical_radius(rec.matrix);
    if (format == "csv") {
        emit_boundary_csv(r.ellipse, samples, std::cout);
    } else {
        emit_boundary_svg(r.ellipse, r.w, samples, std::cout);
    }
    return 0;
}

// ---- batch -----------------------------------------------------------------

int cmd_batch(const std::string& input, bool check, int jobs) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot open input file: " << input << "\n";
        return kExitParse;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) lines.push_back(line);
    }

    const size_t n = lines.size();
    std::vector<std::string> outputs(n);
    std::atomic<bool> any_failed{false};
    std::atomic<size_t> next{0};
    std::atomic<long long> fallback_count{0};
    std::vector<double> errs(n, -1.0);

    const auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            json out;
            try {
                const InputRecord rec = record_from_json(json::parse(lines[i]));
                const Evaluation ev = evaluate(rec.matrix, check);
                if (ev.result.method == Method::OracleFallback) ++fallback_count;
                if (ev.checked) errs[i] = std::abs(ev.result.w - ev.oracle_w);
                out = result_record(rec, ev, true);
            } catch (const std::exception& ex) {
                out = json{{"line", i + 1}, {"error", ex.what()}};
                any_failed = true;
            }
            outputs[i] = out.dump();
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& s : outputs) std::cout << s << "\n";
    double max_err = 0.0;
    bool have_err = false;
    for (double e : errs) {
        if (e >= 0.0) {
            max_err = std::max(max_err, e);
            have_err = true;
        }
    }
    std::cerr << "count=" << n;
    if (have_err) std::cerr << " max_abs_err=" << fmt17(max_err);
    std::cerr << " fallback_count=" << fallback_count.load() << "\n";
    return any_failed ? kExitPartial : 0;
}

// ---- bench -----------------------------------------------------------------

double percentile(std::vector<double> v, double p) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const double idx = p * (v.size() - 1);
    const size_t lo = static_cast<size_t>(idx);
    const size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (idx - lo) * (v[hi] - v[lo]);
}

int cmd_bench(long long n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double max_err = 0.0, sum_err = 0.0;
    long long fallbacks = 0;
    std::map<std::string, long long> methods;
    std::vector<double> engine_ns, oracle_ns;
    engine_ns.reserve(n > 0 ? n : 0);
    oracle_ns.reserve(n > 0 ? n : 0);

    for (long long i = 0; i < n; ++i) {
        const auto c = [&] { return Complex(unit(rng), unit(rng)); };
        const Matrix2 a{c(), c(), c(), c()};

        auto t0 = std::chrono::steady_clock::now();
        const RadiusResult r = numerical_radius(a);
        auto t1 = std::chrono::steady_clock::now();
        const double ow = radius_angle_sweep(a).w;
        auto t2 = std::chrono::steady_clock::now();
        engine_ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
        oracle_ns.push_back(std::chrono::duration<double, std::nano>(t2 - t1).count());

        const double err = std::abs(r.w - ow);
        max_err = std::max(max_err, err);
        sum_err += err;
        if (r.method == Method::OracleFallback) ++fallbacks;
        ++methods[method_name(r.method)];
    }

    // Deterministic report on stdout; wall-clock figures go to stderr since
    // they vary run to run.
    json report;
    report["n"] = n;
    report["seed"] = seed;
    report["max_abs_err"] = max_err;
    report["mean_abs_err"] = n > 0 ? sum_err / n : 0.0;
    report["fallback_count"] = fallbacks;
    report["fallback_rate"] = n > 0 ? static_cast<double>(fallbacks) / n : 0.0;
    json meth = json::object();
    for (const auto& [k, v] : methods) meth[k] = v;
    report["methods"] = meth;
    std::cout << report.dump() << "\n";

    std::cerr << "timing_ns pencil p50=" << percentile(engine_ns, 0.50)
              << " p90=" << percentile(engine_ns, 0.90)
              << " p99=" << percentile(engine_ns, 0.99)
              << " | oracle p50=" << percentile(oracle_ns, 0.50)
              << " p90=" << percentile(oracle_ns, 0.90)
              << " p99=" << percentile(oracle_ns, 0.99) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical radius and range boundary of 2x2 complex matrices"};
    app.require_subcommand(1);

    std::vector<std::string> lits;
    std::string input_file;
    bool check = false;
    int samples = 2000;
    std::string format = "csv";
    int jobs = 1;
    long long bench_n = 0;
    unsigned long long seed = 42;

    auto* radius = app.add_subcommand("radius", "compute w(A) for one matrix");
    radius->add_option("matrix", lits, "four complex literals, row-major")->expected(0, 4);
    radius->add_option("--input", input_file, "JSON file with {id?, matrix}");
    radius->add_flag("--check", check, "cross-check against the angle-sweep oracle");

    auto* boundary = app.add_subcommand("boundary", "emit the range boundary");
    boundary->add_option("matrix", lits, "four complex literals, row-major")->expected(0, 4);
    boundary->add_option("--input", input_file, "JSON file with {id?, matrix}");
    boundary->add_option("--samples", samples, "boundary sample count")->default_val(2000);
    boundary->add_option("--format", format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->default_val("csv");

    auto* batch = app.add_subcommand("batch", "process a JSONL file of matrices");
    batch->add_option("--input", input_file, "JSONL input file")->required();
    batch->add_flag("--check", check, "cross-check every record");
    batch->add_option("--jobs", jobs, "parallel workers")->default_val(1);

    auto* bench = app.add_subcommand("bench", "random-matrix benchmark");
    bench->add_option("--n", bench_n, "matrix count")->required();
    bench->add_option("--seed", seed, "RNG seed")->default_val(42);

    CLI11_PARSE(app, argc, argv);

    try {
        if (radius->parsed()) {
            if (input_file.empty() && lits.size() != 4) {
                std::cerr << "error: give four complex literals or --input FILE\n";
                return kExitParse;
            }
            return cmd_radius(lits, input_file, check);
        }
        if (boundary->parsed()) {
            if (input_file.empty() && lits.size() != 4) {
                std::cerr << "error: give four complex literals or --input FILE\n";
                return kExitParse;
            }
            return cmd_boundary(lits, input_file, samples, format);
        }
        if (batch->parsed()) return cmd_batch(input_file, check, jobs);
        if (bench->parsed()) return cmd_bench(bench_n, seed);
    } catch (const ComplexParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const json::parse_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
