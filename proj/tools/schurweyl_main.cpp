#include "schurweyl/bench.hpp"
#include "schurweyl/engine.hpp"
#include "schurweyl/json_io.hpp"
#include "schurweyl/projection.hpp"
#include "schurweyl/rsk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

namespace sw = schurweyl;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

int default_budget() {
    if (const char* env = std::getenv("SW_BUDGET")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("SW_BUDGET must be an integer");
        }
    }
    return 8;
}

void print_envelope(const std::string& command, json inputs, json result, bool exact) {
    json envelope = {{"command", command},
                     {"inputs", std::move(inputs)},
                     {"result", std::move(result)},
                     {"exact", exact}};
    std::cout << envelope.dump(2) << "\n";
}

std::string pattern_rows_line(const std::vector<int>& row, int width) {
    std::ostringstream os;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) os << ' ';
        os << std::setw(width) << row[c];
    }
    return os.str();
}

void print_diamond(const sw::DoubleGTPattern& d) {
    int width = 1;
    auto widen = [&](const sw::GTPattern& p) {
        for (int j = 1; j <= p.size(); ++j)
            for (int v : p.row(j))
                width = std::max(width, static_cast<int>(std::to_string(v).size()));
    };
    widen(d.recording);
    widen(d.insertion);
    const int max_len = std::max(d.recording.size(), d.insertion.size());
    auto indent = [&](int len) {
        return std::string(static_cast<std::size_t>(max_len - len) *
                               static_cast<std::size_t>(width + 1) / 2,
                           ' ');
    };
    for (int j = 1; j <= d.recording.size(); ++j)
        std::cout << indent(j) << pattern_rows_line(d.recording.row(j), width) << "\n";
    int start = d.insertion.size();
    if (d.insertion.size() == d.recording.size() &&
        d.insertion.row(start) == d.recording.row(start))
        --start;  // shared top row printed once
    for (int j = start; j >= 1; --j)
        std::cout << indent(j) << pattern_rows_line(d.insertion.row(j), width) << "\n";
}

void print_graph_text(const sw::CouplingGraph& graph) {
    for (std::size_t j = 0; j < graph.levels.size(); ++j) {
        const auto& level = graph.levels[j];
        std::cout << "level " << j;
        if (j > 0) std::cout << "  (letter " << level.letter << ")";
        std::cout << ":\n";
        for (std::size_t v = 0; v < level.vertices.size(); ++v)
            std::cout << "  [" << v << "] " << sw::format_gt_pattern(level.vertices[v]) << "\n";
        for (const auto& e : level.edges)
            std::cout << "  edge [" << e.from << "] -> [" << e.to
                      << "]  weight " << e.weight.str() << "\n";
        if (level.vertices.empty() && j > 0) std::cout << "  (dead level)\n";
    }
}

struct StateArgs {
    std::string lambda_text;
    std::string t_text;
    std::string y_text;
    int n_override = 0;
};

std::pair<sw::SchurWeylLabel, int> parse_label(const StateArgs& args) {
    sw::Partition lambda = sw::parse_partition(args.lambda_text);
    sw::WeylTableau t = sw::parse_weyl_tableau(args.t_text);
    sw::YoungTableau y = sw::parse_young_tableau(args.y_text);
    int n = static_cast<int>(lambda.size());
    for (const auto& row : t.rows())
        for (int v : row) n = std::max(n, v);
    if (args.n_override > 0) n = args.n_override;
    sw::SchurWeylLabel label{std::move(lambda), std::move(t), std::move(y)};
    sw::validate_label(label, n);
    return {std::move(label), n};
}

json label_inputs_json(const sw::SchurWeylLabel& label, int n) {
    return {{"lambda", sw::trimmed(label.lambda)},
            {"t", sw::format_tableau(label.t)},
            {"y", sw::format_tableau(label.y)},
            {"n", n}};
}

// Median-of-repeats timing with an inner loop sized so one sample is long
// enough to trust the clock.
template <typename Fn>
double measure_seconds(Fn&& fn, int repeats) {
    using clock = std::chrono::steady_clock;
    int iterations = 1;
    for (;;) {
        auto start = clock::now();
        for (int i = 0; i < iterations; ++i) fn();
        double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        if (elapsed >= 0.02 || iterations >= (1 << 20)) break;
        iterations *= 4;
    }
    std::vector<double> samples;
    for (int r = 0; r < repeats; ++r) {
        auto start = clock::now();
        for (int i = 0; i < iterations; ++i) fn();
        double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        samples.push_back(elapsed / iterations);
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

int run_rsk(const std::string& config_text, int n, bool inverse, const std::string& input_path,
            const std::string& format) {
    if (inverse) {
        json j;
        if (input_path.empty() || input_path == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(input_path);
            if (!in) throw std::invalid_argument("rsk: cannot open " + input_path);
            in >> j;
        }
        if (j.contains("result")) j = j.at("result");  // accept a full envelope
        sw::DoubleGTPattern d = sw::double_pattern_from_json(j);
        sw::Configuration f = sw::rsk_inverse(d);
        if (format == "json") {
            print_envelope("rsk", {{"inverse", true}}, {{"config", f}}, true);
        } else {
            std::cout << "config: " << sw::format_int_list(f) << "\n";
        }
        return kExitOk;
    }
    if (config_text.empty()) throw std::invalid_argument("rsk: --config is required");
    sw::Configuration f = sw::parse_configuration(config_text);
    int alphabet = n;
    if (alphabet == 0)
        for (int v : f) alphabet = std::max(alphabet, v);
    sw::DoubleGTPattern d = sw::rsk_forward(f, alphabet);
    if (format == "json") {
        print_envelope("rsk", {{"config", f}, {"n", alphabet}}, sw::to_json(d), true);
    } else {
        print_diamond(d);
        std::cout << "t: " << sw::format_tableau(sw::tableau_from_gt(d.insertion)) << "\n";
        std::cout << "y: " << sw::format_tableau(sw::syt_from_gt(d.recording)) << "\n";
    }
    return kExitOk;
}

int run_amplitude(const StateArgs& args, const std::string& config_text, bool show_graph,
                  const std::string& format) {
    auto [label, n] = parse_label(args);
    sw::Configuration f = sw::parse_configuration(config_text);
    for (int v : f)
        if (v > n) throw std::invalid_argument("amplitude: configuration letter exceeds n");
    int node_count = 0;
    for (int part : label.lambda) node_count += part;
    if (static_cast<int>(f.size()) != node_count)
        throw std::invalid_argument("amplitude: configuration has " +
                                    std::to_string(f.size()) + " letters but |lambda| = " +
                                    std::to_string(node_count));

    sw::SurdSum value;
    std::optional<sw::CouplingGraph> graph;
    if (sw::weight_of(f, n) == sw::weight_of(label.t, n)) {
        graph = sw::build_graph(f, label, n);
        value = sw::amplitude(*graph);
    }
    json inputs = label_inputs_json(label, n);
    inputs["config"] = f;
    if (format == "json") {
        json result = {{"amplitude", sw::to_json(value)}};
        if (show_graph && graph) result["graph"] = sw::to_json(*graph);
        print_envelope("amplitude", std::move(inputs), std::move(result), true);
    } else {
        if (show_graph && graph) print_graph_text(*graph);
        std::cout << "amplitude = " << value.str() << " = " << std::setprecision(12)
                  << value.to_double() << "\n";
    }
    return kExitOk;
}

int run_state(const StateArgs& args, const std::string& format) {
    auto [label, n] = parse_label(args);
    sw::SchurWeylState state = sw::expand_state(label, n);
    if (format == "json") {
        print_envelope("state", label_inputs_json(label, n), sw::to_json(state), state.exact);
    } else {
        std::cout << "|lambda=(" << sw::format_int_list(sw::trimmed(label.lambda)) << "), t="
                  << sw::format_tableau(label.t) << ", y=" << sw::format_tableau(label.y)
                  << ">  over orbit of mu=(" << sw::format_int_list(state.mu) << ")\n";
        for (std::size_t c = 0; c < state.amplitudes.size(); ++c) {
            const auto& [f, a] = state.amplitudes[c];
            std::cout << "  " << std::setw(24) << std::left << a.str() << "  |"
                      << sw::format_int_list(f) << ">  (" << std::setprecision(9)
                      << state.float_amplitudes[c] << ")\n";
        }
    }
    return kExitOk;
}

int run_verify(int node_count, int n, int budget, std::size_t max_orbit,
               const std::string& format) {
    if (node_count < 1 || n < 1) throw std::invalid_argument("verify: need N >= 1 and n >= 1");
    bool all_ok = true;
    json stages = json::array();

    // 1. RSK round trips over the full calculational basis
    {
        long long total = 1;
        for (int i = 0; i < node_count; ++i) total *= n;
        long long checked = 0;
        bool ok = true;
        sw::Configuration f(static_cast<std::size_t>(node_count), 1);
        for (;;) {
            if (sw::rsk_inverse(sw::rsk_forward(f, n)) != f) {
                ok = false;
                break;
            }
            ++checked;
            int pos = node_count - 1;
            while (pos >= 0 && f[static_cast<std::size_t>(pos)] == n) {
                f[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++f[static_cast<std::size_t>(pos)];
        }
        all_ok = all_ok && ok;
        stages.push_back({{"stage", "rsk_bijectivity"},
                          {"checked", checked},
                          {"total", total},
                          {"ok", ok}});
    }

    // 2. counting identity |O_mu| = sum_lambda K_{lambda mu} * |SYT(lambda)|
    {
        bool ok = true;
        int weights = 0;
        for (const auto& mu : sw::compositions_of(node_count, n)) {
            sw::Int orbit_size = 1;
            for (int i = 2; i <= node_count; ++i) orbit_size *= i;
            for (int part : mu)
                for (int i = 2; i <= part; ++i) orbit_size /= i;
            sw::Int label_count = 0;
            for (const auto& lambda : sw::partitions_of(node_count, n))
                label_count += sw::Int(sw::kostka(lambda, mu)) *
                               sw::Int(sw::enumerate_syt(lambda).size());
            if (label_count != orbit_size) ok = false;
            ++weights;
        }
        all_ok = all_ok && ok;
        stages.push_back({{"stage", "counting_identity"}, {"weights", weights}, {"ok", ok}});
    }

    // 3. unitarity of the amplitude matrix per orbit (skips oversized orbits;
    //    whole-orbit checks grow exponentially with N)
    {
        bool ok = true;
        int checked = 0;
        int skipped = 0;
        double worst = 0.0;
        for (const auto& mu : sw::compositions_of(node_count, n)) {
            auto orbit_size = sw::orbit_enumerate(mu).size();
            if (orbit_size > max_orbit) {
                ++skipped;
                continue;
            }
            auto report = sw::verify_unitarity(mu, n);
            worst = std::max(worst, report.max_deviation);
            if (!report.unitary || !report.counting_ok) ok = false;
            ++checked;
        }
        all_ok = all_ok && ok;
        stages.push_back({{"stage", "unitarity"},
                          {"orbits_checked", checked},
                          {"orbits_skipped", skipped},
                          {"max_orbit", max_orbit},
                          {"max_deviation", worst},
                          {"ok", ok}});
    }

    // 4. graph method against the factorial-cost standard method
    if (node_count > budget) {
        stages.push_back(
            {{"stage", "standard_method"},
             {"refused", true},
             {"reason", "group projection over Sigma_" + std::to_string(node_count) +
                            " requires roughly " + std::to_string(node_count) +
                            "! operations, above the budget of " + std::to_string(budget)},
             {"ok", true}});
    } else {
        bool ok = true;
        int labels_checked = 0;
        for (const auto& label : sw::labels_for_alphabet(node_count, n)) {
            sw::SchurWeylState graph_state = sw::expand_state(label, n);
            sw::SchurWeylState projected = sw::projection_state(label, n, budget);
            int sign = 0;
            bool match = true;
            for (std::size_t c = 0; c < graph_state.amplitudes.size(); ++c) {
                double g = graph_state.float_amplitudes[c];
                double p = projected.float_amplitudes[c];
                if (sign == 0 && std::fabs(g) > 1e-9) sign = (g > 0) == (p > 0) ? 1 : -1;
                if (std::fabs(g - (sign == 0 ? 1 : sign) * p) > 1e-10) match = false;
            }
            if (projected.exact && sign != 0) {
                for (std::size_t c = 0; c < graph_state.amplitudes.size(); ++c) {
                    sw::SurdSum expected = sign > 0 ? projected.amplitudes[c].second
                                                    : -projected.amplitudes[c].second;
                    if (graph_state.amplitudes[c].second != expected) match = false;
                }
            }
            if (!match) ok = false;
            ++labels_checked;
        }
        all_ok = all_ok && ok;
        stages.push_back(
            {{"stage", "standard_method"}, {"labels", labels_checked}, {"ok", ok}});
    }

    if (format == "json") {
        print_envelope("verify",
                       {{"N", node_count}, {"n", n}, {"budget", budget},
                        {"max_orbit", max_orbit}},
                       {{"stages", stages}, {"pass", all_ok}}, true);
    } else {
        for (const auto& stage : stages) {
            std::cout << stage.at("stage").get<std::string>() << ": ";
            if (stage.contains("refused") && stage.at("refused").get<bool>()) {
                std::cout << "refused - " << stage.at("reason").get<std::string>() << "\n";
                continue;
            }
            std::cout << (stage.at("ok").get<bool>() ? "ok" : "FAILED");
            if (stage.contains("checked"))
                std::cout << "  (" << stage.at("checked") << "/" << stage.at("total")
                          << " round trips)";
            if (stage.contains("weights")) std::cout << "  (" << stage.at("weights") << " weights)";
            if (stage.contains("orbits_checked"))
                std::cout << "  (" << stage.at("orbits_checked") << " orbits, "
                          << stage.at("orbits_skipped") << " above --max-orbit)";
            if (stage.contains("labels")) std::cout << "  (" << stage.at("labels") << " labels)";
            std::cout << "\n";
        }
        std::cout << "verify: " << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int run_bench(const std::string& range_text, int n, int budget, int repeats) {
    int lo = 0;
    int hi = 0;
    int step = 1;
    auto colon = range_text.find(':');
    if (colon == std::string::npos) {
        lo = hi = std::stoi(range_text);
    } else {
        lo = std::stoi(range_text.substr(0, colon));
        std::string rest = range_text.substr(colon + 1);
        auto second = rest.find(':');
        if (second == std::string::npos) {
            hi = std::stoi(rest);
        } else {
            hi = std::stoi(rest.substr(0, second));
            step = std::stoi(rest.substr(second + 1));
        }
    }
    if (lo < 1 || hi < lo || step < 1)
        throw std::invalid_argument("bench: bad --N-range (use lo:hi or lo:hi:step)");

    std::cout << "N,n,graph_seconds,amplitude_float,oracle_seconds,oracle_status\n";
    for (int node_count = lo; node_count <= hi; node_count += step) {
        auto [label, f] = sw::homogeneous_query(node_count, n);
        sw::SurdSum value = sw::amplitude(f, label, n);
        double graph_time =
            measure_seconds([&]() { sw::amplitude(f, label, n); }, repeats);
        std::cout << node_count << "," << n << "," << std::setprecision(6) << graph_time << ","
                  << std::setprecision(12) << value.to_double() << ",";
        if (node_count <= budget) {
            double oracle_time =
                measure_seconds([&]() { sw::projection_state(label, n, budget); }, 1);
            std::cout << std::setprecision(6) << oracle_time << ",ok\n";
        } else {
            std::cout << ",refused (" << node_count << "! beyond budget " << budget << "!)\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schur-Weyl basis states for spin chains: RSK on Gelfand-Tsetlin "
                 "patterns, tensor-operator couplings, and interference sums over "
                 "coupling-graph paths"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    int budget = 0;

    auto* rsk_cmd = app.add_subcommand("rsk", "RSK between configurations and double GT patterns");
    std::string rsk_config;
    int rsk_n = 0;
    bool rsk_inverse_flag = false;
    std::string rsk_input;
    rsk_cmd->add_option("--config", rsk_config, "configuration, e.g. 3,1,2,3,2");
    rsk_cmd->add_option("--n", rsk_n, "spin alphabet size (default: max letter)");
    rsk_cmd->add_flag("--inverse", rsk_inverse_flag, "invert a double pattern read as JSON");
    rsk_cmd->add_option("--input", rsk_input, "JSON input for --inverse ('-' = stdin)");

    auto* amp_cmd = app.add_subcommand("amplitude", "single amplitude <f|lambda t y>");
    StateArgs amp_args;
    std::string amp_config;
    bool show_graph = false;
    amp_cmd->add_option("--config", amp_config, "configuration")->required();
    amp_cmd->add_option("--lambda", amp_args.lambda_text, "partition, e.g. 3,1")->required();
    amp_cmd->add_option("--t", amp_args.t_text, "Weyl tableau, e.g. 123/2")->required();
    amp_cmd->add_option("--y", amp_args.y_text, "Young tableau, e.g. 134/2")->required();
    amp_cmd->add_option("--n", amp_args.n_override, "spin alphabet size override");
    amp_cmd->add_flag("--show-graph", show_graph, "print the coupling graph");

    auto* state_cmd = app.add_subcommand("state", "expand |lambda t y> over its orbit");
    StateArgs state_args;
    state_cmd->add_option("--lambda", state_args.lambda_text, "partition")->required();
    state_cmd->add_option("--t", state_args.t_text, "Weyl tableau")->required();
    state_cmd->add_option("--y", state_args.y_text, "Young tableau")->required();
    state_cmd->add_option("--n", state_args.n_override, "spin alphabet size override");

    auto* verify_cmd = app.add_subcommand("verify", "cross-check the construction");
    int verify_N = 0;
    int verify_n = 0;
    std::size_t max_orbit = 360;
    verify_cmd->add_option("--N", verify_N, "node count")->required();
    verify_cmd->add_option("--n", verify_n, "spin alphabet size")->required();
    verify_cmd->add_option("--budget", budget, "factorial budget for the standard method");
    verify_cmd->add_option("--max-orbit", max_orbit, "skip unitarity above this orbit size")
        ->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "time graph vs standard method (CSV)");
    std::string bench_range;
    int bench_n = 3;
    int bench_repeats = 5;
    bench_cmd->add_option("--N-range", bench_range, "lo:hi or lo:hi:step")->required();
    bench_cmd->add_option("--n", bench_n, "spin alphabet size")->capture_default_str();
    bench_cmd->add_option("--budget", budget, "factorial budget for the standard method");
    bench_cmd->add_option("--repeats", bench_repeats, "timing repeats")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (budget == 0) budget = default_budget();
        if (app.got_subcommand(rsk_cmd))
            return run_rsk(rsk_config, rsk_n, rsk_inverse_flag, rsk_input, format);
        if (app.got_subcommand(amp_cmd))
            return run_amplitude(amp_args, amp_config, show_graph, format);
        if (app.got_subcommand(state_cmd)) return run_state(state_args, format);
        if (app.got_subcommand(verify_cmd))
            return run_verify(verify_N, verify_n, budget, max_orbit, format);
        if (app.got_subcommand(bench_cmd))
            return run_bench(bench_range, bench_n, budget, bench_repeats);
        return kExitInputError;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    } catch (const sw::FactorialBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
