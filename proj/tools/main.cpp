// arcnum: arc numbers, minimal embedded partitions and star subdiagram
// witnesses for chord diagrams given as Gauss words.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcnum/arcs.hpp"
#include "arcnum/diagram.hpp"
#include "arcnum/oracle.hpp"
#include "arcnum/render.hpp"
#include "arcnum/stars.hpp"

namespace {

using arcnum::ChordDiagram;
using json = nlohmann::json;

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_strings(const std::vector<std::string>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += values[i];
    }
    return out;
}

// Star orderings are cyclic, so start the displayed list at the chord that
// occurs first in the host word.
std::vector<std::string> display_order(const arcnum::StarWitness& w) {
    std::vector<std::string> out = w.crossings;
    if (out.empty()) return out;
    std::size_t first = 0;
    auto host_index = [&](const std::string& name) {
        const auto& labels = w.host.chord_labels();
        return std::find(labels.begin(), labels.end(), name) - labels.begin();
    };
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (host_index(out[i]) < host_index(out[first])) first = i;
    }
    std::rotate(out.begin(), out.begin() + first, out.end());
    return out;
}

json witness_json(const arcnum::StarWitness& w) {
    return json{{"t", w.params.t},
                {"a", w.params.a},
                {"chords", display_order(w)},
                {"star", arcnum::canonical_form(
                             arcnum::subdiagram(w.host, w.crossings).diagram)}};
}

struct LineResult {
    std::string plain;  // without the echoed input word
    json record;
    bool echo_word = true;
};

// Reads words line by line, applies `process`, and keeps going past
// per-line failures.  Returns 0 if every line succeeded, 1 otherwise.
template <typename Process>
int run_batch(const std::string& path, bool json_mode, Process process) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "error: cannot open '" << path << "'\n";
            return 2;
        }
        in = &file;
    }

    int status = 0;
    int lineno = 0;
    std::string line;
    while (std::getline(*in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            LineResult result = process(line);
            if (json_mode) {
                result.record["input"] = line;
                std::cout << result.record.dump() << "\n";
            } else if (result.echo_word) {
                std::cout << line << "\t" << result.plain << "\n";
            } else {
                std::cout << result.plain << "\n";
            }
        } catch (const std::exception& e) {
            status = 1;
            if (json_mode) {
                std::cout << json{{"input", line}, {"error", e.what()}}.dump() << "\n";
            } else {
                std::cerr << "line " << lineno << ": " << e.what() << "\n";
            }
        }
    }
    return status;
}

int cmd_arcnum(const std::string& path, bool json_mode) {
    return run_batch(path, json_mode, [](const std::string& line) {
        const ChordDiagram d = arcnum::parse_gauss_word(line);
        const int number = arcnum::arc_number(d);
        LineResult out;
        out.plain = std::to_string(number);
        out.record = json{{"canonical", arcnum::canonical_form(d)}, {"arcs", number}};
        return out;
    });
}

int cmd_partition(const std::string& path, bool json_mode) {
    return run_batch(path, json_mode, [](const std::string& line) {
        const ChordDiagram d = arcnum::parse_gauss_word(line);
        const std::vector<int> cuts = arcnum::sorted_cuts(arcnum::minimal_partition(d));
        LineResult out;
        out.plain = std::to_string(cuts.size()) + " cuts=" + join_ints(cuts);
        out.record = json{{"canonical", arcnum::canonical_form(d)},
                          {"arcs", cuts.size()},
                          {"cuts", cuts}};
        return out;
    });
}

int cmd_star(const std::string& path, bool json_mode) {
    return run_batch(path, json_mode, [](const std::string& line) {
        const ChordDiagram d = arcnum::parse_gauss_word(line);
        const int number = arcnum::arc_number(d);
        LineResult out;
        out.record = json{{"canonical", arcnum::canonical_form(d)}, {"arcs", number}};
        if (number <= 2) {
            out.plain = "arc number " + std::to_string(number) +
                        (number == 2 ? ": no star" : "");
            return out;
        }
        const arcnum::StarWitness w = arcnum::extract_star(d);
        out.plain = "t=" + std::to_string(w.params.t) +
                    " a=" + std::to_string(w.params.a) +
                    " chords=" + join_strings(display_order(w));
        out.record["witness"] = witness_json(w);
        return out;
    });
}

int cmd_canon(const std::string& path, bool json_mode) {
    return run_batch(path, json_mode, [](const std::string& line) {
        const ChordDiagram d = arcnum::parse_gauss_word(line);
        LineResult out;
        out.plain = arcnum::canonical_form(d);
        out.echo_word = false;
        out.record = json{{"canonical", out.plain}};
        return out;
    });
}

int cmd_gen_star(int t, int a) {
    std::cout << arcnum::to_gauss_word(arcnum::make_star(t, a)) << "\n";
    return 0;
}

int cmd_render(const std::string& word, const arcnum::RenderOptions& options,
               const std::string& output) {
    const ChordDiagram d = arcnum::parse_gauss_word(word);
    const std::string svg = arcnum::render_svg(d, options);
    if (output.empty() || output == "-") {
        std::cout << svg;
    } else {
        std::ofstream file(output);
        if (!file) {
            std::cerr << "error: cannot write '" << output << "'\n";
            return 2;
        }
        file << svg;
    }
    return 0;
}

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed, int runs) {
    double previous = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const int n = sizes[i];
        const ChordDiagram d = arcnum::random_diagram(n, seed);
        std::vector<double> times_ms;
        int number = 0;
        for (int run = 0; run < runs; ++run) {
            const auto begin = std::chrono::steady_clock::now();
            number = arcnum::arc_number(d);
            const auto end = std::chrono::steady_clock::now();
            times_ms.push_back(
                std::chrono::duration<double, std::milli>(end - begin).count());
        }
        std::sort(times_ms.begin(), times_ms.end());
        const double median = times_ms[times_ms.size() / 2];

        std::ostringstream row;
        row.setf(std::ios::fixed);
        row.precision(3);
        row << "n=" << n << " arcs=" << number << " median_ms=" << median;
        if (i > 0) {
            row.precision(2);
            row << " ratio=" << (previous > 0 ? median / previous : 0.0);
        }
        std::cout << row.str() << "\n";
        previous = median;
    }
    return 0;
}

int cmd_oracle_check(int max_n, int random_count, int max_chords,
                     std::uint64_t seed) {
    int checked = 0;
    int failures = 0;

    for (int n = 0; n <= max_n; ++n) {
        for (const ChordDiagram& d : arcnum::enumerate_diagrams(n)) {
            ++checked;
            const int fast = arcnum::arc_number(d);
            const int slow = arcnum::brute_force_arc_number(d);
            if (fast != slow) {
                ++failures;
                std::cerr << "mismatch: " << arcnum::to_gauss_word(d) << " greedy="
                          << fast << " brute=" << slow << "\n";
                continue;
            }
            if (fast >= 3) {
                const arcnum::StarWitness w = arcnum::extract_star(d);
                const bool ok = w.params.a == fast - 2 && arcnum::verify_witness(w) &&
                                arcnum::brute_force_find_star(d, fast - 2).has_value();
                if (!ok) {
                    ++failures;
                    std::cerr << "bad witness: " << arcnum::to_gauss_word(d) << "\n";
                }
            } else if (fast == 2 && arcnum::brute_force_find_star(d, 1)) {
                ++failures;
                std::cerr << "unexpected star in arc-number-2 diagram: "
                          << arcnum::to_gauss_word(d) << "\n";
            }
        }
    }

    for (int i = 0; i < random_count; ++i) {
        const int n = 1 + i % max_chords;
        const ChordDiagram d = arcnum::random_diagram(n, seed + i);
        ++checked;
        if (arcnum::arc_number(d) != arcnum::brute_force_arc_number(d)) {
            ++failures;
            std::cerr << "mismatch: " << arcnum::to_gauss_word(d) << "\n";
        }
    }

    std::cout << "checked " << checked << " diagrams, " << failures
              << " failure(s)\n";
    return failures == 0 ? 0 : 1;
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> sizes;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) sizes.push_back(std::stoi(item));
    }
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arc numbers, minimal partitions and star witnesses for "
                 "chord diagrams (Gauss words)"};
    app.require_subcommand(1);

    std::string path = "-";
    bool json_mode = false;

    auto add_batch = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("file", path, "input file of Gauss words, or '-' for stdin")
            ->default_val("-");
        sub->add_flag("--json", json_mode, "one JSON record per input line");
        return sub;
    };

    CLI::App* arcnum_cmd =
        add_batch("arcnum", "arc number of each input word");
    CLI::App* partition_cmd =
        add_batch("partition", "minimal embedded partition of each input word");
    CLI::App* star_cmd =
        add_batch("star", "star subdiagram witness of each input word");
    CLI::App* canon_cmd = add_batch("canon", "canonical form of each input word");

    int star_t = 1, star_a = 0;
    CLI::App* gen_cmd = app.add_subcommand("gen-star", "emit the Gauss word of S(t,a)");
    gen_cmd->add_option("t", star_t, "star parameter t (>= 1)")->required();
    gen_cmd->add_option("a", star_a, "star parameter a (>= 0)")->required();

    std::string render_word;
    std::string render_output;
    arcnum::RenderOptions render_options;
    CLI::App* render_cmd = app.add_subcommand("render", "SVG figure of a diagram");
    render_cmd->add_option("word", render_word, "Gauss word")->required();
    render_cmd->add_flag("--cuts", render_options.show_cuts,
                         "tick marks at the cuts of a minimal partition");
    render_cmd->add_flag("--witness", render_options.show_witness,
                         "highlight an extracted star witness (arc number >= 3)");
    bool no_labels = false;
    render_cmd->add_flag("--no-labels", no_labels, "omit position labels");
    render_cmd->add_option("-o,--output", render_output, "output file (default stdout)");

    std::string bench_sizes = "256,512,1024,2048";
    std::uint64_t bench_seed = 1;
    int bench_runs = 5;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time arc_number on seeded random diagrams");
    bench_cmd->add_option("--sizes", bench_sizes, "comma-separated diagram sizes");
    bench_cmd->add_option("--seed", bench_seed, "random seed");
    bench_cmd->add_option("--runs", bench_runs, "runs per size (median reported)");

    int check_max_n = 4;
    int check_random = 200;
    int check_max_chords = 8;
    std::uint64_t check_seed = 12345;
    CLI::App* check_cmd = app.add_subcommand(
        "oracle-check", "cross-validate the greedy algorithm against the oracle");
    check_cmd->group("");  // hidden
    check_cmd->add_option("--max-n", check_max_n, "census bound")
        ->check(CLI::Range(0, arcnum::kMaxCensusChords));
    check_cmd->add_option("--random", check_random, "number of random diagrams");
    check_cmd->add_option("--max-chords", check_max_chords, "random diagram size cap")
        ->check(CLI::Range(1, arcnum::kMaxBruteForceChords));
    check_cmd->add_option("--seed", check_seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (arcnum_cmd->parsed()) return cmd_arcnum(path, json_mode);
        if (partition_cmd->parsed()) return cmd_partition(path, json_mode);
        if (star_cmd->parsed()) return cmd_star(path, json_mode);
        if (canon_cmd->parsed()) return cmd_canon(path, json_mode);
        if (gen_cmd->parsed()) return cmd_gen_star(star_t, star_a);
        if (render_cmd->parsed()) {
            render_options.show_labels = !no_labels;
            return cmd_render(render_word, render_options, render_output);
        }
        if (bench_cmd->parsed())
            return cmd_bench(parse_sizes(bench_sizes), bench_seed, bench_runs);
        if (check_cmd->parsed())
            return cmd_oracle_check(check_max_n, check_random, check_max_chords,
                                    check_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
