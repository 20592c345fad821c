#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "t1p/families.hpp"
#include "t1p/io.hpp"
#include "t1p/json_io.hpp"
#include "t1p/oracle.hpp"
#include "t1p/pipeline.hpp"

using namespace t1p;
namespace fs = std::filesystem;

namespace {

enum Exit { kAccept = 0, kReject = 1, kInput = 2, kTimeout = 3 };

struct Options {
    std::string format = "json";
    std::uint64_t seed = 1;
    int oracle_limit = 12;
    int jobs = 1;
    double time_budget = 0;
    std::string trace_path;
};

Graph load(const std::string& path) {
    if (!fs::exists(path)) throw ParseError("cannot open " + path, 0);
    Graph g = read_graph_file(path);
    if (g.vertex_count() == 0) throw ParseError("empty graph in " + path, 0);
    return g;
}

RecognizeOptions recognize_options(const Options& o) {
    RecognizeOptions r;
    r.time_budget_s = o.time_budget;
    r.oracle_limit = std::max(o.oracle_limit, 6);
    return r;
}

int exit_of(const RecognitionResult& r) {
    if (r.budget_exceeded) return kTimeout;
    return r.is_t1p ? kAccept : kReject;
}

void print_text(const RecognitionResult& r) {
    if (r.is_t1p)
        std::cout << "T1P: yes\ncount: " << r.count << "\ncrossings: " << r.witness->crossings.size() << '\n';
    else
        std::cout << "T1P: no\nreason: " << r.reason << '\n';
}

int cmd_recognize(const std::string& input, const Options& o, bool count_only) {
    Graph g = load(input);
    RecognitionResult r = recognize(g, recognize_options(o));
    if (!o.trace_path.empty()) {
        std::ofstream tf(o.trace_path);
        tf << trace_to_jsonl(r.trace);
    }
    if (count_only) {
        if (o.format == "json") {
            Json j;
            j["schema"] = 1;
            j["count"] = count_to_json(r.count);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << r.count << '\n';
        }
    } else if (o.format == "json") {
        std::cout << result_to_json(r).dump() << '\n';
    } else {
        print_text(r);
    }
    return exit_of(r);
}

int cmd_witness(const std::string& input, const Options& o) {
    Graph g = load(input);
    RecognitionResult r = recognize(g, recognize_options(o));
    if (!r.is_t1p) {
        std::cerr << "not T1P: " << r.reason << '\n';
        return exit_of(r);
    }
    if (o.format == "json") {
        std::cout << embedding_to_json(*r.witness).dump(2) << '\n';
    } else {
        for (const auto& [v, nb] : r.witness->skeleton) {
            std::cout << v << ':';
            for (Vertex w : nb) std::cout << ' ' << w;
            std::cout << '\n';
        }
        for (const Crossing& c : r.witness->crossings)
            std::cout << "cross " << to_string(c.first) << ' ' << to_string(c.second) << " at " << c.dummy << '\n';
    }
    return kAccept;
}

int cmd_oracle(const std::string& input, const Options& o) {
    Graph g = load(input);
    OracleConstraints c;
    c.max_vertices = o.oracle_limit;
    if (o.time_budget > 0) c.time_budget_s = o.time_budget;
    long oc = 0;
    try {
        oc = oracle_count(g, c);
    } catch (const OracleTimeout& e) {
        std::cerr << "oracle timeout: " << e.what() << '\n';
        return kTimeout;
    } catch (const OracleLimit& e) {
        std::cerr << e.what() << '\n';
        return kInput;
    }
    RecognitionResult r = recognize(g, recognize_options(o));
    if (r.budget_exceeded) return kTimeout;
    const bool match = r.count == oc;
    if (o.format == "json") {
        Json j;
        j["schema"] = 1;
        j["oracle"] = oc;
        j["pipeline"] = count_to_json(r.count);
        j["match"] = match;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "oracle " << oc << " pipeline " << r.count << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    return match ? kAccept : kReject;
}

int cmd_generate(const std::vector<std::string>& spec, const Options& o, int flips) {
    if (spec.empty()) throw ParseError("generate needs a family", 0);
    const std::string& fam = spec[0];
    auto num = [&](std::size_t i) {
        if (i >= spec.size()) throw ParseError("generate " + fam + ": missing argument", 0);
        return std::stoi(spec[i]);
    };
    Graph g;
    if (fam == "two-star") {
        if (spec.size() < 3) throw ParseError("usage: generate two-star VARIANT K", 0);
        g = gen_two_star(parse_two_star_variant(spec[1]), num(2));
    } else if (fam == "triangulation") {
        g = gen_planar_triangulation(num(1), o.seed, flips);
    } else if (fam == "planted") {
        g = gen_planted_t1p(num(1), num(2), o.seed, flips).graph;
    } else if (fam == "catalog") {
        if (spec.size() < 2) throw ParseError("usage: generate catalog NAME", 0);
        g = catalog_small(spec[1]);
    } else {
        throw GraphError("unknown family \"" + fam + "\"");
    }
    if (o.format == "graph6")
        std::cout << write_graph6(g) << '\n';
    else
        write_edge_list(std::cout, g);
    return kAccept;
}

// "# expect: count=N" or "# expect: reject" inside a corpus file.
std::optional<std::string> expectation(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        auto at = line.find("expect:");
        if (line.rfind('#', 0) != 0 || at == std::string::npos) continue;
        std::string v = line.substr(at + 7);
        v.erase(0, v.find_first_not_of(' '));
        v.erase(v.find_last_not_of(" \r") + 1);
        return v;
    }
    return std::nullopt;
}

int cmd_corpus(const std::string& dir, const Options& o) {
    if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir, 0);
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    struct Row {
        std::string name, decision, count, status;
        int n = 0, m = 0;
        double ms = 0;
    };
    std::vector<Row> rows(files.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < files.size();) {
            Row& row = rows[i];
            row.name = fs::path(files[i]).filename().string();
            try {
                Graph g = load(files[i]);
                row.n = g.vertex_count();
                row.m = g.edge_count();
                auto t0 = std::chrono::steady_clock::now();
                RecognitionResult r = recognize(g, recognize_options(o));
                row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                row.decision = r.budget_exceeded ? "timeout" : r.is_t1p ? "accept" : "reject";
                row.count = r.count.str();
                auto want = expectation(files[i]);
                if (!want) row.status = "-";
                else if (*want == "reject") row.status = r.is_t1p ? "MISMATCH" : "MATCH";
                else if (want->rfind("count=", 0) == 0) row.status = want->substr(6) == row.count ? "MATCH" : "MISMATCH";
                else row.status = "BAD-EXPECT";
            } catch (const std::exception& e) {
                row.decision = "error";
                row.status = std::string("ERROR ") + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, o.jobs); ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    bool bad = false;
    if (o.format == "json") {
        Json arr = Json::array();
        for (const Row& r : rows) {
            Json j;
            j["file"] = r.name;
            j["n"] = r.n;
            j["m"] = r.m;
            j["decision"] = r.decision;
            j["count"] = r.count;
            j["ms"] = r.ms;
            j["status"] = r.status;
            arr.push_back(std::move(j));
        }
        Json out;
        out["schema"] = 1;
        out["graphs"] = std::move(arr);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "file\tn\tm\tdecision\tcount\tms\tstatus\n";
        for (const Row& r : rows)
            std::cout << r.name << '\t' << r.n << '\t' << r.m << '\t' << r.decision << '\t' << r.count << '\t'
                      << r.ms << '\t' << r.status << '\n';
    }
    for (const Row& r : rows) bad = bad || (r.status != "MATCH" && r.status != "-");
    return bad ? kReject : kAccept;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognize triangulated 1-planar graphs and count their embeddings"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "json | text (generate: edges | graph6)");
    app.add_option("--seed", o.seed, "generator seed");
    app.add_option("--oracle-limit", o.oracle_limit, "largest n the oracle accepts");
    app.add_option("--jobs", o.jobs, "corpus worker threads");
    app.add_option("--time-budget", o.time_budget, "seconds per graph (0: unlimited)");

    std::string input;
    auto* rec = app.add_subcommand("recognize", "decide T1P, count embeddings, emit a witness");
    rec->add_option("input", input, "edge list or graph6 file")->required();
    rec->add_option("--trace", o.trace_path, "write the reduction trace as JSON lines");
    auto* cnt = app.add_subcommand("count", "number of T1P embeddings");
    cnt->add_option("input", input)->required();
    auto* wit = app.add_subcommand("witness", "witness embedding");
    wit->add_option("input", input)->required();
    auto* orc = app.add_subcommand("oracle", "compare the brute-force oracle with the pipeline");
    orc->add_option("input", input)->required();
    std::vector<std::string> spec;
    int flips = -1;
    auto* gen = app.add_subcommand("generate", "two-star VARIANT K | triangulation N | planted N C | catalog NAME");
    gen->add_option("spec", spec)->required();
    gen->add_option("--flips", flips, "edge-flip attempts (default n)");
    std::string dir;
    auto* cor = app.add_subcommand("corpus", "recognize every file of a directory");
    cor->add_option("dir", dir)->required();

    for (auto* sub : {rec, cnt, wit, orc, gen, cor}) {
        sub->add_option("--format", o.format);
        sub->add_option("--seed", o.seed);
        sub->add_option("--oracle-limit", o.oracle_limit);
        sub->add_option("--jobs", o.jobs);
        sub->add_option("--time-budget", o.time_budget);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInput;
    }
    if (o.format != "json" && o.format != "text" && o.format != "graph6" && o.format != "edges") {
        std::cerr << "unknown format " << o.format << '\n';
        return kInput;
    }
    try {
        if (rec->parsed()) return cmd_recognize(input, o, false);
        if (cnt->parsed()) return cmd_recognize(input, o, true);
        if (wit->parsed()) return cmd_witness(input, o);
        if (orc->parsed()) return cmd_oracle(input, o);
        if (gen->parsed()) return cmd_generate(spec, o, flips);
        if (cor->parsed()) return cmd_corpus(dir, o);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
