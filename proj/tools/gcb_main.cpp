// Batch front end: runs verification documents and corpus directories.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or
// schema error.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gcb/documents.hpp"
#include "gcb/toml_lite.hpp"

namespace fs = std::filesystem;
using gcb::DocumentResult;
using gcb::Json;
using gcb::SchemaError;

namespace {

struct Options {
    std::string format = "human";
    std::string out_path;
    int jobs = 1;
    std::uint64_t seed = 0;
    bool has_seed = false;
};

Json load_document(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (path.extension() == ".toml") return gcb::toml_lite::parse(buffer.str());
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw SchemaError("JSON parse error in " + path.string() + ": " + e.what());
    }
}

struct RunOutcome {
    std::string document;
    int exit_code = 0; // 0 pass, 1 fail, 2 error
    std::string error;
    DocumentResult result;

    Json to_json() const {
        Json j;
        j["document"] = document;
        if (exit_code == 2) {
            j["error"] = error;
        } else {
            j = result.to_json();
            j["document"] = document;
        }
        j["exit"] = exit_code;
        return j;
    }
};

RunOutcome run_one(const fs::path& path, const Options& opt) {
    RunOutcome out;
    out.document = path.string();
    try {
        Json doc = load_document(path);
        out.result = gcb::run_document(doc, opt.seed, opt.has_seed);
        out.exit_code = out.result.pass ? 0 : 1;
    } catch (const SchemaError& e) {
        out.exit_code = 2;
        out.error = e.what();
    } catch (const std::exception& e) {
        out.exit_code = 2;
        out.error = e.what();
    }
    return out;
}

void write_output(const Json& j, const Options& opt) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        f << j.dump(2) << "\n";
    }
    if (opt.format == "json") std::cout << j.dump(2) << "\n";
}

int cmd_run(const fs::path& path, const Options& opt) {
    RunOutcome outcome = run_one(path, opt);
    if (opt.format == "human") {
        if (outcome.exit_code == 2)
            std::cout << outcome.document << ": input error: " << outcome.error << "\n";
        else
            std::cout << outcome.result.str();
    }
    write_output(outcome.to_json(), opt);
    return outcome.exit_code;
}

int cmd_corpus(const fs::path& dir, const Options& opt) {
    std::vector<fs::path> docs;
    if (!fs::is_directory(dir)) {
        std::cout << "not a directory: " << dir.string() << "\n";
        return 2;
    }
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() &&
            (entry.path().extension() == ".json" || entry.path().extension() == ".toml"))
            docs.push_back(entry.path());
    std::sort(docs.begin(), docs.end());

    std::vector<RunOutcome> outcomes(docs.size());
    const int jobs = std::max(1, opt.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= docs.size()) break;
            outcomes[i] = run_one(docs[i], opt);
        }
    };
    if (jobs == 1 || docs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    int pass = 0, fail = 0, errors = 0;
    for (const auto& o : outcomes) (o.exit_code == 0 ? pass : o.exit_code == 1 ? fail : errors) += 1;

    if (opt.format == "human") {
        for (const auto& o : outcomes) {
            const char* verdict = o.exit_code == 0 ? "pass" : o.exit_code == 1 ? "FAIL" : "ERROR";
            std::cout << "  [" << verdict << "] " << fs::path(o.document).filename().string();
            if (o.exit_code == 2) std::cout << " (" << o.error << ")";
            std::cout << "\n";
        }
        std::cout << outcomes.size() << " documents: " << pass << " passed, " << fail << " failed, "
                  << errors << " errors\n";
    }
    Json summary;
    summary["documents"] = Json::array();
    for (const auto& o : outcomes) summary["documents"].push_back(o.to_json());
    summary["summary"] = {{"total", outcomes.size()}, {"passed", pass}, {"failed", fail}, {"errors", errors}};
    write_output(summary, opt);

    if (errors) return 2;
    return fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of shifted cotangent structures"};
    app.require_subcommand(1);

    Options opt;
    std::string path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: human or json")
            ->check(CLI::IsMember({"human", "json"}));
        cmd->add_option("--out", opt.out_path, "write the JSON report to a file");
        cmd->add_option("--jobs", opt.jobs, "parallel workers for corpus runs");
        cmd->add_option("--seed", opt.seed, "override the seed of randomized documents")
            ->each([&](const std::string&) { opt.has_seed = true; });
    };

    CLI::App* run = app.add_subcommand("run", "run a single document");
    run->add_option("document", path, "path to a .json or .toml document")->required();
    add_common(run);

    CLI::App* corpus = app.add_subcommand("corpus", "run every document in a directory");
    corpus->add_option("directory", path, "directory of documents")->required();
    add_common(corpus);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(path, opt);
        return cmd_corpus(path, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
