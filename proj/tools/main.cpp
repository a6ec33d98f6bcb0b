// Command-line front end: dataset generation, exact inference on model
// files, graph-perturbation prompt sets, scoring, structure-discovery
// scoring, and the end-to-end oracle self-check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "causalbench/dataset.hpp"
#include "causalbench/rng.hpp"
#include "causalbench/evalharness.hpp"
#include "json.hpp"

namespace {

using namespace causalbench;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // validation or assertion failure
constexpr int kExitUsage = 2;    // bad invocation

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse_error, path + " is not valid JSON");
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io_error, "cannot write " + path);
    out << content;
}

std::vector<NoiseKind> parse_noise_list(const std::string& csv) {
    std::vector<NoiseKind> kinds;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) kinds.push_back(noise_kind_from_string(token));
    }
    return kinds;
}

struct GenerateArgs {
    std::string config_path;
    std::string out;
    std::string noise_csv;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    int workers = -1;
    double noise_prob = 1.0;
    bool has_seed = false, has_count = false;
};

int run_generate(const GenerateArgs& args) {
    GenerationConfig config;
    std::string config_path = args.config_path;
    if (config_path.empty())
        if (const char* env = std::getenv("CAUSALBENCH_CONFIG")) config_path = env;
    if (!config_path.empty()) config = GenerationConfig::from_json(load_json_file(config_path));

    if (args.has_seed) config.master_seed = args.seed;
    if (args.has_count) config.instance_count = args.count;
    if (!args.out.empty()) config.output_path = args.out;
    if (args.workers >= 0) config.workers = args.workers;
    if (!args.noise_csv.empty()) {
        config.noise.probability.clear();
        for (NoiseKind kind : parse_noise_list(args.noise_csv))
            config.noise.probability[kind] = args.noise_prob;
    }

    config.validate();
    DatasetManifest manifest = generate_dataset(config);
    std::cout << "wrote " << manifest.instance_count << " instance(s) to " << config.output_path
              << "\nmanifest " << manifest_path_for(config.output_path) << " digest "
              << manifest.digest << "\n";
    return kExitOk;
}

int run_infer(const std::string& scm_path, const std::string& query_path) {
    Scm scm = scm_from_json(load_json_file(scm_path));
    auto violations = validate_scm(scm);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "model violation: " << v << "\n";
        return kExitFailure;
    }
    Query query = query_from_json(load_json_file(query_path));
    std::cout << answer_query(scm, query).to_text() << "\n";
    return kExitOk;
}

int run_perturb(const std::string& data_path, const std::string& kind_name, std::size_t count,
                std::uint64_t seed, const std::string& out_path) {
    PerturbKind kind = perturb_kind_from_string(kind_name);
    std::vector<Instance> instances = read_records(data_path);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(ErrorCode::io_error, "cannot write " + out_path);

    std::size_t skipped = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const Instance& inst = instances[i];
        std::uint64_t edit_seed =
            derive_seed(seed, (static_cast<std::uint64_t>(kind) << 32) ^ (count << 20) ^ i);
        json record{{"id", inst.id}};
        try {
            auto [perturbed, records] = perturb_graph(inst.scm.dag, kind, count, edit_seed);
            record["prompt"] = build_structured_prompt(inst, perturbed, inst.scm.metas);
            json edits = json::array();
            for (const auto& r : records)
                edits.push_back({{"kind", to_string(r.kind)},
                                 {"edge", {r.edge.first, r.edge.second}},
                                 {"disconnected_after", r.disconnected_after}});
            record["edits"] = edits;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::no_valid_perturbation &&
                e.code() != ErrorCode::precondition)
                throw;
            record["error"] = e.what();
            ++skipped;
        }
        out << record.dump() << "\n";
    }
    std::cout << "wrote prompts for " << instances.size() - skipped << " instance(s) to "
              << out_path;
    if (skipped) std::cout << " (" << skipped << " skipped)";
    std::cout << "\n";
    return kExitOk;
}

int run_score(const std::string& data_path, const std::string& responses_path, double tolerance,
              const std::string& out_prefix) {
    std::vector<Instance> instances = read_records(data_path);
    ReplayBackend replay = ReplayBackend::from_file(responses_path);
    std::map<std::string, std::string> responses;
    for (const auto& inst : instances) responses[inst.id] = replay.answer("", inst.id);
    ScoreReport report = score_answers(instances, responses, tolerance);
    write_text_file(out_prefix + ".txt", report.to_text());
    write_text_file(out_prefix + ".json", report.to_json().dump(2) + "\n");
    std::cout << report.to_text();
    return kExitOk;
}

int run_discover_score(const std::string& data_path, const std::string& predictions_path,
                       const std::string& out_prefix) {
    std::vector<Instance> instances = read_records(data_path);
    ReplayBackend replay = ReplayBackend::from_file(predictions_path);
    std::map<std::string, std::vector<Edge>> predicted;
    for (const auto& inst : instances) {
        std::string response = replay.answer("", inst.id);
        try {
            predicted[inst.id] = parse_graph_response(response, inst.scm.metas).edges;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::empty_parse) throw;
            predicted[inst.id] = {};  // no edges recovered
        }
    }
    StructureReport report = score_structure_discovery(predicted, instances);
    write_text_file(out_prefix + ".txt", report.to_text());
    write_text_file(out_prefix + ".json", report.to_json().dump(2) + "\n");
    std::cout << report.to_text();
    return kExitOk;
}

int run_oracle_check(const std::string& data_path, int workers) {
    std::vector<Instance> instances = read_records(data_path);
    if (instances.empty()) fail(ErrorCode::precondition, "dataset is empty");
    ExactOracleBackend oracle(instances);
    // full pipeline: structured prompt -> backend -> parse -> score, on the
    // clean variant at tolerance zero
    auto responses = collect_responses(instances, oracle, workers, /*use_noisy=*/false);
    ScoreReport report = score_answers(instances, responses, 0.0);
    std::cout << "oracle accuracy " << report.overall.correct << "/" << report.overall.total
              << "\n";
    if (report.overall.correct != report.overall.total) {
        std::cerr << "oracle check failed: expected exact 1.0 clean accuracy\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic causal-reasoning benchmark engine"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Generate a dataset from a config");
    generate->add_option("--config", gen.config_path,
                         "Generation config JSON (or $CAUSALBENCH_CONFIG)");
    generate->add_option("--seed", gen.seed, "Master seed override")
        ->each([&](const std::string&) { gen.has_seed = true; });
    generate->add_option("--count", gen.count, "Instance count override")
        ->each([&](const std::string&) { gen.has_count = true; });
    generate->add_option("--out", gen.out, "Output record file");
    generate->add_option("--workers", gen.workers, "Worker threads (0 = all cores)");
    generate->add_option("--noise", gen.noise_csv,
                         "Comma list of noise kinds to enable (VP,IV,PM,CS,CI,QP,BIP)");
    generate->add_option("--noise-prob", gen.noise_prob,
                         "Application probability for kinds named in --noise");

    std::string infer_scm, infer_query;
    CLI::App* infer = app.add_subcommand("infer", "Answer one query on a model file");
    infer->add_option("--scm", infer_scm, "Model JSON file")->required();
    infer->add_option("--query", infer_query, "Query JSON file")->required();

    std::string perturb_data, perturb_kind = "ED", perturb_out = "perturbed_prompts.jsonl";
    std::size_t perturb_count = 1;
    std::uint64_t perturb_seed = 0;
    CLI::App* perturb =
        app.add_subcommand("perturb", "Emit structured prompts with perturbed graphs");
    perturb->add_option("--data", perturb_data, "Dataset record file")->required();
    perturb->add_option("--perturb-kind", perturb_kind, "ED, FE, or DR");
    perturb->add_option("--perturb-count", perturb_count, "Edges to edit per instance");
    perturb->add_option("--seed", perturb_seed, "Perturbation seed");
    perturb->add_option("--out", perturb_out, "Output prompt file");

    std::string score_data, score_responses, score_out = "score_report";
    double score_tolerance = 0.01;
    CLI::App* score = app.add_subcommand("score", "Score a response file against ground truth");
    score->add_option("--data", score_data, "Dataset record file")->required();
    score->add_option("--responses", score_responses, "Line-delimited {id, response} file")
        ->required();
    score->add_option("--tolerance", score_tolerance, "Absolute numeric tolerance");
    score->add_option("--out", score_out, "Report file prefix");

    std::string disc_data, disc_predictions, disc_out = "structure_report";
    CLI::App* discover =
        app.add_subcommand("discover-score", "Score predicted graphs edge by edge");
    discover->add_option("--data", disc_data, "Dataset record file")->required();
    discover->add_option("--predictions", disc_predictions,
                         "Line-delimited {id, response} file with edge lists")
        ->required();
    discover->add_option("--out", disc_out, "Report file prefix");

    std::string check_data;
    int check_workers = 0;
    CLI::App* check =
        app.add_subcommand("oracle-check", "Assert exact oracle accuracy end to end");
    check->add_option("--data", check_data, "Dataset record file")->required();
    check->add_option("--workers", check_workers, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        if (infer->parsed()) return run_infer(infer_scm, infer_query);
        if (perturb->parsed())
            return run_perturb(perturb_data, perturb_kind, perturb_count, perturb_seed,
                               perturb_out);
        if (score->parsed()) return run_score(score_data, score_responses, score_tolerance,
                                              score_out);
        if (discover->parsed()) return run_discover_score(disc_data, disc_predictions, disc_out);
        if (check->parsed()) return run_oracle_check(check_data, check_workers);
    } catch (const causalbench::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
