#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "causalbench/noise.hpp"

namespace causalbench {

inline constexpr int kDatasetFormatVersion = 1;

/// Campaign parameters. Mix maps must each sum to 1.
struct GenerationConfig {
    std::uint64_t master_seed = 0;
    std::size_t instance_count = 0;
    int node_min = 3;
    int node_max = 7;
    std::map<Motif, double> motif_mix = {{Motif::chain, 0.2},
                                         {Motif::fork, 0.15},
                                         {Motif::collider, 0.15},
                                         {Motif::multi_parent, 0.2},
                                         {Motif::mixed, 0.3}};
    std::map<ScenarioDomain, double> scenario_mix = {{ScenarioDomain::medicine, 0.4},
                                                     {ScenarioDomain::education, 0.3},
                                                     {ScenarioDomain::economics, 0.3}};
    std::map<QueryKind, double> question_mix = {{QueryKind::observational, 0.4},
                                                {QueryKind::interventional, 0.2},
                                                {QueryKind::counterfactual, 0.25},
                                                {QueryKind::attributional, 0.15}};
    NoiseConfig noise;          // per-kind probabilities default to 0 (clean dataset)
    MechanismConfig mechanism;
    double boolean_fraction = 0.25;  // of counterfactual questions rendered yes/no
    std::string output_path;
    int workers = 0;  // 0 = hardware concurrency
    std::string id_prefix = "cb";

    void validate() const;  // throws config_error
    nlohmann::json to_json() const;
    static GenerationConfig from_json(const nlohmann::json& j);
};

struct InstanceMetadata {
    int node_count = 0;
    Motif motif = Motif::mixed;
    ScenarioDomain scenario = ScenarioDomain::medicine;
    QueryKind question_kind = QueryKind::observational;
    std::vector<NoiseKind> noise_kinds;  // applied kinds, in application order
    std::vector<std::string> skips;      // "<kind>: reason" for non-applicable kinds
    std::uint64_t master_seed = 0;
    std::uint64_t index = 0;
    std::uint64_t instance_seed = 0;
};

/// One benchmark record with parallel clean/noisy variants. The answer is
/// computed once from the clean model and shared by both variants.
struct Instance {
    std::string id;
    Scm scm;
    std::vector<Statement> background_clean;
    std::vector<Statement> background_noisy;
    std::string question_clean;
    std::string question_noisy;
    Assignment observations_clean;
    Assignment observations_noisy;
    Query query;
    Answer answer;
    std::vector<NoiseRecord> noise_records;       // applied records only
    std::vector<AddedVariable> added_variables;   // IV/CI extras on the noisy side
    InstanceMetadata metadata;
};

struct DatasetManifest {
    int format_version = kDatasetFormatVersion;
    std::size_t instance_count = 0;
    std::string digest;  // fnv1a-64 over the dataset file bytes
    nlohmann::json config_echo;
};

/// Deterministic pipeline for one record. The per-instance seed is
/// mix64(master + 0x9E3779B97F4A7C15 * (index+1)); see rng.hpp.
Instance generate_instance(const GenerationConfig& config, std::size_t index);

/// Generates all instances (in parallel when config.workers != 1), writes the
/// record file and its manifest sidecar, and returns the manifest. Output is
/// byte-identical for any worker count.
DatasetManifest generate_dataset(const GenerationConfig& config);

void write_records(const std::vector<Instance>& instances, const std::string& path);
std::vector<Instance> read_records(const std::string& path);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json scm_to_json(const Scm& scm);
Scm scm_from_json(const nlohmann::json& j);
nlohmann::json query_to_json(const Query& query);
Query query_from_json(const nlohmann::json& j);
nlohmann::json answer_to_json(const Answer& answer);
Answer answer_from_json(const nlohmann::json& j);

std::string file_digest_hex(const std::string& path);
std::string manifest_path_for(const std::string& dataset_path);
void write_manifest(const DatasetManifest& manifest, const std::string& dataset_path);
DatasetManifest read_manifest(const std::string& dataset_path);

}  // namespace causalbench
