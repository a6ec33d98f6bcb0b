#include "causalbench/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "causalbench/rng.hpp"

namespace causalbench {

namespace {

using nlohmann::json;

template <class K>
K weighted_pick(Rng& rng, const std::map<K, double>& mix) {
    double r = rng.real01();
    double cum = 0.0;
    for (const auto& [key, weight] : mix) {
        cum += weight;
        if (r < cum) return key;
    }
    return mix.rbegin()->first;
}

template <class K>
void check_mix(const std::map<K, double>& mix, const char* name) {
    if (mix.empty()) fail(ErrorCode::config_error, std::string(name) + " mix is empty");
    double sum = 0.0;
    for (const auto& [key, weight] : mix) {
        if (weight < 0.0) fail(ErrorCode::config_error, std::string(name) + " mix has a negative weight");
        sum += weight;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        fail(ErrorCode::config_error, std::string(name) + " mix must sum to 1");
}

std::vector<NodeId> ancestors_of(const Dag& dag, NodeId target) {
    std::vector<bool> seen(dag.node_count, false);
    std::vector<NodeId> stack{target}, out;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId p : dag.parents_of(v))
            if (!seen[p]) {
                seen[p] = true;
                out.push_back(p);
                stack.push_back(p);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// pipeline stage tags for per-instance sub-seeds
enum Stage : std::uint64_t {
    kStageShape = 1,
    kStageGraph,
    kStageGround,
    kStageMechanism,
    kStageWorld,
    kStageQuery,
    kStageRender,
    kStageNoisePick,
    kStageNoise,
};

Query build_query(const Scm& scm, QueryKind requested, Rng& rng, std::uint64_t world_seed,
                  double boolean_fraction, Assignment& observations_out,
                  QueryKind& actual_kind_out) {
    const Dag& dag = scm.dag;
    const NodeId sink = dag.topo.back();
    Query query;
    actual_kind_out = requested;

    auto world_for = [&](std::uint64_t attempt) {
        return sample_world(scm, derive_seed(world_seed, attempt));
    };

    switch (requested) {
        case QueryKind::observational: {
            query.kind = QueryKind::observational;
            bool joint_shape = dag.node_count >= 3 && rng.chance(0.3) &&
                               scm.domain_size(sink) == 2;
            if (joint_shape) {
                // "still affected" shape: root happened, outcome did not
                NodeId root = dag.topo.front();
                if (scm.domain_size(root) == 2 && root != sink) {
                    query.target = event_of({{root, 1}, {sink, 0}});
                    break;
                }
            }
            query.target = event_of({{sink, static_cast<int>(rng.below(scm.domain_size(sink)))}});
            if (rng.chance(0.4)) {
                Assignment world = world_for(0);
                NodeId e = dag.topo[rng.below(dag.node_count - 1)];
                if (e != sink) {
                    query.evidence = event_of({{e, world.get(e)}});
                    observations_out.set(e, world.get(e));
                }
            }
            break;
        }
        case QueryKind::interventional: {
            query.kind = QueryKind::interventional;
            NodeId pick = dag.topo[rng.below(dag.node_count - 1)];  // never the sink
            query.interventions.set(pick, static_cast<int>(rng.below(scm.domain_size(pick))));
            query.target = event_of({{sink, 1}});
            break;
        }
        case QueryKind::counterfactual: {
            query.kind = QueryKind::counterfactual;
            Assignment world = world_for(0);
            for (NodeId v = 0; v < dag.node_count; ++v) {
                query.evidence.push_back({v, {world.get(v)}});
                observations_out.set(v, world.get(v));
            }
            NodeId pick = dag.topo[rng.below(dag.node_count - 1)];
            int old_value = world.get(pick);
            int cardinality = static_cast<int>(scm.domain_size(pick));
            int new_value =
                cardinality == 2
                    ? 1 - old_value
                    : (old_value + 1 +
                       static_cast<int>(rng.below(static_cast<std::uint64_t>(cardinality - 1)))) %
                          cardinality;
            query.interventions.set(pick, new_value);
            query.target = event_of({{sink, 1}});
            query.boolean_form = rng.chance(boolean_fraction) && scm.domain_size(sink) == 2;
            break;
        }
        case QueryKind::attributional: {
            std::vector<NodeId> candidates;
            for (NodeId a : ancestors_of(dag, sink))
                if (scm.domain_size(a) == 2) candidates.push_back(a);
            if (candidates.empty() || scm.domain_size(sink) != 2) {
                // no binary cause available; fall back to an observational ask
                actual_kind_out = QueryKind::observational;
                query.kind = QueryKind::observational;
                query.target = event_of({{sink, 1}});
                return query;
            }
            NodeId cause = candidates[rng.below(candidates.size())];
            bool found = false;
            for (std::uint64_t attempt = 0; attempt < 1000 && !found; ++attempt) {
                Assignment world = world_for(attempt);
                if (world.get(cause) == 1 && world.get(sink) == 1) {
                    found = true;
                    for (NodeId v = 0; v < dag.node_count; ++v) {
                        query.evidence.push_back({v, {world.get(v)}});
                        observations_out.set(v, world.get(v));
                    }
                }
            }
            if (!found) {
                // cause=1 with outcome=1 is (nearly) unreachable in this model
                actual_kind_out = QueryKind::observational;
                query.kind = QueryKind::observational;
                query.target = event_of({{sink, 1}});
                return query;
            }
            query.kind = QueryKind::attributional;
            query.cause = cause;
            query.has_cause = true;
            query.target = event_of({{sink, 1}});
            break;
        }
    }
    return query;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

}  // namespace

void GenerationConfig::validate() const {
    if (instance_count == 0) fail(ErrorCode::config_error, "instance_count must be positive");
    if (node_min < 3 || node_max > 7 || node_min > node_max)
        fail(ErrorCode::config_error, "node-count range must lie inside [3,7]");
    check_mix(motif_mix, "motif");
    check_mix(scenario_mix, "scenario");
    check_mix(question_mix, "question");
    for (const auto& [kind, p] : noise.probability)
        if (p < 0.0 || p > 1.0)
            fail(ErrorCode::config_error,
                 std::string("noise probability out of range for ") + to_string(kind));
    if (noise.vp_delta <= 0.0 || noise.vp_delta >= 1.0)
        fail(ErrorCode::config_error, "vp_delta must be in (0,1)");
    if (boolean_fraction < 0.0 || boolean_fraction > 1.0)
        fail(ErrorCode::config_error, "boolean_fraction must be in [0,1]");
    if (mechanism.families.empty())
        fail(ErrorCode::config_error, "mechanism rule-family set is empty");
}

Instance generate_instance(const GenerationConfig& config, std::size_t index) {
    if (index >= config.instance_count)
        fail(ErrorCode::precondition, "instance index beyond configured count");
    const std::uint64_t instance_seed = derive_seed(config.master_seed, index);

    // stage 1: shape choices
    Rng shape_rng(derive_seed(instance_seed, kStageShape));
    int node_count =
        config.node_min + static_cast<int>(shape_rng.below(
                              static_cast<std::uint64_t>(config.node_max - config.node_min + 1)));
    Motif motif = weighted_pick(shape_rng, config.motif_mix);
    ScenarioDomain scenario = weighted_pick(shape_rng, config.scenario_mix);
    QueryKind requested_kind = weighted_pick(shape_rng, config.question_mix);

    // stages 2-4: graph, grounding, mechanisms
    Dag dag = sample_dag(derive_seed(instance_seed, kStageGraph),
                         static_cast<NodeId>(node_count), motif);
    std::vector<VariableMeta> metas =
        ground_graph(dag, scenario, derive_seed(instance_seed, kStageGround));
    Scm scm = sample_mechanisms(dag, metas, derive_seed(instance_seed, kStageMechanism),
                                config.mechanism);

    // stage 5: query + observations + exact answer
    Rng query_rng(derive_seed(instance_seed, kStageQuery));
    Assignment observations(dag.node_count);
    QueryKind actual_kind = requested_kind;
    Query query = build_query(scm, requested_kind, query_rng, derive_seed(instance_seed, kStageWorld),
                              config.boolean_fraction, observations, actual_kind);
    Answer answer = answer_query(scm, query);

    // stage 6: render the clean instance
    Rng render_rng(derive_seed(instance_seed, kStageRender));
    const Vocabulary& vocab = builtin_vocabulary(scenario);
    RenderableInstance clean;
    clean.domain = scenario;
    clean.statements = render_background(scm, metas, vocab);
    clean.observations = observations;
    clean.query = query;
    clean.question =
        render_question(query, metas, vocab, static_cast<int>(render_rng.below(2)));
    clean.clean_answer = answer;

    // stage 7: choose and compose noise
    Rng noise_rng(derive_seed(instance_seed, kStageNoisePick));
    std::set<NoiseKind> kinds;
    for (NoiseKind kind : noise_application_order()) {
        auto it = config.noise.probability.find(kind);
        double p = it == config.noise.probability.end() ? 0.0 : it->second;
        if (noise_rng.chance(p)) kinds.insert(kind);
    }
    RenderableInstance noisy = clean;
    std::vector<NoiseRecord> records;
    if (!kinds.empty()) {
        auto [result, all_records] =
            compose_noise(clean, scm, kinds, derive_seed(instance_seed, kStageNoise), config.noise);
        noisy = std::move(result);
        records = std::move(all_records);
    }

    Instance inst;
    inst.id = config.id_prefix + "-" + hex64(config.master_seed) + "-" + std::to_string(index);
    inst.scm = std::move(scm);
    inst.background_clean = clean.statements;
    inst.background_noisy = noisy.statements;
    inst.question_clean = clean.question;
    inst.question_noisy = noisy.question;
    inst.observations_clean = clean.observations;
    inst.observations_noisy = noisy.observations;
    inst.query = query;
    inst.answer = answer;
    inst.added_variables = noisy.added_variables;
    for (auto& record : records) {
        if (record.applied) {
            inst.metadata.noise_kinds.push_back(record.kind);
            inst.noise_records.push_back(std::move(record));
        } else {
            inst.metadata.skips.push_back(std::string(to_string(record.kind)) + ": " +
                                          record.reason);
        }
    }
    inst.metadata.node_count = node_count;
    inst.metadata.motif = motif;
    inst.metadata.scenario = scenario;
    inst.metadata.question_kind = actual_kind;
    inst.metadata.master_seed = config.master_seed;
    inst.metadata.index = index;
    inst.metadata.instance_seed = instance_seed;
    return inst;
}

DatasetManifest generate_dataset(const GenerationConfig& config) {
    config.validate();
    if (config.output_path.empty())
        fail(ErrorCode::config_error, "generation config has no output path");

    std::vector<Instance> instances(config.instance_count);
    unsigned workers = config.workers > 0 ? static_cast<unsigned>(config.workers)
                                          : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(config.instance_count));

    if (workers <= 1) {
        for (std::size_t i = 0; i < config.instance_count; ++i)
            instances[i] = generate_instance(config, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::atomic<bool> failed{false};
        std::string error_message;
        std::mutex error_mutex;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= config.instance_count || failed.load()) return;
                    try {
                        instances[i] = generate_instance(config, i);
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        failed.store(true);
                        error_message = e.what();
                        return;
                    }
                }
            });
        for (auto& t : pool) t.join();
        if (failed.load()) fail(ErrorCode::io_error, "generation failed: " + error_message);
    }

    write_records(instances, config.output_path);

    DatasetManifest manifest;
    manifest.instance_count = config.instance_count;
    manifest.digest = file_digest_hex(config.output_path);
    manifest.config_echo = config.to_json();
    // runtime knobs, not dataset content
    manifest.config_echo.erase("workers");
    manifest.config_echo.erase("output_path");
    write_manifest(manifest, config.output_path);
    return manifest;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace {

json domain_to_json(const VarDomain& d) {
    return {{"kind", d.kind == DomainKind::binary ? "binary" : "categorical"},
            {"values", d.values}};
}

VarDomain domain_from_json(const json& j) {
    VarDomain d;
    std::string kind = j.at("kind").get<std::string>();
    d.kind = kind == "binary" ? DomainKind::binary : DomainKind::categorical;
    d.values = j.at("values").get<std::vector<std::string>>();
    return d;
}

json assignment_to_json(const Assignment& a) {
    json out = json::array();
    for (NodeId v = 0; v < a.size(); ++v)
        if (a.has(v)) out.push_back({v, a.get(v)});
    return out;
}

Assignment assignment_from_json(const json& j, std::size_t size) {
    Assignment a(size);
    for (const auto& pair : j) a.set(pair[0].get<NodeId>(), pair[1].get<int>());
    return a;
}

json event_to_json(const Event& e) {
    json out = json::array();
    for (const auto& term : e) out.push_back({term.var, term.allowed});
    return out;
}

Event event_from_json(const json& j) {
    Event e;
    for (const auto& term : j) e.push_back({term[0].get<NodeId>(), term[1].get<std::vector<int>>()});
    return e;
}

json noise_record_to_json(const NoiseRecord& r) {
    return {{"kind", to_string(r.kind)}, {"applied", r.applied},   {"reason", r.reason},
            {"affected", r.affected},   {"original", r.original}, {"replacement", r.replacement}};
}

NoiseRecord noise_record_from_json(const json& j) {
    NoiseRecord r;
    r.kind = noise_kind_from_string(j.at("kind").get<std::string>());
    r.applied = j.value("applied", true);
    r.reason = j.value("reason", std::string{});
    r.affected = j.value("affected", std::vector<std::string>{});
    r.original = j.value("original", json::object());
    r.replacement = j.value("replacement", json::object());
    return r;
}

json statements_to_json(const std::vector<Statement>& statements) {
    json out = json::array();
    for (const auto& s : statements) out.push_back(statement_to_json(s));
    return out;
}

std::vector<Statement> statements_from_json(const json& j) {
    std::vector<Statement> out;
    for (const auto& s : j) out.push_back(statement_from_json(s));
    return out;
}

}  // namespace

json scm_to_json(const Scm& scm) {
    json graph{{"node_count", scm.dag.node_count}, {"edges", scm.dag.edges},
               {"topo", scm.dag.topo}};
    json metas = json::array();
    for (const auto& m : scm.metas)
        metas.push_back({{"node", m.node},
                         {"name", m.name},
                         {"domain", domain_to_json(m.domain)},
                         {"observability", to_string(m.observability)},
                         {"role", to_string(m.role)},
                         {"scenario", m.scenario}});
    json cpts = json::array();
    for (const auto& c : scm.cpts) {
        json rows = json::array();
        for (const auto& row : c.rows) {
            json jrow = json::array();
            for (double p : row) jrow.push_back(format_probability(p));
            rows.push_back(jrow);
        }
        cpts.push_back({{"child", c.child},
                        {"parents", c.parents},
                        {"parent_cards", c.parent_cards},
                        {"rows", rows}});
    }
    return {{"graph", graph}, {"metas", metas}, {"cpts", cpts}};
}

Scm scm_from_json(const json& j) {
    Scm scm;
    const json& graph = j.at("graph");
    scm.dag.node_count = graph.at("node_count").get<NodeId>();
    for (const auto& e : graph.at("edges"))
        scm.dag.edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>()});
    std::sort(scm.dag.edges.begin(), scm.dag.edges.end());
    if (graph.contains("topo"))
        scm.dag.topo = graph["topo"].get<std::vector<NodeId>>();
    else
        scm.dag.topo = topo_order(scm.dag);
    for (const auto& m : j.at("metas")) {
        VariableMeta meta;
        meta.node = m.at("node").get<NodeId>();
        meta.name = m.at("name").get<std::string>();
        meta.domain = domain_from_json(m.at("domain"));
        meta.observability = observability_from_string(m.at("observability").get<std::string>());
        meta.role = role_from_string(m.at("role").get<std::string>());
        meta.scenario = m.at("scenario").get<std::string>();
        scm.metas.push_back(std::move(meta));
    }
    for (const auto& c : j.at("cpts")) {
        Cpt cpt;
        cpt.child = c.at("child").get<NodeId>();
        cpt.parents = c.at("parents").get<std::vector<NodeId>>();
        cpt.parent_cards = c.at("parent_cards").get<std::vector<std::size_t>>();
        for (const auto& jrow : c.at("rows")) {
            std::vector<double> row;
            for (const auto& p : jrow)
                row.push_back(p.is_string() ? std::stod(p.get<std::string>()) : p.get<double>());
            cpt.rows.push_back(std::move(row));
        }
        scm.cpts.push_back(std::move(cpt));
    }
    return scm;
}

json query_to_json(const Query& query) {
    json j{{"kind", to_string(query.kind)},
           {"target", event_to_json(query.target)},
           {"evidence", event_to_json(query.evidence)},
           {"interventions", assignment_to_json(query.interventions)},
           {"boolean_form", query.boolean_form},
           {"threshold", query.threshold}};
    if (query.has_cause) j["cause"] = query.cause;
    return j;
}

Query query_from_json(const json& j) {
    Query query;
    query.kind = query_kind_from_string(j.at("kind").get<std::string>());
    query.target = event_from_json(j.at("target"));
    query.evidence = event_from_json(j.at("evidence"));
    std::size_t max_var = 0;
    for (const auto& pair : j.at("interventions"))
        max_var = std::max<std::size_t>(max_var, pair[0].get<NodeId>() + 1);
    query.interventions = assignment_from_json(j.at("interventions"), max_var);
    query.boolean_form = j.value("boolean_form", false);
    query.threshold = j.value("threshold", 0.5);
    if (j.contains("cause")) {
        query.cause = j["cause"].get<NodeId>();
        query.has_cause = true;
    }
    return query;
}

json answer_to_json(const Answer& answer) {
    return {{"kind", answer.kind == Answer::Kind::boolean ? "boolean" : "probability"},
            {"text", answer.to_text()},
            {"probability", format_probability(answer.value)}};
}

Answer answer_from_json(const json& j) {
    Answer answer;
    answer.kind = j.at("kind").get<std::string>() == "boolean" ? Answer::Kind::boolean
                                                               : Answer::Kind::probability;
    answer.value = std::stod(j.at("probability").get<std::string>());
    answer.flag = j.at("text").get<std::string>() == "yes";
    return answer;
}

json instance_to_json(const Instance& inst) {
    json scm = scm_to_json(inst.scm);
    json added = json::array();
    for (const auto& v : inst.added_variables)
        added.push_back({{"name", v.name},
                         {"role", to_string(v.role)},
                         {"observability", to_string(v.observability)}});
    json records = json::array();
    for (const auto& r : inst.noise_records) records.push_back(noise_record_to_json(r));
    json noise_kinds = json::array();
    for (NoiseKind k : inst.metadata.noise_kinds) noise_kinds.push_back(to_string(k));

    return {{"format_version", kDatasetFormatVersion},
            {"id", inst.id},
            {"graph", scm.at("graph")},
            {"metas", scm.at("metas")},
            {"cpts", scm.at("cpts")},
            {"background_clean", statements_to_json(inst.background_clean)},
            {"background_noisy", statements_to_json(inst.background_noisy)},
            {"question_clean", inst.question_clean},
            {"question_noisy", inst.question_noisy},
            {"observations_clean", assignment_to_json(inst.observations_clean)},
            {"observations_noisy", assignment_to_json(inst.observations_noisy)},
            {"query", query_to_json(inst.query)},
            {"answer", answer_to_json(inst.answer)},
            {"noise_records", records},
            {"metadata",
             {{"node_count", inst.metadata.node_count},
              {"motif", to_string(inst.metadata.motif)},
              {"scenario", to_string(inst.metadata.scenario)},
              {"question_kind", to_string(inst.metadata.question_kind)},
              {"noise_kinds", noise_kinds},
              {"skips", inst.metadata.skips},
              {"added_variables", added},
              {"master_seed", inst.metadata.master_seed},
              {"index", inst.metadata.index},
              {"instance_seed", inst.metadata.instance_seed}}}};
}

Instance instance_from_json(const json& j) {
    int version = j.value("format_version", 0);
    if (version > kDatasetFormatVersion)
        fail(ErrorCode::schema_version_mismatch,
             "record format version " + std::to_string(version) + " is newer than supported " +
                 std::to_string(kDatasetFormatVersion));
    Instance inst;
    inst.id = j.at("id").get<std::string>();
    inst.scm = scm_from_json(
        json{{"graph", j.at("graph")}, {"metas", j.at("metas")}, {"cpts", j.at("cpts")}});
    inst.background_clean = statements_from_json(j.at("background_clean"));
    inst.background_noisy = statements_from_json(j.at("background_noisy"));
    inst.question_clean = j.at("question_clean").get<std::string>();
    inst.question_noisy = j.at("question_noisy").get<std::string>();
    inst.observations_clean =
        assignment_from_json(j.at("observations_clean"), inst.scm.dag.node_count);
    inst.observations_noisy =
        assignment_from_json(j.at("observations_noisy"), inst.scm.dag.node_count);
    inst.query = query_from_json(j.at("query"));
    inst.answer = answer_from_json(j.at("answer"));
    for (const auto& r : j.at("noise_records"))
        inst.noise_records.push_back(noise_record_from_json(r));

    const json& meta = j.at("metadata");
    inst.metadata.node_count = meta.at("node_count").get<int>();
    inst.metadata.motif = motif_from_string(meta.at("motif").get<std::string>());
    inst.metadata.scenario = scenario_from_string(meta.at("scenario").get<std::string>());
    inst.metadata.question_kind =
        query_kind_from_string(meta.at("question_kind").get<std::string>());
    for (const auto& k : meta.at("noise_kinds"))
        inst.metadata.noise_kinds.push_back(noise_kind_from_string(k.get<std::string>()));
    inst.metadata.skips = meta.value("skips", std::vector<std::string>{});
    for (const auto& v : meta.value("added_variables", json::array()))
        inst.added_variables.push_back(
            {v.at("name").get<std::string>(), role_from_string(v.at("role").get<std::string>()),
             observability_from_string(v.at("observability").get<std::string>())});
    inst.metadata.master_seed = meta.value("master_seed", 0ULL);
    inst.metadata.index = meta.value("index", 0ULL);
    inst.metadata.instance_seed = meta.value("instance_seed", 0ULL);
    return inst;
}

void write_records(const std::vector<Instance>& instances, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io_error, "cannot open for writing: " + path);
    for (const auto& inst : instances) out << instance_to_json(inst).dump() << '\n';
    if (!out) fail(ErrorCode::io_error, "short write to " + path);
}

std::vector<Instance> read_records(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_error, "cannot open for reading: " + path);
    std::vector<Instance> instances;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            fail(ErrorCode::parse_error, "malformed record at line " + std::to_string(line_no));
        try {
            instances.push_back(instance_from_json(j));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            fail(ErrorCode::parse_error,
                 "bad record at line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return instances;
}

std::string file_digest_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_error, "cannot open for digest: " + path);
    std::uint64_t hash = 0xCBF29CE484222325ULL;  // fnv-1a 64
    char buffer[65536];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 0x100000001B3ULL;
        }
        if (in.eof()) break;
    }
    return hex64(hash);
}

std::string manifest_path_for(const std::string& dataset_path) {
    return dataset_path + ".manifest.json";
}

void write_manifest(const DatasetManifest& manifest, const std::string& dataset_path) {
    json j{{"format_version", manifest.format_version},
           {"instance_count", manifest.instance_count},
           {"digest", manifest.digest},
           {"config", manifest.config_echo}};
    std::ofstream out(manifest_path_for(dataset_path), std::ios::binary);
    if (!out) fail(ErrorCode::io_error, "cannot write manifest for " + dataset_path);
    out << j.dump(2) << '\n';
}

DatasetManifest read_manifest(const std::string& dataset_path) {
    std::ifstream in(manifest_path_for(dataset_path), std::ios::binary);
    if (!in) fail(ErrorCode::io_error, "cannot read manifest for " + dataset_path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse_error, "manifest is not valid JSON");
    DatasetManifest manifest;
    manifest.format_version = j.value("format_version", kDatasetFormatVersion);
    manifest.instance_count = j.at("instance_count").get<std::size_t>();
    manifest.digest = j.at("digest").get<std::string>();
    manifest.config_echo = j.value("config", json::object());
    return manifest;
}

nlohmann::json GenerationConfig::to_json() const {
    json motif = json::object();
    for (const auto& [k, w] : motif_mix) motif[to_string(k)] = w;
    json scenario = json::object();
    for (const auto& [k, w] : scenario_mix) scenario[to_string(k)] = w;
    json question = json::object();
    for (const auto& [k, w] : question_mix) question[to_string(k)] = w;
    json noise_prob = json::object();
    for (const auto& [k, p] : noise.probability) noise_prob[to_string(k)] = p;
    json families = json::array();
    for (RuleFamily f : mechanism.families)
        families.push_back(f == RuleFamily::noisy_or ? "noisy_or" : "noisy_and");
    return {{"master_seed", master_seed},
            {"instance_count", instance_count},
            {"node_min", node_min},
            {"node_max", node_max},
            {"motif_mix", motif},
            {"scenario_mix", scenario},
            {"question_mix", question},
            {"noise",
             {{"probability", noise_prob},
              {"vp_delta", noise.vp_delta},
              {"pm_explicit_marker", noise.pm_explicit_marker}}},
            {"mechanism",
             {{"min_permille", mechanism.min_permille},
              {"max_permille", mechanism.max_permille},
              {"grid_permille", mechanism.grid_permille},
              {"min_separation_permille", mechanism.min_separation_permille},
              {"families", families}}},
            {"boolean_fraction", boolean_fraction},
            {"output_path", output_path},
            {"workers", workers},
            {"id_prefix", id_prefix}};
}

GenerationConfig GenerationConfig::from_json(const json& j) {
    GenerationConfig config;
    config.master_seed = j.value("master_seed", 0ULL);
    config.instance_count = j.value("instance_count", std::size_t{0});
    config.node_min = j.value("node_min", 3);
    config.node_max = j.value("node_max", 7);
    if (j.contains("motif_mix")) {
        config.motif_mix.clear();
        for (const auto& [k, w] : j["motif_mix"].items())
            config.motif_mix[motif_from_string(k)] = w.get<double>();
    }
    if (j.contains("scenario_mix")) {
        config.scenario_mix.clear();
        for (const auto& [k, w] : j["scenario_mix"].items())
            config.scenario_mix[scenario_from_string(k)] = w.get<double>();
    }
    if (j.contains("question_mix")) {
        config.question_mix.clear();
        for (const auto& [k, w] : j["question_mix"].items())
            config.question_mix[query_kind_from_string(k)] = w.get<double>();
    }
    if (j.contains("noise")) {
        const json& n = j["noise"];
        const json prob = n.value("probability", json::object());
        for (const auto& [k, p] : prob.items())
            config.noise.probability[noise_kind_from_string(k)] = p.get<double>();
        config.noise.vp_delta = n.value("vp_delta", 0.1);
        config.noise.pm_explicit_marker = n.value("pm_explicit_marker", true);
    }
    if (j.contains("mechanism")) {
        const json& m = j["mechanism"];
        config.mechanism.min_permille = m.value("min_permille", 50);
        config.mechanism.max_permille = m.value("max_permille", 950);
        config.mechanism.grid_permille = m.value("grid_permille", 10);
        config.mechanism.min_separation_permille = m.value("min_separation_permille", 0);
        if (m.contains("families")) {
            config.mechanism.families.clear();
            for (const auto& f : m["families"]) {
                std::string name = f.get<std::string>();
                if (name == "noisy_or")
                    config.mechanism.families.push_back(RuleFamily::noisy_or);
                else if (name == "noisy_and")
                    config.mechanism.families.push_back(RuleFamily::noisy_and);
                else
                    fail(ErrorCode::config_error, "unknown rule family: " + name);
            }
        }
    }
    config.boolean_fraction = j.value("boolean_fraction", 0.25);
    config.output_path = j.value("output_path", std::string{});
    config.workers = j.value("workers", 0);
    config.id_prefix = j.value("id_prefix", std::string{"cb"});
    return config;
}

}  // namespace causalbench
