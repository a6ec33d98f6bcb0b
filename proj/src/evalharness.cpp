#include "causalbench/evalharness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "causalbench/rng.hpp"

namespace causalbench {

namespace {

using nlohmann::json;

std::string lowercased(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::map<std::string, const Instance*> index_instances(const std::vector<Instance>& instances) {
    std::map<std::string, const Instance*> by_id;
    for (const auto& inst : instances) by_id[inst.id] = &inst;
    return by_id;
}

const Instance* lookup(const std::map<std::string, const Instance*>& by_id,
                       const std::string& id) {
    auto it = by_id.find(id);
    return it == by_id.end() ? nullptr : it->second;
}

// Extracts the lines of the "[Causal Graph]" block from a structured prompt.
std::string graph_block_of(const std::string& prompt) {
    std::istringstream in(prompt);
    std::string line, block;
    bool inside = false;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (t == "[Causal Graph]") {
            inside = true;
            continue;
        }
        if (inside) {
            if (t.empty() || t.front() == '[') break;
            block += t + "\n";
        }
    }
    return block;
}

std::string format_row(const std::string& label, const GroupAccuracy& acc) {
    std::ostringstream out;
    out << "  " << label;
    for (std::size_t i = label.size(); i < 24; ++i) out << ' ';
    out << acc.correct << "/" << acc.total;
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "  %.1f%%", 100.0 * acc.accuracy());
    out << buffer;
    return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// backends
// ---------------------------------------------------------------------------

std::string oracle_response(const Instance& inst) {
    return answer_query(inst.scm, inst.query).to_text();
}

ExactOracleBackend::ExactOracleBackend(const std::vector<Instance>& instances)
    : by_id_(index_instances(instances)) {}

std::string ExactOracleBackend::answer(const std::string& /*prompt*/,
                                       const std::string& instance_id) {
    const Instance* inst = lookup(by_id_, instance_id);
    if (!inst) return "";
    return oracle_response(*inst);
}

GraphPromptOracleBackend::GraphPromptOracleBackend(const std::vector<Instance>& instances)
    : by_id_(index_instances(instances)) {}

std::string GraphPromptOracleBackend::answer(const std::string& prompt,
                                             const std::string& instance_id) {
    const Instance* inst = lookup(by_id_, instance_id);
    if (!inst) return "";
    const Scm& truth = inst->scm;

    GraphParse parsed;
    try {
        parsed = parse_graph_response(graph_block_of(prompt), truth.metas);
    } catch (const Error&) {
        return "";  // no usable graph in the prompt
    }

    std::vector<Edge> edges = parsed.edges;
    std::sort(edges.begin(), edges.end());
    if (edges == truth.dag.edges)
        return answer_query(truth, inst->query).to_text();

    // Reconcile the stated numbers onto the prompted structure: every node
    // keeps its true conditional distribution given its *new* parent set.
    Scm guided;
    try {
        guided.dag = Dag::make(truth.dag.node_count, edges);
    } catch (const Error&) {
        return "";  // cyclic graph in the prompt
    }
    guided.metas = truth.metas;
    guided.cpts.resize(truth.dag.node_count);
    for (NodeId v = 0; v < truth.dag.node_count; ++v) {
        Cpt& cpt = guided.cpts[v];
        cpt.child = v;
        cpt.parents = guided.dag.parents_of(v);
        for (NodeId p : cpt.parents) cpt.parent_cards.push_back(truth.metas[p].domain.size());
        const std::size_t d = truth.metas[v].domain.size();
        const std::size_t rows = cpt.expected_rows();
        for (std::size_t r = 0; r < rows; ++r) {
            // decode the parent tuple for this row
            Event given;
            std::size_t idx = r;
            for (std::size_t i = cpt.parents.size(); i-- > 0;) {
                given.push_back({cpt.parents[i],
                                 {static_cast<int>(idx % cpt.parent_cards[i])}});
                idx /= cpt.parent_cards[i];
            }
            std::reverse(given.begin(), given.end());
            std::vector<double> row(d);
            try {
                for (std::size_t value = 0; value < d; ++value)
                    row[value] = query_probability(truth, Event{{v, {static_cast<int>(value)}}},
                                                   given);
            } catch (const Error&) {
                std::fill(row.begin(), row.end(), 1.0 / static_cast<double>(d));
            }
            cpt.rows.push_back(std::move(row));
        }
    }
    try {
        return answer_query(guided, inst->query).to_text();
    } catch (const Error&) {
        return "";
    }
}

ReplayBackend::ReplayBackend(std::map<std::string, std::string> responses)
    : responses_(std::move(responses)) {}

ReplayBackend ReplayBackend::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open response file: " + path);
    std::map<std::string, std::string> responses;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("id") || !j.contains("response"))
            fail(ErrorCode::parse_error,
                 "bad response record at line " + std::to_string(line_no));
        responses[j["id"].get<std::string>()] = j["response"].get<std::string>();
    }
    return ReplayBackend(std::move(responses));
}

std::string ReplayBackend::answer(const std::string& /*prompt*/, const std::string& instance_id) {
    auto it = responses_.find(instance_id);
    return it == responses_.end() ? "" : it->second;
}

// ---------------------------------------------------------------------------
// prompts and parsing
// ---------------------------------------------------------------------------

std::string build_structured_prompt(const Instance& inst, const Dag& graph,
                                    const std::vector<VariableMeta>& metas, bool use_noisy) {
    const auto& statements = use_noisy ? inst.background_noisy : inst.background_clean;
    const auto& observations = use_noisy ? inst.observations_noisy : inst.observations_clean;
    const auto& question = use_noisy ? inst.question_noisy : inst.question_clean;

    std::ostringstream out;
    out << "[Causal Graph]\n";
    for (const auto& [u, v] : graph.edges)
        out << capitalize(metas[u].name) << " -> " << capitalize(metas[v].name) << "\n";
    out << "\n[Observed Variables]\n";
    for (NodeId v = 0; v < observations.size(); ++v)
        if (observations.has(v))
            out << capitalize(metas[v].name) << " = "
                << metas[v].domain.values[static_cast<std::size_t>(observations.get(v))] << "\n";
    out << "\n[Numbers]\n";
    for (const auto& s : statements) out << s.text << "\n";
    out << "\nQuestion: " << question << "\n";
    return out.str();
}

std::string build_natural_prompt(const Instance& inst, bool use_noisy) {
    const auto& statements = use_noisy ? inst.background_noisy : inst.background_clean;
    const auto& observations = use_noisy ? inst.observations_noisy : inst.observations_clean;
    const auto& question = use_noisy ? inst.question_noisy : inst.question_clean;
    const auto& metas = inst.scm.metas;

    std::ostringstream out;
    for (const auto& s : statements) out << s.text << "\n";
    for (NodeId v = 0; v < observations.size(); ++v)
        if (observations.has(v))
            out << "We observe that " << metas[v].name << " is "
                << metas[v].domain.values[static_cast<std::size_t>(observations.get(v))] << ".\n";
    out << "Question: " << question << "\n";
    return out.str();
}

GraphParse parse_graph_response(const std::string& text,
                                const std::vector<VariableMeta>& metas) {
    std::map<std::string, NodeId> by_label;
    for (const auto& meta : metas) by_label[lowercased(meta.name)] = meta.node;

    GraphParse parse;
    std::set<Edge> seen;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("->") == std::string::npos) continue;
        // split on "->"; a chain line yields consecutive pairs
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t arrow = line.find("->", start);
            if (arrow == std::string::npos) {
                parts.push_back(trimmed(line.substr(start)));
                break;
            }
            parts.push_back(trimmed(line.substr(start, arrow - start)));
            start = arrow + 2;
        }
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            auto a = by_label.find(lowercased(parts[i]));
            auto b = by_label.find(lowercased(parts[i + 1]));
            if (a == by_label.end() || b == by_label.end()) {
                ++parse.skipped_labels;
                continue;
            }
            Edge edge{a->second, b->second};
            if (seen.insert(edge).second) parse.edges.push_back(edge);
        }
    }
    if (parse.edges.empty())
        fail(ErrorCode::empty_parse, "no valid edge found in graph response");
    return parse;
}

ParsedAnswer parse_model_answer(const std::string& text) {
    ParsedAnswer best;
    std::size_t best_pos = 0;

    auto consider_numeric = [&](double value, std::size_t pos) {
        if (value < 0.0) return;
        if (value > 1.0 && value <= 100.0) value /= 100.0;
        if (value > 1.0) return;
        if (best.kind == ParsedAnswer::Kind::unparseable || pos >= best_pos) {
            best.kind = ParsedAnswer::Kind::numeric;
            best.value = value;
            best_pos = pos;
        }
    };

    // tokenize on whitespace, keeping source positions
    std::vector<std::pair<std::string, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.push_back({text.substr(start, i - start), start});
    }

    auto strip = [](std::string token) {
        while (!token.empty() && std::string("([{\"'").find(token.front()) != std::string::npos)
            token.erase(token.begin());
        while (!token.empty() &&
               std::string(")]}\"'.,;:!?").find(token.back()) != std::string::npos)
            token.pop_back();
        return token;
    };

    for (std::size_t t = 0; t < tokens.size(); ++t) {
        std::string token = strip(tokens[t].first);
        if (token.empty()) continue;
        std::string lower = lowercased(token);
        if (lower == "yes" || lower == "no") {
            if (best.kind == ParsedAnswer::Kind::unparseable || tokens[t].second >= best_pos) {
                best.kind = ParsedAnswer::Kind::boolean;
                best.flag = lower == "yes";
                best_pos = tokens[t].second;
            }
            continue;
        }
        bool percent = !token.empty() && token.back() == '%';
        if (percent) token.pop_back();
        char* end = nullptr;
        double value = std::strtod(token.c_str(), &end);
        if (end == token.c_str() || end != token.c_str() + token.size()) continue;

        // "X out of Y" pattern
        if (!percent && t + 2 < tokens.size() && lowercased(strip(tokens[t + 1].first)) == "out" &&
            lowercased(strip(tokens[t + 2].first)) == "of" && t + 3 < tokens.size()) {
            std::string denom_token = strip(tokens[t + 3].first);
            char* denom_end = nullptr;
            double denom = std::strtod(denom_token.c_str(), &denom_end);
            if (denom_end == denom_token.c_str() + denom_token.size() && denom > 0.0) {
                double ratio = value / denom;
                if (ratio >= 0.0 && ratio <= 1.0) {
                    if (best.kind == ParsedAnswer::Kind::unparseable ||
                        tokens[t].second >= best_pos) {
                        best.kind = ParsedAnswer::Kind::numeric;
                        best.value = ratio;
                        best_pos = tokens[t].second;
                    }
                    t += 3;
                    continue;
                }
            }
        }
        consider_numeric(percent ? value / 100.0 : value, tokens[t].second);
    }
    return best;
}

// ---------------------------------------------------------------------------
// scoring
// ---------------------------------------------------------------------------

namespace {

bool verdict_for(const Instance& inst, const ParsedAnswer& parsed, double tolerance) {
    if (parsed.kind == ParsedAnswer::Kind::unparseable) return false;
    if (inst.answer.kind == Answer::Kind::probability) {
        if (parsed.kind != ParsedAnswer::Kind::numeric) return false;
        return std::abs(parsed.value - inst.answer.value) <= tolerance;
    }
    bool truth_flag = inst.answer.flag;
    if (parsed.kind == ParsedAnswer::Kind::boolean) return parsed.flag == truth_flag;
    return (parsed.value >= inst.query.threshold) == truth_flag;
}

}  // namespace

ScoreReport score_answers(const std::vector<Instance>& instances,
                          const std::map<std::string, std::string>& responses,
                          double tolerance) {
    std::vector<std::string> missing;
    for (const auto& inst : instances)
        if (!responses.count(inst.id)) missing.push_back(inst.id);
    if (!missing.empty()) {
        std::string joined;
        for (std::size_t i = 0; i < missing.size() && i < 10; ++i)
            joined += (i ? ", " : "") + missing[i];
        if (missing.size() > 10) joined += ", ...";
        fail(ErrorCode::missing_response,
             "missing responses for " + std::to_string(missing.size()) + " instance(s): " +
                 joined);
    }

    ScoreReport report;
    report.tolerance = tolerance;
    for (const auto& inst : instances) {
        ParsedAnswer parsed = parse_model_answer(responses.at(inst.id));
        bool correct = verdict_for(inst, parsed, tolerance);

        report.verdicts.push_back({inst.id, correct, parsed});
        ++report.overall.total;
        if (correct) ++report.overall.correct;

        std::size_t combo = inst.noise_records.size();
        ++report.by_combo_size[combo].total;
        if (correct) ++report.by_combo_size[combo].correct;

        if (inst.noise_records.empty()) {
            ++report.by_noise_kind["W/O Noise"].total;
            if (correct) ++report.by_noise_kind["W/O Noise"].correct;
        } else {
            for (const auto& record : inst.noise_records) {
                ++report.by_noise_kind[to_string(record.kind)].total;
                if (correct) ++report.by_noise_kind[to_string(record.kind)].correct;
            }
        }
    }
    return report;
}

std::string ScoreReport::to_text() const {
    std::ostringstream out;
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f", 100.0 * overall.accuracy());
    out << "Accuracy report (tolerance " << format_probability(tolerance) << ")\n";
    out << "  overall: " << overall.correct << "/" << overall.total << " (" << buffer << "%)\n";
    out << "By noise type:\n";
    const char* columns[] = {"W/O Noise", "VP", "IV", "CS", "PM", "CI", "QP", "BIP"};
    for (const char* column : columns) {
        auto it = by_noise_kind.find(column);
        if (it != by_noise_kind.end()) out << format_row(column, it->second) << "\n";
    }
    out << "By number of composed noise types:\n";
    for (const auto& [size, acc] : by_combo_size)
        out << format_row(std::to_string(size) + " noise type(s)", acc) << "\n";
    return out.str();
}

json ScoreReport::to_json() const {
    json kinds = json::object();
    for (const auto& [kind, acc] : by_noise_kind)
        kinds[kind] = {{"correct", acc.correct}, {"total", acc.total}, {"accuracy", acc.accuracy()}};
    json sizes = json::object();
    for (const auto& [size, acc] : by_combo_size)
        sizes[std::to_string(size)] = {{"correct", acc.correct},
                                       {"total", acc.total},
                                       {"accuracy", acc.accuracy()}};
    json verdict_list = json::array();
    for (const auto& v : verdicts)
        verdict_list.push_back(
            {{"id", v.id},
             {"correct", v.correct},
             {"parsed_kind", v.parsed.kind == ParsedAnswer::Kind::numeric    ? "numeric"
                             : v.parsed.kind == ParsedAnswer::Kind::boolean ? "boolean"
                                                                            : "unparseable"}});
    return {{"tolerance", tolerance},
            {"overall",
             {{"correct", overall.correct},
              {"total", overall.total},
              {"accuracy", overall.accuracy()}}},
            {"by_noise_kind", kinds},
            {"by_combo_size", sizes},
            {"verdicts", verdict_list}};
}

std::map<std::string, std::string> collect_responses(const std::vector<Instance>& instances,
                                                     ModelBackend& backend, int workers,
                                                     bool use_noisy) {
    std::vector<std::pair<std::string, std::string>> prompts;
    prompts.reserve(instances.size());
    for (const auto& inst : instances)
        prompts.push_back(
            {inst.id, build_structured_prompt(inst, inst.scm.dag, inst.scm.metas, use_noisy)});

    std::vector<std::string> answers(prompts.size());
    unsigned pool_size = backend.serial() ? 1u
                         : workers > 0    ? static_cast<unsigned>(workers)
                                          : std::max(1u, std::thread::hardware_concurrency());
    pool_size = std::min<unsigned>(pool_size, static_cast<unsigned>(prompts.size()));

    if (pool_size <= 1) {
        for (std::size_t i = 0; i < prompts.size(); ++i)
            answers[i] = backend.answer(prompts[i].second, prompts[i].first);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < pool_size; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= prompts.size()) return;
                    answers[i] = backend.answer(prompts[i].second, prompts[i].first);
                }
            });
        for (auto& t : pool) t.join();
    }

    std::map<std::string, std::string> responses;
    for (std::size_t i = 0; i < prompts.size(); ++i) responses[prompts[i].first] = answers[i];
    return responses;
}

std::string SensitivityRow::label() const {
    if (baseline) return "Oracle Graph (no error)";
    std::string name = kind == PerturbKind::edge_deletion      ? "ED"
                       : kind == PerturbKind::false_edge       ? "FE"
                                                               : "DR";
    return name + " x" + std::to_string(count);
}

std::vector<SensitivityRow> run_sensitivity_suite(const std::vector<Instance>& instances,
                                                  const std::vector<PerturbKind>& kinds,
                                                  const std::vector<std::size_t>& counts,
                                                  ModelBackend& backend, std::uint64_t seed,
                                                  double tolerance, int workers) {
    std::vector<SensitivityRow> rows;

    auto score_prompts = [&](const std::vector<const Instance*>& subset,
                             const std::vector<std::string>& prompts) {
        std::vector<std::string> answers(subset.size());
        unsigned pool_size = backend.serial() ? 1u
                             : workers > 0    ? static_cast<unsigned>(workers)
                                              : std::max(1u, std::thread::hardware_concurrency());
        pool_size = std::min<unsigned>(pool_size, static_cast<unsigned>(std::max<std::size_t>(
                                                      subset.size(), 1)));
        if (pool_size <= 1) {
            for (std::size_t i = 0; i < subset.size(); ++i)
                answers[i] = backend.answer(prompts[i], subset[i]->id);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < pool_size; ++w)
                pool.emplace_back([&] {
                    while (true) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= subset.size()) return;
                        answers[i] = backend.answer(prompts[i], subset[i]->id);
                    }
                });
            for (auto& t : pool) t.join();
        }
        GroupAccuracy acc;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            ++acc.total;
            if (verdict_for(*subset[i], parse_model_answer(answers[i]), tolerance)) ++acc.correct;
        }
        return acc;
    };

    // baseline: the true graphs
    {
        std::vector<const Instance*> subset;
        std::vector<std::string> prompts;
        for (const auto& inst : instances) {
            subset.push_back(&inst);
            prompts.push_back(build_structured_prompt(inst, inst.scm.dag, inst.scm.metas));
        }
        SensitivityRow row;
        row.baseline = true;
        row.score = score_prompts(subset, prompts);
        rows.push_back(row);
    }

    for (PerturbKind kind : kinds) {
        for (std::size_t count : counts) {
            SensitivityRow row;
            row.kind = kind;
            row.count = count;
            std::vector<const Instance*> subset;
            std::vector<std::string> prompts;
            for (std::size_t i = 0; i < instances.size(); ++i) {
                const Instance& inst = instances[i];
                std::uint64_t edit_seed =
                    derive_seed(seed, (static_cast<std::uint64_t>(kind) << 32) ^
                                          (count << 20) ^ i);
                try {
                    auto [perturbed, records] =
                        perturb_graph(inst.scm.dag, kind, count, edit_seed);
                    subset.push_back(&inst);
                    prompts.push_back(build_structured_prompt(inst, perturbed, inst.scm.metas));
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::no_valid_perturbation &&
                        e.code() != ErrorCode::precondition)
                        throw;
                    ++row.skipped;
                }
            }
            row.score = score_prompts(subset, prompts);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sensitivity_to_text(const std::vector<SensitivityRow>& rows) {
    std::ostringstream out;
    out << "Graph perturbation sensitivity\n";
    for (const auto& row : rows) {
        out << format_row(row.label(), row.score);
        if (row.skipped) out << "  (skipped " << row.skipped << ")";
        out << "\n";
    }
    return out.str();
}

json sensitivity_to_json(const std::vector<SensitivityRow>& rows) {
    json out = json::array();
    for (const auto& row : rows)
        out.push_back({{"label", row.label()},
                       {"baseline", row.baseline},
                       {"kind", row.baseline ? "none" : to_string(row.kind)},
                       {"count", row.count},
                       {"correct", row.score.correct},
                       {"total", row.score.total},
                       {"accuracy", row.score.accuracy()},
                       {"skipped", row.skipped}});
    return out;
}

StructureReport score_structure_discovery(
    const std::map<std::string, std::vector<Edge>>& predicted,
    const std::vector<Instance>& instances) {
    std::vector<std::string> missing;
    for (const auto& inst : instances)
        if (!predicted.count(inst.id)) missing.push_back(inst.id);
    if (!missing.empty())
        fail(ErrorCode::missing_prediction,
             "missing predictions for " + std::to_string(missing.size()) + " instance(s), first: " +
                 missing.front());

    StructureReport report;
    for (const auto& inst : instances) {
        EdgeMetrics m = edge_metrics(predicted.at(inst.id), inst.scm.dag);
        report.true_positives += m.true_positives;
        report.false_positives += m.false_positives;
        report.false_negatives += m.false_negatives;
        report.per_instance.push_back({inst.id, m});
    }
    const auto tp = static_cast<double>(report.true_positives);
    if (report.true_positives + report.false_positives > 0)
        report.micro_precision = tp / static_cast<double>(report.true_positives +
                                                          report.false_positives);
    if (report.true_positives + report.false_negatives > 0)
        report.micro_recall =
            tp / static_cast<double>(report.true_positives + report.false_negatives);
    if (report.micro_precision + report.micro_recall > 0)
        report.micro_f1 = 2.0 * report.micro_precision * report.micro_recall /
                          (report.micro_precision + report.micro_recall);
    return report;
}

std::string StructureReport::to_text() const {
    std::ostringstream out;
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer), "micro P %.1f / R %.1f / F1 %.1f",
                  100.0 * micro_precision, 100.0 * micro_recall, 100.0 * micro_f1);
    out << "Structure discovery (edge level, micro-averaged)\n  " << buffer << "\n  TP "
        << true_positives << ", FP " << false_positives << ", FN " << false_negatives << ", over "
        << per_instance.size() << " instance(s)\n";
    return out.str();
}

json StructureReport::to_json() const {
    json per = json::array();
    for (const auto& [id, m] : per_instance)
        per.push_back({{"id", id},
                       {"precision", m.precision},
                       {"recall", m.recall},
                       {"f1", m.f1},
                       {"tp", m.true_positives},
                       {"fp", m.false_positives},
                       {"fn", m.false_negatives}});
    return {{"averaging", "micro"},
            {"micro_precision", micro_precision},
            {"micro_recall", micro_recall},
            {"micro_f1", micro_f1},
            {"true_positives", true_positives},
            {"false_positives", false_positives},
            {"false_negatives", false_negatives},
            {"per_instance", per}};
}

}  // namespace causalbench
