#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "causalbench/dataset.hpp"

namespace causalbench {

/// An answering capability. Implementations must either be safe to call from
/// several threads or declare themselves serial.
class ModelBackend {
  public:
    virtual ~ModelBackend() = default;
    virtual std::string answer(const std::string& prompt, const std::string& instance_id) = 0;
    virtual bool serial() const { return false; }
};

/// Perfect oracle: exact inference on the instance's own model. Ignores the
/// prompt text; answers as canonical decimal strings (or yes/no).
/// Holds references into the given vector, which must outlive the backend.
class ExactOracleBackend : public ModelBackend {
  public:
    explicit ExactOracleBackend(const std::vector<Instance>& instances);
    std::string answer(const std::string& prompt, const std::string& instance_id) override;

  private:
    std::map<std::string, const Instance*> by_id_;
};

/// Graph-guided oracle: takes the causal structure from the prompt's
/// [Causal Graph] block and reconciles the instance's true conditionals onto
/// that structure before answering. With the true graph it is exact; with a
/// perturbed graph its answers degrade the way a faithful graph-guided
/// reasoner would. Holds references into the given vector.
class GraphPromptOracleBackend : public ModelBackend {
  public:
    explicit GraphPromptOracleBackend(const std::vector<Instance>& instances);
    std::string answer(const std::string& prompt, const std::string& instance_id) override;

  private:
    std::map<std::string, const Instance*> by_id_;
};

/// Replays canned responses keyed by instance id (line-delimited JSON file
/// with "id" and "response" fields). Unknown ids answer with an empty string.
class ReplayBackend : public ModelBackend {
  public:
    explicit ReplayBackend(std::map<std::string, std::string> responses);
    static ReplayBackend from_file(const std::string& path);
    std::string answer(const std::string& prompt, const std::string& instance_id) override;

  private:
    std::map<std::string, std::string> responses_;
};

/// Exact answer text for one instance, as the oracle backend would reply.
std::string oracle_response(const Instance& inst);

struct ParsedAnswer {
    enum class Kind { numeric, boolean, unparseable };
    Kind kind = Kind::unparseable;
    double value = 0.0;
    bool flag = false;
};

/// Pulls the final numeric or yes/no token out of free-form response text.
/// Accepts "0.025", "2.5%", "25 out of 1000"; numbers in (1,100] are read as
/// percentages. Anything else is unparseable (a value, not an error).
ParsedAnswer parse_model_answer(const std::string& text);

/// Structured prompt: [Causal Graph] edge lines, [Observed Variables]
/// assignments, [Numbers] background statements, then the question.
/// Byte-deterministic. The graph argument may differ from the instance's own
/// (perturbation studies swap it out).
std::string build_structured_prompt(const Instance& inst, const Dag& graph,
                                    const std::vector<VariableMeta>& metas,
                                    bool use_noisy = true);

/// Plain prose variant of the same content, without the labeled blocks.
std::string build_natural_prompt(const Instance& inst, bool use_noisy = true);

struct GraphParse {
    std::vector<Edge> edges;      // deduplicated, in first-seen order
    std::size_t skipped_labels = 0;
};

/// Parses "A -> B" lines (case-insensitive labels, whitespace tolerant,
/// chains allowed). Unknown labels are counted, not fatal; an output with no
/// valid edge at all is an empty_parse error.
GraphParse parse_graph_response(const std::string& text,
                                const std::vector<VariableMeta>& metas);

struct Verdict {
    std::string id;
    bool correct = false;
    ParsedAnswer parsed;
};

struct GroupAccuracy {
    std::size_t correct = 0;
    std::size_t total = 0;
    double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / total; }
};

struct ScoreReport {
    double tolerance = 0.01;
    GroupAccuracy overall;
    std::map<std::string, GroupAccuracy> by_noise_kind;  // "W/O Noise" for clean instances
    std::map<std::size_t, GroupAccuracy> by_combo_size;
    std::vector<Verdict> verdicts;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Numeric verdicts use |parsed - truth| <= tolerance; boolean verdicts use
/// equality (numeric responses to yes/no questions pass through the query
/// threshold). Unparseable responses count as incorrect.
ScoreReport score_answers(const std::vector<Instance>& instances,
                          const std::map<std::string, std::string>& responses,
                          double tolerance = 0.01);

/// Asks the backend about every instance through the structured prompt path.
std::map<std::string, std::string> collect_responses(const std::vector<Instance>& instances,
                                                     ModelBackend& backend, int workers = 0,
                                                     bool use_noisy = true);

struct SensitivityRow {
    bool baseline = false;
    PerturbKind kind = PerturbKind::edge_deletion;
    std::size_t count = 0;
    GroupAccuracy score;
    std::size_t skipped = 0;  // instances with no valid perturbation

    std::string label() const;
};

/// Graph-perturbation sensitivity protocol: a baseline row with the true
/// graphs, then one row per (kind, count) where each instance's prompt embeds
/// a perturbed graph while text, observations, and ground truth stay fixed.
std::vector<SensitivityRow> run_sensitivity_suite(const std::vector<Instance>& instances,
                                                  const std::vector<PerturbKind>& kinds,
                                                  const std::vector<std::size_t>& counts,
                                                  ModelBackend& backend, std::uint64_t seed,
                                                  double tolerance = 0.01, int workers = 0);

std::string sensitivity_to_text(const std::vector<SensitivityRow>& rows);
nlohmann::json sensitivity_to_json(const std::vector<SensitivityRow>& rows);

struct StructureReport {
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    double micro_precision = 0.0;
    double micro_recall = 0.0;
    double micro_f1 = 0.0;
    std::vector<std::pair<std::string, EdgeMetrics>> per_instance;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Edge-level structure scoring with micro averages over summed counts.
StructureReport score_structure_discovery(
    const std::map<std::string, std::vector<Edge>>& predicted,
    const std::vector<Instance>& instances);

}  // namespace causalbench
