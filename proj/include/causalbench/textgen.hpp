#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "causalbench/inference.hpp"
#include "causalbench/scm.hpp"

namespace causalbench {

enum class ScenarioDomain { medicine, education, economics };

/// One nameable concept of a scenario vocabulary. Entries without a phrase
/// fall back to generic wording derived from the label, so rendering is
/// total for every entry.
struct VocabEntry {
    std::string label;
    std::set<Role> roles;
    int rank = 1;  // lower rank entries are grounded first; ties broken by seed
    VarDomain domain = VarDomain::binary();
    std::map<std::string, std::string> phrases;
};

/// Full-sentence template pinned to one (child, parent-values) CPT row.
struct ConditionalOverride {
    std::string child;
    std::vector<std::pair<std::string, int>> given;  // (parent label, value)
    std::string text;                                // carries a {p} slot
};

/// Exact question text pinned to one (kind, target) combination.
struct QuestionOverride {
    QueryKind kind = QueryKind::observational;
    std::vector<std::pair<std::string, std::vector<int>>> target;
    std::string text;
};

struct DistractorEntry {
    std::string label;
    std::string sentence;  // carries a {p} slot
};

struct ConfounderEntry {
    std::string label;
};

struct Vocabulary {
    ScenarioDomain domain = ScenarioDomain::medicine;
    std::string opener;
    std::string subject = "cases";  // "people", "students", ...
    std::vector<VocabEntry> entries;
    std::vector<ConditionalOverride> conditional_overrides;
    std::vector<QuestionOverride> question_overrides;
    std::vector<DistractorEntry> distractors;
    std::vector<ConfounderEntry> confounders;

    const VocabEntry* find(const std::string& label) const;
};

/// Built-in default vocabulary, identical to the shipped data file.
const Vocabulary& builtin_vocabulary(ScenarioDomain domain);

/// Loads a vocabulary from a JSON file (same schema as data/vocab/*.json).
Vocabulary load_vocabulary(const std::string& path);
Vocabulary parse_vocabulary(const std::string& json_text);

enum class StatementKind {
    opener,
    prior,
    conditional,
    observation,
    distractor,
    confounder,
    belief,
    reversed,
};

/// One background sentence with enough structure to re-render or restore it.
struct Statement {
    std::string id;
    StatementKind kind = StatementKind::prior;
    std::string text;
    NodeId node = 0;
    bool has_node = false;
    int row = -1;             // CPT row for prior/conditional statements
    long long permille = -1;  // P(value=1) for binary statements

    bool operator==(const Statement&) const = default;
};

/// Assigns scenario labels to nodes: roots get cause-affine entries, sinks
/// outcome-affine ones, inner nodes mediator-affine ones. Injective;
/// deterministic in seed. Throws vocab_exhausted when entries run out.
std::vector<VariableMeta> ground_graph(const Dag& dag, ScenarioDomain domain, std::uint64_t seed);
std::vector<VariableMeta> ground_graph(const Dag& dag, const Vocabulary& vocab,
                                       std::uint64_t seed);

/// One prior statement per root plus one conditional statement per
/// (child, parent-tuple) in topological order, parent tuples descending so
/// the all-true context comes first.
std::vector<Statement> render_background(const Scm& scm, const std::vector<VariableMeta>& metas);
std::vector<Statement> render_background(const Scm& scm, const std::vector<VariableMeta>& metas,
                                         const Vocabulary& vocab);

std::string render_question(const Query& query, const std::vector<VariableMeta>& metas);
std::string render_question(const Query& query, const std::vector<VariableMeta>& metas,
                            const Vocabulary& vocab, int variant);

/// Re-renders a single prior/conditional statement, optionally substituting
/// the stated probability (used by value-perturbation noise).
Statement render_statement(const Scm& scm, const std::vector<VariableMeta>& metas,
                           const Vocabulary& vocab, NodeId node, int row,
                           long long permille_override = -1);

/// Phrase lookup with label-derived fallbacks; never fails for known keys.
std::string phrase(const Vocabulary& vocab, const std::string& label, const std::string& key);

/// "90" for 0.9, "34.5" for 0.345: integer percent when exact, else one decimal.
std::string format_percent(double p);
std::string format_percent_permille(long long permille);

/// Parses a percent string back to the identical stored probability.
double parse_percent(const std::string& text);

std::string capitalize(const std::string& s);

const char* to_string(ScenarioDomain d);
ScenarioDomain scenario_from_string(const std::string& s);

/// Vocabulary for the scenario tag carried by the metas.
const Vocabulary& vocabulary_for(const std::vector<VariableMeta>& metas);

}  // namespace causalbench
