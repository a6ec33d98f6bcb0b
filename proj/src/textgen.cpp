#include "causalbench/textgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "causalbench/rng.hpp"
#include "json.hpp"

namespace causalbench {

namespace builtin_vocab {
extern const char* k_medicine;
extern const char* k_education;
extern const char* k_economics;
}  // namespace builtin_vocab

namespace {

using nlohmann::json;

// Generic wording derived from the label; specialized entries override these
// through their phrase maps.
std::string default_phrase(const std::string& label, const std::string& key) {
    if (key == "prior") return "Now we know that {p}% of cases show " + label + ".";
    if (key == "event") return "of cases will show " + label;
    if (key == "if_true") return label + " is present";
    if (key == "if_false") return label + " is absent";
    if (key == "is_true") return label + " is present";
    if (key == "is_false") return label + " is absent";
    if (key == "do_true") return label + " is made present";
    if (key == "do_false") return label + " is prevented";
    if (key == "had_true") return label + " been present";
    if (key == "had_false") return label + " not been present";
    if (key == "noun") return "the " + label;
    if (key == "bare_noun") return label;
    if (key == "gerund") return label + " being present";
    if (key == "people_who") return "Cases where " + label + " is present";
    if (key == "to_have") return "have shown " + label;
    if (key == "tendency_pos") return "are more likely to show " + label;
    if (key == "tendency_neg") return "are less likely to show " + label;
    if (key == "past_false") return label + " was absent";
    if (key == "still_true") return label + " was still present";
    if (key == "definite_q") return "will " + label + " definitely be present";
    fail(ErrorCode::template_missing, "no phrase key '" + key + "'");
}

// Replaces each {slot}; a slot without a value is a template error.
std::string fill(const std::string& tmpl, const std::map<std::string, std::string>& slots) {
    std::string out;
    out.reserve(tmpl.size());
    for (std::size_t i = 0; i < tmpl.size();) {
        if (tmpl[i] != '{') {
            out.push_back(tmpl[i++]);
            continue;
        }
        auto close = tmpl.find('}', i);
        if (close == std::string::npos)
            fail(ErrorCode::template_missing, "unterminated slot in template: " + tmpl);
        std::string key = tmpl.substr(i + 1, close - i - 1);
        auto it = slots.find(key);
        if (it == slots.end())
            fail(ErrorCode::template_missing, "unfilled slot {" + key + "} in template: " + tmpl);
        out += it->second;
        i = close + 1;
    }
    return out;
}

std::vector<int> decode_row(const Cpt& cpt, int row) {
    std::vector<int> values(cpt.parents.size());
    std::size_t idx = static_cast<std::size_t>(row);
    for (std::size_t i = cpt.parents.size(); i-- > 0;) {
        values[i] = static_cast<int>(idx % cpt.parent_cards[i]);
        idx /= cpt.parent_cards[i];
    }
    return values;
}

std::string condition_clause(const Vocabulary& vocab, const VariableMeta& parent, int value) {
    if (parent.domain.kind == DomainKind::binary)
        return phrase(vocab, parent.name, value == 1 ? "if_true" : "if_false");
    return parent.name + " is " + parent.domain.values[static_cast<std::size_t>(value)];
}

std::string join_clauses(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// "mild in 20% of cases, moderate in 30% of cases, and severe in 50% of cases"
std::string distribution_list(const VarDomain& domain, const std::vector<double>& row) {
    std::vector<std::string> parts;
    for (std::size_t v = 0; v < row.size(); ++v)
        parts.push_back(domain.values[v] + " in " + format_percent(row[v]) + "% of cases");
    if (parts.size() <= 1) return parts.empty() ? "" : parts[0];
    std::string out = parts[0];
    for (std::size_t i = 1; i + 1 < parts.size(); ++i) out += ", " + parts[i];
    out += ", and " + parts.back();
    return out;
}

Vocabulary vocab_from_json(const json& j) {
    Vocabulary vocab;
    vocab.domain = scenario_from_string(j.at("domain").get<std::string>());
    vocab.opener = j.value("opener", std::string{});
    vocab.subject = j.value("subject", std::string{"cases"});
    for (const auto& e : j.at("entries")) {
        VocabEntry entry;
        entry.label = e.at("label").get<std::string>();
        for (const auto& r : e.at("roles")) entry.roles.insert(role_from_string(r));
        entry.rank = e.value("rank", 1);
        if (e.contains("values"))
            entry.domain = VarDomain::categorical(e["values"].get<std::vector<std::string>>());
        if (e.contains("phrases"))
            for (const auto& [key, value] : e["phrases"].items())
                entry.phrases[key] = value.get<std::string>();
        vocab.entries.push_back(std::move(entry));
    }
    for (const auto& o : j.value("conditional_overrides", json::array())) {
        ConditionalOverride ov;
        ov.child = o.at("child").get<std::string>();
        for (const auto& g : o.at("given"))
            ov.given.emplace_back(g[0].get<std::string>(), g[1].get<int>());
        ov.text = o.at("text").get<std::string>();
        vocab.conditional_overrides.push_back(std::move(ov));
    }
    for (const auto& o : j.value("question_overrides", json::array())) {
        QuestionOverride ov;
        ov.kind = query_kind_from_string(o.at("kind").get<std::string>());
        for (const auto& t : o.at("target"))
            ov.target.emplace_back(t[0].get<std::string>(), t[1].get<std::vector<int>>());
        ov.text = o.at("text").get<std::string>();
        vocab.question_overrides.push_back(std::move(ov));
    }
    for (const auto& d : j.value("distractors", json::array()))
        vocab.distractors.push_back(
            {d.at("label").get<std::string>(), d.at("sentence").get<std::string>()});
    for (const auto& c : j.value("confounders", json::array()))
        vocab.confounders.push_back({c.at("label").get<std::string>()});
    return vocab;
}

std::string value_clause(const Vocabulary& vocab, const VariableMeta& meta,
                         const std::vector<int>& allowed) {
    if (allowed.size() == 1 && meta.domain.kind == DomainKind::binary)
        return phrase(vocab, meta.name, allowed[0] == 1 ? "is_true" : "is_false");
    std::vector<std::string> labels;
    for (int v : allowed) labels.push_back(meta.domain.values[static_cast<std::size_t>(v)]);
    return meta.name + " is " + join_clauses(labels, " or ");
}

std::string event_clause(const Vocabulary& vocab, const std::vector<VariableMeta>& metas,
                         const Event& event) {
    std::vector<std::string> parts;
    for (const auto& term : event)
        parts.push_back(value_clause(vocab, metas[term.var], term.allowed));
    return join_clauses(parts, " and ");
}

std::string do_clause(const Vocabulary& vocab, const std::vector<VariableMeta>& metas,
                      const Assignment& a) {
    std::vector<std::string> parts;
    for (NodeId v = 0; v < metas.size(); ++v) {
        if (!a.has(v)) continue;
        const VariableMeta& meta = metas[v];
        if (meta.domain.kind == DomainKind::binary)
            parts.push_back(phrase(vocab, meta.name, a.get(v) == 1 ? "do_true" : "do_false"));
        else
            parts.push_back(meta.name + " is set to " +
                            meta.domain.values[static_cast<std::size_t>(a.get(v))]);
    }
    return join_clauses(parts, " and ");
}

std::string had_clause(const Vocabulary& vocab, const std::vector<VariableMeta>& metas,
                       const Assignment& a) {
    std::vector<std::string> parts;
    for (NodeId v = 0; v < metas.size(); ++v) {
        if (!a.has(v)) continue;
        const VariableMeta& meta = metas[v];
        if (meta.domain.kind == DomainKind::binary)
            parts.push_back(phrase(vocab, meta.name, a.get(v) == 1 ? "had_true" : "had_false"));
        else
            parts.push_back(meta.name + " been " +
                            meta.domain.values[static_cast<std::size_t>(a.get(v))]);
    }
    return join_clauses(parts, " and ");
}

}  // namespace

const VocabEntry* Vocabulary::find(const std::string& label) const {
    for (const auto& entry : entries)
        if (entry.label == label) return &entry;
    return nullptr;
}

const Vocabulary& builtin_vocabulary(ScenarioDomain domain) {
    static const Vocabulary medicine = parse_vocabulary(builtin_vocab::k_medicine);
    static const Vocabulary education = parse_vocabulary(builtin_vocab::k_education);
    static const Vocabulary economics = parse_vocabulary(builtin_vocab::k_economics);
    switch (domain) {
        case ScenarioDomain::medicine: return medicine;
        case ScenarioDomain::education: return education;
        case ScenarioDomain::economics: return economics;
    }
    return medicine;
}

Vocabulary parse_vocabulary(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse_error, "vocabulary is not valid JSON");
    return vocab_from_json(j);
}

Vocabulary load_vocabulary(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open vocabulary file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_vocabulary(buffer.str());
}

std::string phrase(const Vocabulary& vocab, const std::string& label, const std::string& key) {
    if (const VocabEntry* entry = vocab.find(label)) {
        auto it = entry->phrases.find(key);
        if (it != entry->phrases.end()) return it->second;
    }
    return default_phrase(label, key);
}

std::string format_percent_permille(long long permille) {
    long long whole = permille / 10;
    long long tenth = permille % 10;
    if (tenth == 0) return std::to_string(whole);
    return std::to_string(whole) + "." + std::to_string(tenth);
}

std::string format_percent(double p) { return format_percent_permille(std::llround(p * 1000.0)); }

double parse_percent(const std::string& text) {
    // reconstruct the permille integer from the digits so the parsed value is
    // the same double the renderer started from
    try {
        std::size_t dot = text.find('.');
        if (dot == std::string::npos)
            return static_cast<double>(std::stoll(text) * 10) / 1000.0;
        std::string frac = text.substr(dot + 1);
        if (frac.size() == 1) {
            long long permille = std::stoll(text.substr(0, dot)) * 10 + std::stoll(frac);
            return static_cast<double>(permille) / 1000.0;
        }
        return std::stod(text) / 100.0;
    } catch (const std::exception&) {
        fail(ErrorCode::parse_error, "not a percent value: " + text);
    }
}

std::string capitalize(const std::string& s) {
    std::string out = s;
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z')
        out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
}

std::vector<VariableMeta> ground_graph(const Dag& dag, ScenarioDomain domain,
                                       std::uint64_t seed) {
    return ground_graph(dag, builtin_vocabulary(domain), seed);
}

std::vector<VariableMeta> ground_graph(const Dag& dag, const Vocabulary& vocab,
                                       std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x6E0DULL));
    std::vector<bool> used(vocab.entries.size(), false);
    std::vector<VariableMeta> metas(dag.node_count);

    std::vector<bool> has_parent(dag.node_count, false), has_child(dag.node_count, false);
    for (const auto& [u, v] : dag.edges) {
        has_child[u] = true;
        has_parent[v] = true;
    }

    for (NodeId v : dag.topo) {
        Role role =
            !has_parent[v] ? Role::cause : (!has_child[v] ? Role::outcome : Role::mediator);
        std::vector<std::size_t> eligible;
        int best_rank = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < vocab.entries.size(); ++i) {
            if (used[i] || !vocab.entries[i].roles.count(role)) continue;
            if (vocab.entries[i].rank < best_rank) {
                best_rank = vocab.entries[i].rank;
                eligible.clear();
            }
            if (vocab.entries[i].rank == best_rank) eligible.push_back(i);
        }
        if (eligible.empty())
            fail(ErrorCode::vocab_exhausted,
                 "no unused vocabulary entry for role " + std::string(to_string(role)));
        std::size_t pick = eligible[rng.below(eligible.size())];
        used[pick] = true;
        const VocabEntry& entry = vocab.entries[pick];
        metas[v] = {v,    entry.label, entry.domain, Observability::observed,
                    role, to_string(vocab.domain)};
    }
    return metas;
}

Statement render_statement(const Scm& scm, const std::vector<VariableMeta>& metas,
                           const Vocabulary& vocab, NodeId node, int row,
                           long long permille_override) {
    const Cpt& cpt = scm.cpts[node];
    const VariableMeta& meta = metas[node];
    const bool is_root = cpt.parents.empty();
    std::vector<int> parent_values = decode_row(cpt, row);

    Statement stmt;
    stmt.kind = is_root ? StatementKind::prior : StatementKind::conditional;
    stmt.id = is_root ? "prior_" + std::to_string(node)
                      : "cond_" + std::to_string(node) + "_r" + std::to_string(row);
    stmt.node = node;
    stmt.has_node = true;
    stmt.row = row;

    std::vector<std::string> conds;
    for (std::size_t i = 0; i < cpt.parents.size(); ++i)
        conds.push_back(condition_clause(vocab, metas[cpt.parents[i]], parent_values[i]));

    if (meta.domain.kind == DomainKind::binary) {
        long long permille =
            permille_override >= 0
                ? permille_override
                : std::llround(cpt.rows[static_cast<std::size_t>(row)][1] * 1000.0);
        stmt.permille = permille;
        std::map<std::string, std::string> slots{{"p", format_percent_permille(permille)}};
        if (is_root) {
            stmt.text = fill(phrase(vocab, meta.name, "prior"), slots);
        } else {
            const ConditionalOverride* match = nullptr;
            for (const auto& ov : vocab.conditional_overrides) {
                if (ov.child != meta.name || ov.given.size() != cpt.parents.size()) continue;
                bool all = true;
                for (std::size_t i = 0; i < cpt.parents.size() && all; ++i) {
                    bool found = false;
                    for (const auto& [label, value] : ov.given)
                        if (label == metas[cpt.parents[i]].name && value == parent_values[i])
                            found = true;
                    all = found;
                }
                if (all) {
                    match = &ov;
                    break;
                }
            }
            if (match) {
                stmt.text = fill(match->text, slots);
            } else {
                stmt.text = fill("{p}% {event} if {conds}.",
                                 {{"p", slots["p"]},
                                  {"event", phrase(vocab, meta.name, "event")},
                                  {"conds", join_clauses(conds, " and ")}});
            }
        }
    } else {
        const auto& row_probs = cpt.rows[static_cast<std::size_t>(row)];
        std::string list = distribution_list(meta.domain, row_probs);
        stmt.text = is_root ? "Initially, " + meta.name + " is " + list + "."
                            : "When " + join_clauses(conds, " and ") + ", " + meta.name + " is " +
                                  list + ".";
    }
    return stmt;
}

std::vector<Statement> render_background(const Scm& scm, const std::vector<VariableMeta>& metas) {
    return render_background(scm, metas, vocabulary_for(metas));
}

std::vector<Statement> render_background(const Scm& scm, const std::vector<VariableMeta>& metas,
                                         const Vocabulary& vocab) {
    std::vector<Statement> statements;
    if (!vocab.opener.empty()) {
        Statement opener;
        opener.id = "opener";
        opener.kind = StatementKind::opener;
        opener.text = vocab.opener;
        statements.push_back(std::move(opener));
    }
    for (NodeId v : scm.dag.topo) {
        const Cpt& cpt = scm.cpts[v];
        if (cpt.parents.empty()) {
            statements.push_back(render_statement(scm, metas, vocab, v, 0));
        } else {
            // all-true context first, like the worked examples
            for (int row = static_cast<int>(cpt.row_count()) - 1; row >= 0; --row)
                statements.push_back(render_statement(scm, metas, vocab, v, row));
        }
    }
    return statements;
}

std::string render_question(const Query& query, const std::vector<VariableMeta>& metas) {
    return render_question(query, metas, vocabulary_for(metas), 0);
}

std::string render_question(const Query& query, const std::vector<VariableMeta>& metas,
                            const Vocabulary& vocab, int variant) {
    for (const auto& term : query.target)
        if (term.var >= metas.size())
            fail(ErrorCode::unknown_node, "query target variable has no metadata");
    for (const auto& term : query.evidence)
        if (term.var >= metas.size())
            fail(ErrorCode::unknown_node, "query evidence variable has no metadata");

    // pinned question texts first
    auto signature = [&](const Event& event) {
        std::vector<std::pair<std::string, std::vector<int>>> sig;
        for (const auto& term : event) {
            std::vector<int> allowed = term.allowed;
            std::sort(allowed.begin(), allowed.end());
            sig.emplace_back(metas[term.var].name, allowed);
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    auto target_sig = signature(query.target);
    for (const auto& ov : vocab.question_overrides) {
        if (ov.kind != query.kind) continue;
        auto ov_sig = ov.target;
        for (auto& [label, allowed] : ov_sig) std::sort(allowed.begin(), allowed.end());
        std::sort(ov_sig.begin(), ov_sig.end());
        if (ov_sig == target_sig && query.evidence.empty() && query.interventions.empty())
            return ov.text;
    }

    std::string t = event_clause(vocab, metas, query.target);
    std::string e = event_clause(vocab, metas, query.evidence);

    switch (query.kind) {
        case QueryKind::observational: {
            if (variant % 2 == 1)
                return query.evidence.empty()
                           ? "What fraction of cases end up where " + t + "?"
                           : "Among cases where " + e + ", what fraction end up where " + t + "?";
            return query.evidence.empty()
                       ? "What is the chance that " + t + "?"
                       : "Given that " + e + ", what is the chance that " + t + "?";
        }
        case QueryKind::interventional: {
            std::string d = do_clause(vocab, metas, query.interventions);
            if (variant % 2 == 1)
                return "If we intervene so that " + d + ", " +
                       (query.evidence.empty() ? "" : "given that " + e + ", ") +
                       "what is the chance that " + t + "?";
            return "Suppose we make sure that " + d + ". " +
                   (query.evidence.empty() ? "" : "Given that " + e + ", ") +
                   "What is the chance that " + t + "?";
        }
        case QueryKind::counterfactual: {
            std::string h = had_clause(vocab, metas, query.interventions);
            if (query.boolean_form) {
                std::string noun = t;
                if (query.target.size() == 1 && query.target[0].allowed == std::vector<int>{1} &&
                    metas[query.target[0].var].domain.kind == DomainKind::binary)
                    noun = phrase(vocab, metas[query.target[0].var].name, "bare_noun");
                return "We observed that " + e + ". Had " + h + ", would " + noun +
                       " still be likely?";
            }
            if (variant % 2 == 1)
                return "In fact, " + e + ". Had " + h + ", how likely is it that " + t + "?";
            return "We observed that " + e + ". Had " + h + ", what is the chance that " + t +
                   "?";
        }
        case QueryKind::attributional: {
            if (!query.has_cause || query.target.empty())
                fail(ErrorCode::precondition, "attributional question needs cause and target");
            const VariableMeta& outcome = metas[query.target[0].var];
            const VariableMeta& cause = metas[query.cause];
            return "We observed that " + e + ". What caused " +
                   phrase(vocab, outcome.name, "noun") + "? Give the probability that " +
                   phrase(vocab, outcome.name, "bare_noun") + " would not have occurred had " +
                   phrase(vocab, cause.name, "had_false") + ".";
        }
    }
    fail(ErrorCode::precondition, "unknown query kind");
}

const Vocabulary& vocabulary_for(const std::vector<VariableMeta>& metas) {
    if (metas.empty()) fail(ErrorCode::precondition, "no metadata to derive a vocabulary from");
    return builtin_vocabulary(scenario_from_string(metas[0].scenario));
}

const char* to_string(ScenarioDomain d) {
    switch (d) {
        case ScenarioDomain::medicine: return "medicine";
        case ScenarioDomain::education: return "education";
        case ScenarioDomain::economics: return "economics";
    }
    return "?";
}

ScenarioDomain scenario_from_string(const std::string& s) {
    if (s == "medicine") return ScenarioDomain::medicine;
    if (s == "education") return ScenarioDomain::education;
    if (s == "economics") return ScenarioDomain::economics;
    fail(ErrorCode::parse_error, "unknown scenario domain: " + s);
}

}  // namespace causalbench
