#include "causalbench/noise.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "causalbench/rng.hpp"

namespace causalbench {

namespace {

using nlohmann::json;

constexpr const char* kMissingMarker = "(Missing)";

const char* statement_kind_name(StatementKind k) {
    switch (k) {
        case StatementKind::opener: return "opener";
        case StatementKind::prior: return "prior";
        case StatementKind::conditional: return "conditional";
        case StatementKind::observation: return "observation";
        case StatementKind::distractor: return "distractor";
        case StatementKind::confounder: return "confounder";
        case StatementKind::belief: return "belief";
        case StatementKind::reversed: return "reversed";
    }
    return "?";
}

StatementKind statement_kind_from_name(const std::string& s) {
    if (s == "opener") return StatementKind::opener;
    if (s == "prior") return StatementKind::prior;
    if (s == "conditional") return StatementKind::conditional;
    if (s == "observation") return StatementKind::observation;
    if (s == "distractor") return StatementKind::distractor;
    if (s == "confounder") return StatementKind::confounder;
    if (s == "belief") return StatementKind::belief;
    if (s == "reversed") return StatementKind::reversed;
    fail(ErrorCode::parse_error, "unknown statement kind: " + s);
}

std::size_t find_statement(const std::vector<Statement>& statements, const std::string& id) {
    for (std::size_t i = 0; i < statements.size(); ++i)
        if (statements[i].id == id) return i;
    fail(ErrorCode::precondition, "statement id not found: " + id);
}

std::string fill_p(const std::string& tmpl, long long permille) {
    std::string out = tmpl;
    auto pos = out.find("{p}");
    if (pos == std::string::npos)
        fail(ErrorCode::template_missing, "sentence lacks a {p} slot: " + tmpl);
    out.replace(pos, 3, format_percent_permille(permille));
    return out;
}

std::vector<NodeId> observed_nodes(const RenderableInstance& inst) {
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < inst.observations.size(); ++v)
        if (inst.observations.has(v)) nodes.push_back(v);
    return nodes;
}

std::string obs_key(NodeId v) { return "obs:" + std::to_string(v); }

// unique id for inserted statements: iv_0, ci_1, ...
std::string fresh_id(const std::vector<Statement>& statements, const std::string& prefix) {
    for (int k = 0;; ++k) {
        std::string id = prefix + "_" + std::to_string(k);
        bool taken = false;
        for (const auto& s : statements) taken = taken || s.id == id;
        if (!taken) return id;
    }
}

NoiseRecord insertion_record(NoiseKind kind, const Statement& stmt, std::size_t position,
                             const AddedVariable* added) {
    NoiseRecord record;
    record.kind = kind;
    record.affected = {stmt.id};
    record.original = json{{"inserted", true}};
    record.replacement = json{{"statement", statement_to_json(stmt)}, {"position", position}};
    if (added)
        record.replacement["added_variable"] = {
            {"name", added->name},
            {"role", to_string(added->role)},
            {"observability", to_string(added->observability)}};
    return record;
}

// ---------------------------------------------------------------------------
// individual injectors
// ---------------------------------------------------------------------------

std::pair<RenderableInstance, NoiseRecord> apply_vp(const RenderableInstance& inst,
                                                    const Scm& scm, Rng& rng,
                                                    const NoiseConfig& config) {
    const long long delta = std::llround(config.vp_delta * 1000.0);

    // (statement index, new permille) shift candidates keeping [0.01, 0.99]
    std::vector<std::pair<std::size_t, long long>> shifts;
    for (std::size_t i = 0; i < inst.statements.size(); ++i) {
        const Statement& s = inst.statements[i];
        if (s.kind != StatementKind::prior && s.kind != StatementKind::conditional) continue;
        if (s.permille < 0 || s.text == kMissingMarker) continue;
        if (s.permille - delta >= 10) shifts.push_back({i, s.permille - delta});
        if (s.permille + delta <= 990) shifts.push_back({i, s.permille + delta});
    }
    std::vector<NodeId> flippable = observed_nodes(inst);

    if (shifts.empty() && flippable.empty())
        fail(ErrorCode::not_applicable, "VP: no probability statement or observation to perturb");

    bool shift_mode = !shifts.empty() && (flippable.empty() || rng.below(2) == 0);
    RenderableInstance out = inst;
    NoiseRecord record;
    record.kind = NoiseKind::VP;

    if (shift_mode) {
        auto [idx, new_permille] = shifts[rng.below(shifts.size())];
        const Statement& old = inst.statements[idx];
        Statement rewritten = render_statement(scm, scm.metas, builtin_vocabulary(inst.domain),
                                               old.node, old.row, new_permille);
        out.statements[idx] = rewritten;
        record.affected = {old.id};
        record.original = {{"statement", statement_to_json(old)}};
        record.replacement = {{"statement", statement_to_json(rewritten)}};
    } else {
        NodeId v = flippable[rng.below(flippable.size())];
        int old_value = inst.observations.get(v);
        int cardinality = static_cast<int>(scm.domain_size(v));
        int new_value =
            cardinality == 2
                ? 1 - old_value
                : (old_value + 1 +
                   static_cast<int>(rng.below(static_cast<std::uint64_t>(cardinality - 1)))) %
                      cardinality;
        out.observations.set(v, new_value);
        record.affected = {obs_key(v)};
        record.original = {{"observation", {{"node", v}, {"value", old_value}}}};
        record.replacement = {{"observation", {{"node", v}, {"value", new_value}}}};
    }
    return {std::move(out), std::move(record)};
}

std::pair<RenderableInstance, NoiseRecord> apply_iv(const RenderableInstance& inst, Rng& rng) {
    const Vocabulary& vocab = builtin_vocabulary(inst.domain);
    if (vocab.distractors.empty())
        fail(ErrorCode::not_applicable, "IV: vocabulary has no distractor entries");
    const DistractorEntry& entry = vocab.distractors[rng.below(vocab.distractors.size())];
    long long permille = (50 + 5 * static_cast<long long>(rng.below(10))) * 10;  // 50%..95%

    Statement stmt;
    stmt.id = fresh_id(inst.statements, "iv");
    stmt.kind = StatementKind::distractor;
    stmt.text = fill_p(entry.sentence, permille);
    stmt.permille = permille;

    RenderableInstance out = inst;
    std::size_t position = out.statements.size();
    out.statements.push_back(stmt);
    AddedVariable added{entry.label, Role::distractor, Observability::observed};
    out.added_variables.push_back(added);
    return {std::move(out), insertion_record(NoiseKind::IV, stmt, position, &added)};
}

std::pair<RenderableInstance, NoiseRecord> apply_pm(const RenderableInstance& inst, Rng& rng,
                                                    const NoiseConfig& config) {
    std::vector<std::size_t> maskable;
    for (std::size_t i = 0; i < inst.statements.size(); ++i) {
        const Statement& s = inst.statements[i];
        if ((s.kind == StatementKind::prior || s.kind == StatementKind::conditional) &&
            s.text != kMissingMarker)
            maskable.push_back(i);
    }
    std::vector<NodeId> obs = observed_nodes(inst);
    if (maskable.empty() && obs.empty())
        fail(ErrorCode::not_applicable, "PM: nothing left to mask");

    bool statement_mode = !maskable.empty() && (obs.empty() || rng.below(2) == 0);
    RenderableInstance out = inst;
    NoiseRecord record;
    record.kind = NoiseKind::PM;

    if (statement_mode) {
        std::size_t idx = maskable[rng.below(maskable.size())];
        const Statement& old = inst.statements[idx];
        record.affected = {old.id};
        record.original = {{"statement", statement_to_json(old)}, {"position", idx}};
        if (config.pm_explicit_marker) {
            Statement masked = old;
            masked.text = kMissingMarker;
            masked.permille = -1;
            out.statements[idx] = masked;
            record.replacement = {{"statement", statement_to_json(masked)}};
        } else {
            out.statements.erase(out.statements.begin() + static_cast<std::ptrdiff_t>(idx));
            record.replacement = {{"removed", true}};
        }
    } else {
        NodeId v = obs[rng.below(obs.size())];
        record.affected = {obs_key(v)};
        record.original = {{"observation", {{"node", v}, {"value", inst.observations.get(v)}}}};
        record.replacement = {{"removed", true}};
        out.observations.clear(v);
    }
    return {std::move(out), std::move(record)};
}

std::pair<RenderableInstance, NoiseRecord> apply_cs(const RenderableInstance& inst,
                                                    const Scm& scm, Rng& rng) {
    if (scm.dag.edges.empty()) fail(ErrorCode::not_applicable, "CS: model has no edges");
    const Vocabulary& vocab = builtin_vocabulary(inst.domain);

    // mode a: replace one conditional statement with the reversed-direction claim
    struct SwapTarget {
        std::size_t stmt_idx;
        NodeId parent, child;
    };
    std::vector<SwapTarget> claims;
    for (std::size_t i = 0; i < inst.statements.size(); ++i) {
        const Statement& s = inst.statements[i];
        if (s.kind != StatementKind::conditional || s.text == kMissingMarker) continue;
        const Cpt& cpt = scm.cpts[s.node];
        if (cpt.parents.empty()) continue;
        NodeId parent = cpt.parents[rng.below(cpt.parents.size())];
        claims.push_back({i, parent, s.node});
    }
    // mode b: swap the observed values of a causally linked pair
    std::vector<Edge> swappable;
    for (const auto& [u, v] : scm.dag.edges)
        if (inst.observations.has(u) && inst.observations.has(v) &&
            inst.observations.get(u) != inst.observations.get(v) &&
            scm.domain_size(u) == scm.domain_size(v))
            swappable.push_back({u, v});

    if (claims.empty() && swappable.empty())
        fail(ErrorCode::not_applicable, "CS: no reversible statement or linked observed pair");

    bool claim_mode = !claims.empty() && (swappable.empty() || rng.below(2) == 0);
    RenderableInstance out = inst;
    NoiseRecord record;
    record.kind = NoiseKind::CS;

    if (claim_mode) {
        SwapTarget target = claims[rng.below(claims.size())];
        const Statement& old = inst.statements[target.stmt_idx];
        Statement reversed = old;
        reversed.kind = StatementKind::reversed;
        reversed.permille = -1;
        reversed.text = phrase(vocab, scm.metas[target.child].name, "people_who") +
                        " are more likely to " +
                        phrase(vocab, scm.metas[target.parent].name, "to_have") + ".";
        out.statements[target.stmt_idx] = reversed;
        record.affected = {old.id};
        record.original = {{"statement", statement_to_json(old)}};
        record.replacement = {{"statement", statement_to_json(reversed)}};
    } else {
        Edge edge = swappable[rng.below(swappable.size())];
        int vu = inst.observations.get(edge.first);
        int vv = inst.observations.get(edge.second);
        out.observations.set(edge.first, vv);
        out.observations.set(edge.second, vu);
        record.affected = {obs_key(edge.first), obs_key(edge.second)};
        record.original = {{"swap",
                            {{"first", {{"node", edge.first}, {"value", vu}}},
                             {"second", {{"node", edge.second}, {"value", vv}}}}}};
        record.replacement = {{"swap",
                               {{"first", {{"node", edge.first}, {"value", vv}}},
                                {"second", {{"node", edge.second}, {"value", vu}}}}}};
    }
    return {std::move(out), std::move(record)};
}

std::pair<RenderableInstance, NoiseRecord> apply_ci(const RenderableInstance& inst,
                                                    const Scm& scm, Rng& rng) {
    if (scm.dag.node_count < 2)
        fail(ErrorCode::not_applicable, "CI: needs at least two variables to confound");
    const Vocabulary& vocab = builtin_vocabulary(inst.domain);
    if (vocab.confounders.empty())
        fail(ErrorCode::not_applicable, "CI: vocabulary has no confounder entries");

    const ConfounderEntry& entry = vocab.confounders[rng.below(vocab.confounders.size())];
    NodeId a = static_cast<NodeId>(rng.below(scm.dag.node_count));
    NodeId b = static_cast<NodeId>(rng.below(scm.dag.node_count - 1));
    if (b >= a) ++b;
    const char* key_a = rng.below(2) ? "tendency_pos" : "tendency_neg";
    const char* key_b = rng.below(2) ? "tendency_pos" : "tendency_neg";

    Statement stmt;
    stmt.id = fresh_id(inst.statements, "ci");
    stmt.kind = StatementKind::confounder;
    stmt.text = "Also, " + vocab.subject + " with " + entry.label + " tend to both " +
                phrase(vocab, scm.metas[a].name, key_a) + " and " +
                phrase(vocab, scm.metas[b].name, key_b) + ".";

    RenderableInstance out = inst;
    std::size_t position = out.statements.size();
    out.statements.push_back(stmt);
    AddedVariable added{entry.label, Role::confounder, Observability::latent};
    out.added_variables.push_back(added);
    return {std::move(out), insertion_record(NoiseKind::CI, stmt, position, &added)};
}

std::pair<RenderableInstance, NoiseRecord> apply_qp(const RenderableInstance& inst,
                                                    const Scm& scm, Rng& rng) {
    const Vocabulary& vocab = builtin_vocabulary(inst.domain);

    // two-edge paths support the counterfactual-inconsistent variant
    std::vector<std::array<NodeId, 3>> paths;
    for (const auto& [r, m] : scm.dag.edges)
        for (NodeId o : scm.dag.children_of(m)) paths.push_back({r, m, o});

    std::string question;
    if (!paths.empty() && rng.below(2) == 0) {
        auto [r, m, o] = paths[rng.below(paths.size())];
        question = "If " + phrase(vocab, scm.metas[r].name, "past_false") + " but " +
                   phrase(vocab, scm.metas[m].name, "still_true") + ", " +
                   phrase(vocab, scm.metas[o].name, "definite_q") + "?";
    } else {
        if (scm.dag.edges.empty()) fail(ErrorCode::not_applicable, "QP: model has no edges");
        Edge e = scm.dag.edges[rng.below(scm.dag.edges.size())];
        question = "Given that " + phrase(vocab, scm.metas[e.first].name, "bare_noun") +
                   " has no effect on " + phrase(vocab, scm.metas[e.second].name, "bare_noun") +
                   ", what is the chance that " +
                   phrase(vocab, scm.metas[e.second].name, "is_true") + "?";
    }
    if (question == inst.question)
        fail(ErrorCode::not_applicable, "QP: perturbed question equals the original");

    RenderableInstance out = inst;
    out.question = question;
    NoiseRecord record;
    record.kind = NoiseKind::QP;
    record.affected = {"question"};
    record.original = {{"question", inst.question}};
    record.replacement = {{"question", question}};
    return {std::move(out), std::move(record)};
}

std::pair<RenderableInstance, NoiseRecord> apply_bip(const RenderableInstance& inst,
                                                     const Scm& scm, Rng& rng) {
    if (scm.dag.edges.empty()) fail(ErrorCode::not_applicable, "BIP: model has no edges");
    const Vocabulary& vocab = builtin_vocabulary(inst.domain);
    Edge e = scm.dag.edges[rng.below(scm.dag.edges.size())];
    // the belief claims the child drives the parent, contradicting the graph
    Statement stmt;
    stmt.id = fresh_id(inst.statements, "belief");
    stmt.kind = StatementKind::belief;
    stmt.text = "Many people believe that " + phrase(vocab, scm.metas[e.second].name, "gerund") +
                " increases the chance of " + phrase(vocab, scm.metas[e.first].name, "bare_noun") +
                ".";

    RenderableInstance out = inst;
    std::size_t position = out.statements.size();
    out.statements.push_back(stmt);
    return {std::move(out), insertion_record(NoiseKind::BIP, stmt, position, nullptr)};
}

}  // namespace

json statement_to_json(const Statement& s) {
    json j{{"id", s.id}, {"kind", statement_kind_name(s.kind)}, {"text", s.text}};
    if (s.has_node) j["node"] = s.node;
    if (s.row >= 0) j["row"] = s.row;
    if (s.permille >= 0) j["permille"] = s.permille;
    return j;
}

Statement statement_from_json(const json& j) {
    Statement s;
    s.id = j.at("id").get<std::string>();
    s.kind = statement_kind_from_name(j.at("kind").get<std::string>());
    s.text = j.at("text").get<std::string>();
    if (j.contains("node")) {
        s.node = j["node"].get<NodeId>();
        s.has_node = true;
    }
    s.row = j.value("row", -1);
    s.permille = j.value("permille", -1LL);
    return s;
}

std::pair<RenderableInstance, NoiseRecord> apply_noise(const RenderableInstance& inst,
                                                       const Scm& scm, NoiseKind kind,
                                                       std::uint64_t seed,
                                                       const NoiseConfig& config) {
    Rng rng(derive_seed(seed, 0xA0ULL + static_cast<std::uint64_t>(kind)));
    switch (kind) {
        case NoiseKind::VP: return apply_vp(inst, scm, rng, config);
        case NoiseKind::IV: return apply_iv(inst, rng);
        case NoiseKind::PM: return apply_pm(inst, rng, config);
        case NoiseKind::CS: return apply_cs(inst, scm, rng);
        case NoiseKind::CI: return apply_ci(inst, scm, rng);
        case NoiseKind::QP: return apply_qp(inst, scm, rng);
        case NoiseKind::BIP: return apply_bip(inst, scm, rng);
    }
    fail(ErrorCode::precondition, "unknown noise kind");
}

const std::vector<NoiseKind>& noise_application_order() {
    static const std::vector<NoiseKind> order{NoiseKind::IV, NoiseKind::CI, NoiseKind::BIP,
                                              NoiseKind::VP, NoiseKind::CS, NoiseKind::PM,
                                              NoiseKind::QP};
    return order;
}

std::pair<RenderableInstance, std::vector<NoiseRecord>> compose_noise(
    const RenderableInstance& inst, const Scm& scm, const std::set<NoiseKind>& kinds,
    std::uint64_t seed, const NoiseConfig& config) {
    if (kinds.empty()) fail(ErrorCode::precondition, "compose_noise with an empty kind set");

    RenderableInstance current = inst;
    std::vector<NoiseRecord> records;
    std::uint64_t step = 0;
    for (NoiseKind kind : noise_application_order()) {
        if (!kinds.count(kind)) continue;
        std::uint64_t sub_seed = derive_seed(seed, 0xC0ULL + step++);
        try {
            auto [next, record] = apply_noise(current, scm, kind, sub_seed, config);
            current = std::move(next);
            records.push_back(std::move(record));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::not_applicable) throw;
            NoiseRecord skip;
            skip.kind = kind;
            skip.applied = false;
            skip.reason = e.what();
            records.push_back(std::move(skip));
        }
    }
    return {std::move(current), std::move(records)};
}

RenderableInstance revert_noise(const RenderableInstance& noisy,
                                const std::vector<NoiseRecord>& records) {
    RenderableInstance out = noisy;
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        const NoiseRecord& record = *it;
        if (!record.applied) continue;

        if (record.original.contains("inserted")) {
            std::size_t pos = record.replacement.at("position").get<std::size_t>();
            Statement inserted = statement_from_json(record.replacement.at("statement"));
            if (pos >= out.statements.size() || !(out.statements[pos] == inserted))
                pos = find_statement(out.statements, inserted.id);
            out.statements.erase(out.statements.begin() + static_cast<std::ptrdiff_t>(pos));
            if (record.replacement.contains("added_variable")) {
                std::string name =
                    record.replacement["added_variable"]["name"].get<std::string>();
                auto match = std::find_if(out.added_variables.begin(), out.added_variables.end(),
                                          [&](const AddedVariable& v) { return v.name == name; });
                if (match != out.added_variables.end()) out.added_variables.erase(match);
            }
        } else if (record.original.contains("statement")) {
            Statement original = statement_from_json(record.original.at("statement"));
            if (record.replacement.contains("removed")) {
                std::size_t pos = record.original.at("position").get<std::size_t>();
                pos = std::min(pos, out.statements.size());
                out.statements.insert(out.statements.begin() + static_cast<std::ptrdiff_t>(pos),
                                      original);
            } else {
                out.statements[find_statement(out.statements, original.id)] = original;
            }
        } else if (record.original.contains("observation")) {
            const auto& obs = record.original["observation"];
            out.observations.set(obs.at("node").get<NodeId>(), obs.at("value").get<int>());
        } else if (record.original.contains("swap")) {
            const auto& first = record.original["swap"]["first"];
            const auto& second = record.original["swap"]["second"];
            out.observations.set(first.at("node").get<NodeId>(), first.at("value").get<int>());
            out.observations.set(second.at("node").get<NodeId>(), second.at("value").get<int>());
        } else if (record.original.contains("question")) {
            out.question = record.original["question"].get<std::string>();
        }
    }
    return out;
}

const char* to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::VP: return "VP";
        case NoiseKind::IV: return "IV";
        case NoiseKind::PM: return "PM";
        case NoiseKind::CS: return "CS";
        case NoiseKind::CI: return "CI";
        case NoiseKind::QP: return "QP";
        case NoiseKind::BIP: return "BIP";
    }
    return "?";
}

NoiseKind noise_kind_from_string(const std::string& s) {
    if (s == "VP") return NoiseKind::VP;
    if (s == "IV") return NoiseKind::IV;
    if (s == "PM") return NoiseKind::PM;
    if (s == "CS") return NoiseKind::CS;
    if (s == "CI") return NoiseKind::CI;
    if (s == "QP") return NoiseKind::QP;
    if (s == "BIP") return NoiseKind::BIP;
    fail(ErrorCode::parse_error, "unknown noise kind: " + s);
}

}  // namespace causalbench
