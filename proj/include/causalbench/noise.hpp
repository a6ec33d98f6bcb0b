#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "causalbench/textgen.hpp"
#include "json.hpp"

namespace causalbench {

enum class NoiseKind { VP, IV, PM, CS, CI, QP, BIP };

struct NoiseConfig {
    std::map<NoiseKind, double> probability;  // per-kind application chance
    double vp_delta = 0.1;                    // stated-probability shift size
    bool pm_explicit_marker = true;           // "(Missing)" marker vs silent omission
};

/// Variable added by IV/CI noise: never part of the clean model.
struct AddedVariable {
    std::string name;
    Role role = Role::distractor;
    Observability observability = Observability::observed;

    bool operator==(const AddedVariable&) const = default;
};

/// Everything the noise layer may touch, paired with the clean ground truth
/// it must never change.
struct RenderableInstance {
    ScenarioDomain domain = ScenarioDomain::medicine;
    std::vector<Statement> statements;
    Assignment observations;  // over observed model variables
    Query query;
    std::string question;
    Answer clean_answer;  // answer_query over the clean model, never recomputed
    std::vector<AddedVariable> added_variables;

    bool operator==(const RenderableInstance&) const = default;
};

/// Audit record of one noise application (or one recorded skip). The
/// original/replacement payloads carry enough to restore the clean instance.
struct NoiseRecord {
    NoiseKind kind = NoiseKind::VP;
    bool applied = true;
    std::string reason;                 // skip reason when !applied
    std::vector<std::string> affected;  // statement ids, "obs:<node>", "question"
    nlohmann::json original;
    nlohmann::json replacement;
};

/// Applies one noise kind. Throws not_applicable (with a reason) when the
/// instance offers no valid target. clean_answer is carried over unchanged.
std::pair<RenderableInstance, NoiseRecord> apply_noise(const RenderableInstance& inst,
                                                       const Scm& scm, NoiseKind kind,
                                                       std::uint64_t seed,
                                                       const NoiseConfig& config = {});

/// Applies several kinds in the fixed order IV, CI, BIP, VP, CS, PM, QP
/// (insertions, then mutations, then masking, then question edits).
/// Non-applicable kinds are recorded as skips rather than errors.
std::pair<RenderableInstance, std::vector<NoiseRecord>> compose_noise(
    const RenderableInstance& inst, const Scm& scm, const std::set<NoiseKind>& kinds,
    std::uint64_t seed, const NoiseConfig& config = {});

/// Rebuilds the clean instance by replaying records backwards.
RenderableInstance revert_noise(const RenderableInstance& noisy,
                                const std::vector<NoiseRecord>& records);

nlohmann::json statement_to_json(const Statement& s);
Statement statement_from_json(const nlohmann::json& j);

const char* to_string(NoiseKind k);
NoiseKind noise_kind_from_string(const std::string& s);

/// The fixed composition order.
const std::vector<NoiseKind>& noise_application_order();

}  // namespace causalbench
