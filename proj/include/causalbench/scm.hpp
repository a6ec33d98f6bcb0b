#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "causalbench/dag.hpp"

namespace causalbench {

enum class DomainKind { binary, categorical };

/// Value domain of one variable. The value order is fixed and serialized:
/// it defines the inverse-CDF canonical compilation, so reordering values
/// changes counterfactual semantics.
struct VarDomain {
    DomainKind kind = DomainKind::binary;
    std::vector<std::string> values = {"0", "1"};

    std::size_t size() const { return values.size(); }
    static VarDomain binary() { return {}; }
    static VarDomain categorical(std::vector<std::string> values);
};

enum class Observability { observed, latent };
enum class Role { cause, mediator, outcome, symptom, distractor, confounder };

struct VariableMeta {
    NodeId node = 0;
    std::string name;
    VarDomain domain;
    Observability observability = Observability::observed;
    Role role = Role::cause;
    std::string scenario;  // vocabulary domain tag, e.g. "medicine"
};

/// Conditional probability table. Rows enumerate the Cartesian product of
/// parent values in canonical order (ascending tuples, last parent varying
/// fastest); each row is a probability vector over the child's value order.
struct Cpt {
    NodeId child = 0;
    std::vector<NodeId> parents;
    std::vector<std::size_t> parent_cards;
    std::vector<std::vector<double>> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t expected_rows() const;
    std::size_t row_index(const std::vector<int>& parent_values) const;
};

struct Scm {
    Dag dag;
    std::vector<VariableMeta> metas;  // indexed by node
    std::vector<Cpt> cpts;            // indexed by node

    std::size_t variable_count() const { return metas.size(); }
    std::size_t domain_size(NodeId v) const { return metas[v].domain.size(); }
};

/// Possibly-partial value assignment; -1 marks unset.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::size_t n) : values_(n, -1) {}

    bool has(NodeId v) const { return v < values_.size() && values_[v] >= 0; }
    int get(NodeId v) const { return values_[v]; }
    void set(NodeId v, int value) {
        if (v >= values_.size()) values_.resize(v + 1, -1);
        values_[v] = value;
    }
    void clear(NodeId v) {
        if (v < values_.size()) values_[v] = -1;
    }
    std::size_t size() const { return values_.size(); }
    std::size_t assigned_count() const;
    bool empty() const;
    bool operator==(const Assignment&) const = default;

  private:
    std::vector<int> values_;
};

enum class RuleFamily { noisy_or, noisy_and };

/// Knobs for mechanism sampling. All probabilities are drawn on a permille
/// grid (multiples of grid_permille thousandths), which keeps rendered
/// percentages and parsed-back values bit-exact.
struct MechanismConfig {
    int min_permille = 50;
    int max_permille = 950;
    int grid_permille = 10;
    int min_separation_permille = 0;  // minimum |p - 0.5| for binary rows, if > 0
    std::vector<RuleFamily> families = {RuleFamily::noisy_or, RuleFamily::noisy_and};
};

/// Inverse-CDF canonical form of one mechanism: the unit interval is cut at
/// every cumulative threshold of every CPT row; each resulting interval is a
/// response class mapping each parent row to one child value.
struct CanonicalNode {
    std::vector<double> cuts;                  // 0 = cuts[0] < ... < cuts.back() = 1
    std::vector<std::vector<double>> row_cdf;  // per row, cumulative sums over the value order

    std::size_t class_count() const { return cuts.size() - 1; }
    double class_weight(std::size_t k) const { return cuts[k + 1] - cuts[k]; }
    int class_value(std::size_t k, std::size_t row) const;
    double interval_lo(std::size_t row, int value) const;
    double interval_hi(std::size_t row, int value) const;
};

struct CanonicalScm {
    std::vector<CanonicalNode> nodes;
};

/// Draws a full CPT for every node. Binary nodes with 2+ parents combine
/// per-parent weights through a noisy AND/OR family from the config; other
/// nodes get independent random rows. Deterministic in (dag, metas, seed, config).
Scm sample_mechanisms(const Dag& dag, const std::vector<VariableMeta>& metas, std::uint64_t seed,
                      const MechanismConfig& config = {});

std::vector<std::string> validate_scm(const Scm& scm);

/// Ancestral sampling in topological order.
Assignment sample_world(const Scm& scm, std::uint64_t seed);

CanonicalScm compile_canonical(const Scm& scm);

const char* to_string(Role r);
const char* to_string(Observability o);
Role role_from_string(const std::string& s);
Observability observability_from_string(const std::string& s);

}  // namespace causalbench
